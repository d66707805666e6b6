#pragma once

#include <string>
#include <string_view>

#include "khayyam/core.hpp"

namespace khayyam {

/// Grammar accepted by parse_equation, reproduced in the CLI help.
inline constexpr std::string_view kEquationGrammar =
    "EQUATION := SIDE \"=\" SIDE\n"
    "SIDE     := TERM ((\"+\" | \"-\") TERM)*\n"
    "TERM     := NUMBER | NUMBER? \"*\"? \"x\" (\"^\" (1 | 2 | 3))?\n"
    "NUMBER   := non-negative decimal, e.g. 3, 0.25, .5\n"
    "Whitespace is ignored between tokens. Terms are moved to the left side and the\n"
    "result is divided by the (positive) x^3 coefficient: \"x^3 + x = 2\" is x^3 + x - 2 = 0.";

/// Parses "x^3 + 3x^2 = 2x + 5" style text into a monic cubic.
///
/// Throws SyntaxError on a grammar violation, DegreeError when there is no x^3
/// term or a power above 3, and LeadingSignError when the combined x^3
/// coefficient is not positive.
CubicEquation parse_equation(std::string_view text);

/// Signed monic form "x^3 + A x^2 + B x + C = 0" using the shortest decimal
/// spelling that reads back to the same doubles.
std::string format_equation(const CubicEquation& eq);

}  // namespace khayyam
