#include "khayyam/parser.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <cmath>

#include "khayyam/error.hpp"

namespace khayyam {

namespace {

class EquationParser {
 public:
  explicit EquationParser(std::string_view text) : text_(text) {}

  CubicEquation run() {
    for (char ch : text_) {
      if (static_cast<unsigned char>(ch) > 127) throw SyntaxError("non-ASCII character", pos_);
    }
    parse_side(+1.0);
    skip_space();
    if (!consume('=')) throw SyntaxError("expected '=' or a sign", pos_);
    parse_side(-1.0);
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);

    if (!seen_cube_) throw DegreeError("equation has no x^3 term");
    const double lead = coef_[3];
    if (!(lead > 0.0)) {
      throw LeadingSignError("combined x^3 coefficient must be positive, got " +
                             std::to_string(lead));
    }
    CubicEquation eq{coef_[2] / lead, coef_[1] / lead, coef_[0] / lead};
    for (double* v : {&eq.A, &eq.B, &eq.C}) {
      if (!std::isfinite(*v)) throw SyntaxError("coefficient out of range", 0);
      if (*v == 0.0) *v = 0.0;  // drop negative zero
    }
    return eq;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  bool consume(char ch) {
    if (!peek(ch)) return false;
    ++pos_;
    return true;
  }

  void parse_side(double side_sign) {
    parse_term(side_sign);
    for (;;) {
      if (consume('+')) {
        parse_term(side_sign);
      } else if (consume('-')) {
        parse_term(-side_sign);
      } else {
        return;
      }
    }
  }

  bool at_number_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.';
  }

  double parse_number() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    bool digits = false;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
      ++end;
      digits = true;
    }
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
        digits = true;
      }
    }
    if (!digits) throw SyntaxError("malformed number", start);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value,
                                           std::chars_format::fixed);
    if (ec != std::errc() || ptr != text_.data() + end || !std::isfinite(value)) {
      throw SyntaxError("number out of range", start);
    }
    pos_ = end;
    return value;
  }

  void parse_term(double sign) {
    skip_space();
    const std::size_t start = pos_;
    double coefficient = 1.0;
    bool has_number = false;
    if (at_number_start()) {
      coefficient = parse_number();
      has_number = true;
    }
    const bool star = consume('*');
    if (!consume('x')) {
      if (has_number && !star) {
        add(0, sign * coefficient);
        return;
      }
      throw SyntaxError(star ? "expected 'x' after '*'" : "expected a term", pos_);
    }
    int power = 1;
    if (consume('^')) {
      skip_space();
      const std::size_t digit_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digit_start == pos_) throw SyntaxError("expected an exponent after '^'", pos_);
      const std::string_view digits = text_.substr(digit_start, pos_ - digit_start);
      const std::size_t significant = digits.find_first_not_of('0');
      if (significant == std::string_view::npos) {
        throw SyntaxError("exponent must be 1, 2 or 3", digit_start);
      }
      if (digits.size() - significant > 1 || digits[significant] > '3') {
        throw DegreeError("power x^" + std::string(digits) + " exceeds 3 (column " +
                          std::to_string(start + 1) + ")");
      }
      power = digits[significant] - '0';
    }
    if (power == 3) seen_cube_ = true;
    add(power, sign * coefficient);
  }

  void add(int power, double value) {
    coef_[static_cast<std::size_t>(power)] += value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::array<double, 4> coef_{};
  bool seen_cube_ = false;
};

std::string shortest_decimal(double v) {
  std::array<char, 512> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::fixed);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf.data(), ptr);
}

void append_term(std::string& out, double coefficient, std::string_view power) {
  if (coefficient == 0.0) return;
  out += coefficient < 0.0 ? " - " : " + ";
  const double magnitude = std::abs(coefficient);
  if (power.empty()) {
    out += shortest_decimal(magnitude);
    return;
  }
  if (magnitude != 1.0) out += shortest_decimal(magnitude);
  out += power;
}

}  // namespace

CubicEquation parse_equation(std::string_view text) { return EquationParser(text).run(); }

std::string format_equation(const CubicEquation& eq) {
  std::string out = "x^3";
  append_term(out, eq.A, "x^2");
  append_term(out, eq.B, "x");
  append_term(out, eq.C, "");
  out += " = 0";
  return out;
}

}  // namespace khayyam
