#pragma once

#include <gmpxx.h>

namespace khayyam {

/// Exact rational scalar used by the identity checks.
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double v) { return v; }

inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline double abs_value(double v) { return v < 0 ? -v : v; }
inline Rational abs_value(const Rational& q) { return abs(q); }

}  // namespace khayyam
