#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "khayyam/core.hpp"
#include "khayyam/error.hpp"

namespace khayyam {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The stored leading coefficient is nonzero unless the polynomial is zero
/// (which is stored as an empty coefficient list).
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<T> low_to_high) : c_(low_to_high) { trim(); }
  explicit UniPoly(std::vector<T> low_to_high) : c_(std::move(low_to_high)) { trim(); }

  static UniPoly constant(T v) { return UniPoly(std::vector<T>{std::move(v)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
  T leading() const { return c_.empty() ? T{} : c_.back(); }

  T operator()(const T& x) const {
    T acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = T(acc * x + c_[i]);
    return acc;
  }

  UniPoly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(T(c_[i] * T(static_cast<long>(i))));
    return UniPoly(std::move(d));
  }

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = T(p.coefficient(i) + q.coefficient(i));
    return UniPoly(std::move(r));
  }

  friend UniPoly operator-(const UniPoly& p, const UniPoly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = T(p.coefficient(i) - q.coefficient(i));
    return UniPoly(std::move(r));
  }

  friend UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> r(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] = T(r[i + j] + p.c_[i] * q.c_[j]);
    }
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  static bool is_zero_value(const T& v) { return v == T{}; }

  std::vector<T> c_;
};

/// Quotient and remainder of p / d. Requires d nonzero; exact over the rationals.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divide(const UniPoly<T>& p, const UniPoly<T>& d) {
  if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  std::vector<T> rem = p.coefficients();
  const int dd = d.degree();
  std::vector<T> quot(rem.size() > static_cast<std::size_t>(dd) ? rem.size() - dd : 0);
  const T lead = d.leading();
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    const T factor = T(rem[static_cast<std::size_t>(k)] / lead);
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k - dd + j)];
      slot = T(slot - factor * d.coefficients()[static_cast<std::size_t>(j)]);
    }
  }
  rem.resize(std::min(rem.size(), static_cast<std::size_t>(dd)));
  return {UniPoly<T>(std::move(quot)), UniPoly<T>(std::move(rem))};
}

/// x^3 + A x^2 + B x + C as a polynomial.
template <class T>
UniPoly<T> cubic_poly(const BasicCubic<T>& eq) {
  return UniPoly<T>{eq.C, eq.B, eq.A, T(1)};
}

/// All real roots of p, ascending, each with its multiplicity.
///
/// The search isolates roots between consecutive critical points (found
/// recursively from the derivative), bisects each monotone bracket with a
/// Newton accelerator, and reports a critical point as a multiple root when
/// p vanishes there to rounding accuracy. Roots closer than sqrt(tol) relative
/// are merged into one entry. Throws ZeroPolynomial for p = 0.
std::vector<RealRoot> real_roots(const UniPoly<double>& p, double tol = 1e-10);

}  // namespace khayyam
