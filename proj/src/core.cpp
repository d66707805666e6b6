#include "khayyam/core.hpp"

#include <string>

#include "khayyam/error.hpp"

namespace khayyam {

namespace {

constexpr std::array<std::string_view, 13> kSpeciesNames = {
    "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10", "S11", "S12", "S13"};

bool positive(double v) { return std::isfinite(v) && v > 0.0; }
bool positive(const Rational& v) { return sgn(v) > 0; }

template <class T>
void check_param(const std::optional<T>& value, bool expected, char name, SpeciesId id) {
  const std::string label = std::string(to_string(id)) + " parameter " + name;
  if (expected && !value) throw DomainError(label + " is required");
  if (!expected && value) throw DomainError(label + " does not belong to this species");
  if (value && !positive(*value)) throw DomainError(label + " must be strictly positive");
}

}  // namespace

std::string_view to_string(SpeciesId id) { return kSpeciesNames.at(number_of(id) - 1); }

std::optional<SpeciesId> species_from_string(std::string_view name) {
  for (SpeciesId id : kAllSpecies) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

template <class T>
void validate(const BasicSpecies<T>& s) {
  const int n = number_of(s.id);
  if (n < 1 || n > 13) throw DomainError("species id out of range");
  const ParamUse use = params_of(s.id);
  check_param(s.a, use.a, 'a', s.id);
  check_param(s.b, use.b, 'b', s.id);
  check_param(s.c, use.c, 'c', s.id);
  check_param(s.l, use.l, 'l', s.id);
}

template void validate(const BasicSpecies<double>&);
template void validate(const BasicSpecies<Rational>&);

double max_abs_coefficient(const QuadraticForm<double>& q) {
  double m = 0.0;
  for (double v : q.coefficients()) m = std::max(m, std::abs(v));
  return m;
}

std::string_view to_string(ConicKind kind) {
  switch (kind) {
    case ConicKind::Circle: return "circle";
    case ConicKind::Parabola: return "parabola";
    case ConicKind::DiameterHyperbola: return "diameter-hyperbola";
    case ConicKind::AsymptoticHyperbola: return "asymptotic-hyperbola";
  }
  return "unknown";
}

std::string_view to_string(ConicRole role) {
  switch (role) {
    case ConicRole::Working1: return "working_1";
    case ConicRole::Working2: return "working_2";
    case ConicRole::Hidden: return "hidden";
  }
  return "unknown";
}

double evaluate_conic(const ImplicitConic& conic, double x, double y) {
  return evaluate_form(conic.form, x, y);
}

double normalized_residual(const ImplicitConic& conic, double x, double y) {
  const double scale = max_abs_coefficient(conic.form);
  const double value = std::abs(evaluate_conic(conic, x, y));
  return scale > 0.0 ? value / scale : value;
}

std::size_t root_count(const std::vector<AcceptedRoot>& roots) {
  std::size_t n = 0;
  for (const auto& r : roots) n += static_cast<std::size_t>(r.multiplicity);
  return n;
}

std::size_t root_count(const std::vector<RealRoot>& roots) {
  std::size_t n = 0;
  for (const auto& r : roots) n += static_cast<std::size_t>(r.multiplicity);
  return n;
}

}  // namespace khayyam
