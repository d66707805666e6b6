#include "khayyam/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "khayyam/classifier.hpp"
#include "khayyam/conics.hpp"
#include "khayyam/error.hpp"
#include "khayyam/parser.hpp"
#include "khayyam/render.hpp"
#include "khayyam/solver.hpp"
#include "khayyam/taxonomy.hpp"
#include "khayyam/trials.hpp"

namespace khayyam {

namespace {

using nlohmann::json;

constexpr const char* kJsonSchema =
    "JSON (solve --json): {species, family, equation, cubic{A,B,C}, params{a|b|c|l},\n"
    "  conics[{role, kind, relation, coeffs[xx,xy,yy,x,y,c]}],\n"
    "  roots[{x, y, multiplicity, residual, hidden_residual}], oracle_roots[x...], agreement}";

struct Input {
  std::string equation;
  std::vector<double> coeffs;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

/// Pads by code points so superscripts line up.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t points = 0;
  for (unsigned char ch : s) points += (ch & 0xC0) != 0x80;
  return points >= width ? s + " " : s + std::string(width - points, ' ');
}

CubicEquation read_cubic(const Input& in) {
  const bool has_text = !in.equation.empty();
  const bool has_coeffs = !in.coeffs.empty();
  if (has_text == has_coeffs) {
    throw CLI::ValidationError("give exactly one of an equation or --coeffs A B C");
  }
  if (has_text) return parse_equation(in.equation);
  return {in.coeffs[0], in.coeffs[1], in.coeffs[2]};
}

json params_json(const SpeciesInstance& s) {
  json p = json::object();
  if (s.a) p["a"] = *s.a;
  if (s.b) p["b"] = *s.b;
  if (s.c) p["c"] = *s.c;
  if (s.l) p["l"] = *s.l;
  return p;
}

std::string params_text(const SpeciesInstance& s) {
  std::string out;
  auto add = [&](const char* name, const std::optional<double>& v) {
    if (v) out += (out.empty() ? "" : " ") + std::string(name) + "=" + num(*v);
  };
  add("a", s.a);
  add("b", s.b);
  add("c", s.c);
  add("l", s.l);
  return out;
}

std::array<std::string_view, 3> relations(SpeciesId id) {
  const SpeciesRow& row = species_row(id);
  return {row.working_1, row.working_2, row.hidden};
}

json conics_json(const ConicTriple& t) {
  json arr = json::array();
  const auto rel = relations(t.species.id);
  int i = 0;
  for (ConicRole role : {ConicRole::Working1, ConicRole::Working2, ConicRole::Hidden}) {
    const ImplicitConic& c = t[role];
    arr.push_back({{"role", to_string(role)},
                   {"kind", to_string(c.kind)},
                   {"relation", rel[static_cast<std::size_t>(i++)]},
                   {"coeffs", c.form.coefficients()}});
  }
  return arr;
}

json report_json(const SolveReport& r) {
  json roots = json::array();
  for (const AcceptedRoot& root : r.roots) {
    roots.push_back({{"x", root.x},
                     {"y", root.y},
                     {"multiplicity", root.multiplicity},
                     {"residual", root.cubic_residual},
                     {"hidden_residual", root.hidden_residual}});
  }
  json oracle = json::array();
  for (const RealRoot& o : r.oracle_roots) {
    for (int k = 0; k < o.multiplicity; ++k) oracle.push_back(o.value);
  }
  return {{"species", to_string(r.species.id)},
          {"family", to_string(family_of(r.species.id))},
          {"equation", species_row(r.species.id).equation},
          {"cubic", {{"A", r.cubic.A}, {"B", r.cubic.B}, {"C", r.cubic.C}}},
          {"params", params_json(r.species)},
          {"conics", conics_json(r.triple)},
          {"roots", roots},
          {"oracle_roots", oracle},
          {"agreement", r.agreement}};
}

void print_classification(const SpeciesInstance& s, std::ostream& out) {
  const SpeciesRow& row = species_row(s.id);
  const FamilyInfo& fam = family_info(family_of(s.id));
  out << "species  " << to_string(s.id) << "\n"
      << "equation " << row.equation << "\n"
      << "params   " << params_text(s) << "\n"
      << "family   " << to_string(fam.id) << " (" << fam.name << ")\n"
      << "working  " << pad(std::string(row.working_1), 16) << "[" << to_string(row.kinds[0]) << "]\n"
      << "working  " << pad(std::string(row.working_2), 16) << "[" << to_string(row.kinds[1]) << "]\n"
      << "hidden   " << pad(std::string(row.hidden), 16) << "[" << to_string(row.kinds[2]) << "]\n";
}

void print_report(const SolveReport& r, std::ostream& out) {
  print_classification(r.species, out);
  out << "cubic    " << format_equation(r.cubic) << "\n";
  if (r.roots.empty()) {
    out << "roots    none positive: the working conics do not meet at x > 0\n";
  }
  for (const AcceptedRoot& root : r.roots) {
    out << "root     x=" << num(root.x) << " y=" << num(root.y) << " multiplicity=" << root.multiplicity
        << " cubic_residual=" << num(root.cubic_residual)
        << " hidden_residual=" << num(root.hidden_residual) << "\n";
  }
  out << "oracle  ";
  if (r.oracle_roots.empty()) out << " none";
  for (const RealRoot& o : r.oracle_roots) {
    out << " " << num(o.value);
    if (o.multiplicity > 1) out << " (x" << o.multiplicity << ")";
  }
  out << "\nagreement " << (r.agreement ? "true" : "false") << "\n";
}

std::string table_text() {
  std::string out;
  out += pad("case", 6) + pad("equation", 17) + pad("working pair", 30) + pad("hidden", 12) + "family\n";
  for (SpeciesId id : kAllSpecies) {
    const SpeciesRow& row = species_row(id);
    out += pad("(" + std::to_string(number_of(id)) + ")", 6) + pad(std::string(row.equation), 17) +
           pad(std::string(row.working_1) + ", " + std::string(row.working_2), 30) +
           pad(std::string(row.hidden), 12) + std::string(to_string(family_of(id))) + "\n";
  }
  out += "\nfamilies\n";
  for (Family f : kAllFamilies) {
    const FamilyInfo& info = family_info(f);
    std::string members;
    for (SpeciesId id : info.members) {
      members += (members.empty() ? "" : ", ") + std::string("(") + std::to_string(number_of(id)) + ")";
    }
    out += pad(std::string(to_string(f)), 5) + pad(std::string(info.name), 44) + members +
           "; representative (" + std::to_string(number_of(info.representative)) + ")\n";
  }
  return out;
}

json table_json() {
  json rows = json::array();
  for (SpeciesId id : kAllSpecies) {
    const SpeciesRow& row = species_row(id);
    rows.push_back({{"species", to_string(id)},
                    {"equation", row.equation},
                    {"working", {row.working_1, row.working_2}},
                    {"hidden", row.hidden},
                    {"kinds", {to_string(row.kinds[0]), to_string(row.kinds[1]), to_string(row.kinds[2])}},
                    {"family", to_string(family_of(id))}});
  }
  json fams = json::array();
  for (Family f : kAllFamilies) {
    const FamilyInfo& info = family_info(f);
    json members = json::array();
    for (SpeciesId id : info.members) members.push_back(to_string(id));
    fams.push_back({{"family", to_string(f)},
                    {"name", info.name},
                    {"members", members},
                    {"representative", to_string(info.representative)}});
  }
  return {{"species", rows}, {"families", fams}};
}

int run_fuzz_command(std::size_t n, std::uint64_t seed, double tol, bool as_json, std::ostream& out) {
  const auto summaries = run_fuzz(n, seed, tol);
  bool ok = true;
  json arr = json::array();
  for (const SpeciesSummary& s : summaries) {
    const std::size_t eligible = s.trials - s.near_tangent;
    ok = ok && s.agreed == eligible && s.count_violations == 0;
    if (as_json) {
      arr.push_back({{"species", to_string(s.id)},
                     {"trials", s.trials},
                     {"near_tangent", s.near_tangent},
                     {"agreed", s.agreed},
                     {"count_violations", s.count_violations},
                     {"max_hidden_residual", s.max_hidden_residual}});
    } else {
      out << pad(std::string(to_string(s.id)), 5) << "agreed " << s.agreed << "/" << eligible
          << "  near-tangent " << s.near_tangent << "  count violations " << s.count_violations
          << "  max hidden residual " << num(s.max_hidden_residual) << "\n";
    }
  }
  if (as_json) out << json{{"seed", seed}, {"per_species", n}, {"summary", arr}, {"ok", ok}}.dump(2) << "\n";
  return ok ? kExitOk : kExitVerification;
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("equation", in.equation, "Cubic equation text, e.g. \"x^3 + x = 2\"");
  cmd->add_option("--coeffs", in.coeffs, "Signed monic coefficients A B C of x^3 + A x^2 + B x + C")
      ->expected(3)
      ->allow_extra_args(false);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve real cubics by intersecting conics, species by species."};
  app.footer(std::string("\nEquation grammar:\n") + std::string(kEquationGrammar) + "\n\n" +
             kJsonSchema +
             "\n\nExit status: 0 success (including no positive root), 1 usage or input error,\n"
             "2 cubic outside the thirteen species, 3 fuzz verification failure.");
  app.require_subcommand(1);

  Input input;
  double tol = kDefaultTolerance;
  bool as_json = false;
  std::size_t fuzz = 0;
  std::uint64_t seed = 1;
  std::string output;
  bool no_hidden = false;
  RenderOptions render_opts;

  CLI::App* classify_cmd = app.add_subcommand("classify", "Species, parameters, family and conics of a cubic");
  add_input(classify_cmd, input);
  classify_cmd->add_flag("--json", as_json, "Emit JSON");

  CLI::App* solve_cmd = app.add_subcommand("solve", "Intersect the working conics and read off the roots");
  add_input(solve_cmd, input);
  solve_cmd->add_option("--tol", tol, "Normalized residual tolerance")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--json", as_json, "Emit JSON");
  solve_cmd->add_option("--fuzz", fuzz, "Run N random instances per species instead of one equation");
  solve_cmd->add_option("--seed", seed, "Seed for --fuzz");

  CLI::App* table_cmd = app.add_subcommand("table", "The thirteen species and five families");
  table_cmd->add_flag("--json", as_json, "Emit JSON");

  CLI::App* render_cmd = app.add_subcommand("render", "Write the construction as an SVG diagram");
  add_input(render_cmd, input);
  render_cmd->add_option("-o,--output", output, "SVG file to write (stdout if omitted)");
  render_cmd->add_option("--tol", tol, "Normalized residual tolerance")->check(CLI::PositiveNumber);
  render_cmd->add_flag("--no-hidden", no_hidden, "Leave out the hidden conic");
  render_cmd->add_option("--width", render_opts.width_px, "Canvas width in pixels")->check(CLI::PositiveNumber);
  render_cmd->add_option("--height", render_opts.height_px, "Canvas height in pixels")->check(CLI::PositiveNumber);
  render_cmd->add_option("--samples", render_opts.samples_per_branch, "Samples per conic branch (>= 16)")
      ->check(CLI::Range(16, 1 << 20));

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table_cmd) {
      out << (as_json ? table_json().dump(2) + "\n" : table_text());
      return kExitOk;
    }
    if (*solve_cmd && fuzz > 0) {
      if (!input.equation.empty() || !input.coeffs.empty()) {
        throw CLI::ValidationError("--fuzz does not take an equation");
      }
      return run_fuzz_command(fuzz, seed, tol, as_json, out);
    }

    const CubicEquation eq = read_cubic(input);
    if (*classify_cmd) {
      const SpeciesInstance s = classify(eq);
      if (as_json) {
        out << json{{"species", to_string(s.id)},
                    {"family", to_string(family_of(s.id))},
                    {"equation", species_row(s.id).equation},
                    {"params", params_json(s)},
                    {"conics", conics_json(build_triple(s))}}
                   .dump(2)
            << "\n";
      } else {
        print_classification(s, out);
      }
      return kExitOk;
    }

    const SolveReport report = solve_khayyam(eq, tol);
    if (*solve_cmd) {
      if (as_json) {
        out << report_json(report).dump(2) << "\n";
      } else {
        print_report(report, out);
      }
      return kExitOk;
    }

    render_opts.show_hidden = !no_hidden;
    const std::string svg = render_svg(report, render_opts);
    if (output.empty()) {
      out << svg;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw Error("cannot open " + output + " for writing");
      file << svg;
      if (!file) throw Error("failed writing " + output);
      out << "wrote " << output << "\n";
    }
    return kExitOk;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClassificationError& e) {
    err << "not one of the thirteen species: " << e.what() << "\n";
    return kExitClassification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace khayyam
