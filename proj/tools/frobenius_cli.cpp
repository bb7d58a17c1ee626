// Command-line front end for the Frobenius solver library.

#include <chrono>
#include <ctime>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobenius/catalog.hpp"
#include "frobenius/euler.hpp"
#include "frobenius/expr_parser.hpp"
#include "frobenius/frobenius.hpp"
#include "frobenius/indicial.hpp"
#include "frobenius/json_io.hpp"
#include "frobenius/problem.hpp"
#include "frobenius/verify.hpp"

using namespace frob;

namespace {

struct Output {
  std::string format = "json";
  bool meta = false;
};

void flatten_csv(const json& j, const std::string& path, std::string& out) {
  if (j.is_structured()) {
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it) flatten_csv(it.value(), path + "/" + it.key(), out);
    } else {
      for (std::size_t k = 0; k < j.size(); ++k) flatten_csv(j[k], path + "/" + std::to_string(k), out);
    }
    return;
  }
  out += path + "," + (j.is_number_float() ? format_double(j.get<double>()) : j.dump()) + "\n";
}

// Series-valued payloads become q1,q2,re,im tables; everything else path,value rows.
void emit(const Output& o, const json& payload, const CSeries2* table = nullptr) {
  if (o.format == "csv") {
    if (table) {
      std::cout << to_csv(*table);
    } else {
      std::string out = "path,value\n";
      flatten_csv(payload, "", out);
      std::cout << out;
    }
  } else {
    std::cout << dump_json(payload) << "\n";
  }
  if (o.meta) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    std::cerr << dump_json(json{{"meta", {{"generated_at", buf}}}}, 0) << "\n";
  }
}

std::vector<Complex> parse_complex_list(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(to_series(*parse_expr(item), {}, 0).constant_term());
    } catch (const SyntaxError&) {
      throw Error(ErrorKind::SchemaError, what + ": '" + item + "' is not a constant");
    }
  }
  if (out.size() != expected)
    throw Error(ErrorKind::SchemaError, what + ": expected " + std::to_string(expected) + " comma-separated values");
  return out;
}

ResonancePolicy parse_policy(const std::string& s) {
  if (s == "refuse") return ResonancePolicy::refuse;
  if (s == "zero-compatible") return ResonancePolicy::zero_compatible;
  throw Error(ErrorKind::SchemaError, "--policy must be refuse or zero-compatible");
}

json solution_payload(const RegularSingularPDE& pde, const FrobeniusSolution& sol) {
  return to_json(sol, convergence_report(pde.A, pde.B, pde.C));
}

template <class T>
bool is_int(Complex z, T& out) {
  if (z.imag() != 0.0 || std::round(z.real()) != z.real() || std::abs(z.real()) > 1e9) return false;
  out = static_cast<T>(z.real());
  return true;
}

std::optional<Family<long long>> detect_family(const EulerPDE& p) {
  std::array<long long, 6> v{};
  const auto arr = p.as_array();
  for (std::size_t k = 0; k < 6; ++k)
    if (!is_int(arr[k], v[k])) return std::nullopt;
  const auto [A, B, C, D, E, F] = v;
  if (C == 0 && B != 0 && D == A && E == B && F == -A) return Family<long long>{FamilyKind::hyperbolic, A, B, 0};
  if (B * B == 4 * A * C && D == 3 * A && E == C + B && F == A && (A != 0 || C != 0))
    return Family<long long>{FamilyKind::parabolic, A, B, C};
  if (B == 0 && A > 0 && C > 0) {
    const auto a = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(A))));
    const auto c = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(C))));
    if (a * a == A && c * c == C && D == 3 * A && E == 3 * C && F == C + A - A * C)
      return Family<long long>{FamilyKind::elliptic, a, 0, c};
  }
  return std::nullopt;
}

json family_json(const Family<long long>& f) {
  const auto pts = integral_points(f);
  json points = json::array(), lines = json::array();
  for (const auto& p : pts.points) points.push_back(json::array({p[0], p[1]}));
  for (const auto& l : pts.lines)
    lines.push_back(json{{"base", json::array({l.base[0], l.base[1]})},
                         {"direction", json::array({l.direction[0], l.direction[1]})}});
  const char* kind = f.kind == FamilyKind::elliptic ? "elliptic" : (f.kind == FamilyKind::parabolic ? "parabolic" : "hyperbolic");
  return json{{"family", kind}, {"parameters", json::array({f.A, f.B, f.C})}, {"points", points}, {"lines", lines}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius-type series solutions of second-order PDEs with regular singularities"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--meta", out.meta, "Also print a timestamp record on stderr");

  std::string problem_path, policy = "refuse";
  int scan_n = -1;

  auto* classify_cmd = app.add_subcommand("classify", "Indicial conic and its classification");
  classify_cmd->add_option("problem", problem_path, "Problem JSON")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Frobenius coefficients D_Q up to the problem order");
  solve_cmd->add_option("problem", problem_path, "Problem JSON")->required();
  solve_cmd->add_option("--policy", policy, "refuse | zero-compatible");

  auto* scan_cmd = app.add_subcommand("scan-resonance", "Resonant shifts of the base point");
  scan_cmd->add_option("problem", problem_path, "Problem JSON")->required();
  scan_cmd->add_option("--N", scan_n, "Scan bound (default: problem order)");

  std::string coeffs_text, family_text;
  int samples = 3;
  auto* euler_cmd = app.add_subcommand("euler", "Euler PDE: conic, class, sample exponents, integral points");
  euler_cmd->add_option("--coeffs", coeffs_text, "A,B,C,D,E,F")->required();
  euler_cmd->add_option("--samples", samples, "Number of sample r values");

  auto* catalog_cmd = app.add_subcommand("catalog", "Named models");
  catalog_cmd->require_subcommand(1);
  auto* catalog_list = catalog_cmd->add_subcommand("list", "List the models");
  std::string model_name_text, point_text = "auto";
  std::vector<std::string> param_texts;
  int catalog_order = 20;
  auto* catalog_solve = catalog_cmd->add_subcommand("solve", "Solve a named model");
  catalog_solve->add_option("name", model_name_text, "Model name")->required();
  catalog_solve->add_option("--param", param_texts, "k=v (repeatable)");
  catalog_solve->add_option("--order", catalog_order, "Truncation order");
  catalog_solve->add_option("--point", point_text, "r,s or auto");
  catalog_solve->add_option("--policy", policy, "refuse | zero-compatible");

  auto* verify_cmd = app.add_subcommand("verify", "Residual of the engine solution under the operator");
  verify_cmd->add_option("problem", problem_path, "Problem JSON")->required();
  verify_cmd->add_option("--policy", policy, "refuse | zero-compatible");

  auto* transform_cmd = app.add_subcommand("transform", "Coordinate transforms");
  transform_cmd->require_subcommand(1);
  std::string direction = "to-euler";
  auto* euler_coords_cmd = transform_cmd->add_subcommand("euler-coordinates", "Map Euler <-> constant-coefficient form");
  euler_coords_cmd->add_option("--coeffs", coeffs_text, "A,B,C,D,E,F")->required();
  euler_coords_cmd->add_option("--direction", direction, "to-euler | to-constant")
      ->check(CLI::IsMember({"to-euler", "to-constant"}));
  std::string a_expr, c_expr;
  int prep_order = 12;
  auto* prepare_cmd = transform_cmd->add_subcommand("prepare-coordinates", "Series f(x), g(y) making A, C constant");
  prepare_cmd->add_option("--A", a_expr, "A(x) expression")->required();
  prepare_cmd->add_option("--C", c_expr, "C(y) expression")->required();
  prepare_cmd->add_option("--order", prep_order, "Truncation order");

  auto* radius_cmd = app.add_subcommand("radius", "Root-test radius estimate of the engine solution");
  radius_cmd->add_option("problem", problem_path, "Problem JSON")->required();
  radius_cmd->add_option("--policy", policy, "refuse | zero-compatible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (classify_cmd->parsed()) {
      const auto p = load_problem(problem_path);
      const auto conic = indicial_of(p.pde);
      ClassifyOptions copt;
      copt.degeneracy_tol = p.tolerances.degeneracy;
      emit(out, json{{"conic", to_json(conic)}, {"class", to_json(classify(conic, copt))}});
    } else if (solve_cmd->parsed() || verify_cmd->parsed() || radius_cmd->parsed()) {
      const auto p = load_problem(problem_path);
      const auto [r0, s0] = resolve_point(p);
      const auto sol = solve(p.pde, r0, s0, p.order, {p.tolerances.resonance, parse_policy(policy)});
      if (solve_cmd->parsed()) {
        emit(out, solution_payload(p.pde, sol), &sol.coeffs);
      } else if (verify_cmd->parsed()) {
        emit(out, to_json(residual_max(p.pde, sol)));
      } else {
        json layers = json::array();
        for (double d : layer_sums(sol.coeffs)) layers.push_back(d);
        emit(out, json{{"radius_estimate", radius_estimate(sol)}, {"layer_sums", layers}});
      }
    } else if (scan_cmd->parsed()) {
      const auto p = load_problem(problem_path);
      const auto [r0, s0] = resolve_point(p);
      emit(out, to_json(resonance_scan(indicial_of(p.pde), r0, s0, scan_n > 0 ? scan_n : p.order,
                                       p.tolerances.resonance)));
    } else if (euler_cmd->parsed()) {
      const auto v = parse_complex_list(coeffs_text, 6, "--coeffs");
      const auto pde = EulerPDE::from_array({v[0], v[1], v[2], v[3], v[4], v[5]});
      const auto conic = indicial_of(pde);
      json result{{"conic", to_json(conic)}};
      try {
        result["class"] = to_json(classify(conic));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ComplexCoefficients) throw;
        result["class"] = nullptr;
      }
      json monomials = json::array();
      for (int k = 0; k < samples; ++k) {
        try {
          const auto roots = solve_for_s(conic, static_cast<double>(k));
          if (roots.all_solutions) {
            monomials.push_back(json{{"r", complex_json(k)}, {"s", "any"}});
            continue;
          }
          for (const auto& s : roots.roots) monomials.push_back(json{{"r", complex_json(k)}, {"s", complex_json(s)}});
        } catch (const Error&) {
        }
      }
      result["sample_monomials"] = monomials;
      if (auto fam = detect_family(pde)) result["integral_points"] = family_json(*fam);
      emit(out, result);
    } else if (catalog_list->parsed()) {
      json arr = json::array();
      for (Model m : kAllModels) {
        const auto& mi = info(m);
        arr.push_back(json{{"name", std::string(mi.name)},
                           {"parameter", std::string(mi.parameter)},
                           {"A", complex_json(mi.A)},
                           {"B", complex_json(mi.B)},
                           {"C", complex_json(mi.C)},
                           {"a", std::string(mi.a)},
                           {"b", std::string(mi.b)},
                           {"c", std::string(mi.c)},
                           {"normalized", mi.normalized},
                           {"conic", std::string(mi.conic)}});
      }
      emit(out, arr);
    } else if (catalog_solve->parsed()) {
      const auto model = model_from_name(model_name_text);
      if (!model) throw Error(ErrorKind::SchemaError, "unknown model '" + model_name_text + "'");
      CatalogEntry entry{*model, {}};
      for (const auto& kv : param_texts) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::SchemaError, "--param expects k=v");
        entry.params[kv.substr(0, eq)] = parse_complex_list(kv.substr(eq + 1), 1, "--param")[0];
      }
      const auto pde = make_pde(entry, catalog_order);
      std::pair<Complex, Complex> pt;
      if (point_text == "auto") {
        pt = auto_point(indicial_of(pde), catalog_order, kDefaultResonanceTol);
      } else {
        const auto v = parse_complex_list(point_text, 2, "--point");
        pt = {v[0], v[1]};
      }
      const auto sol = solve(pde, pt.first, pt.second, catalog_order, {kDefaultResonanceTol, parse_policy(policy)});
      emit(out, solution_payload(pde, sol), &sol.coeffs);
    } else if (euler_coords_cmd->parsed()) {
      const auto v = parse_complex_list(coeffs_text, 6, "--coeffs");
      const auto t = euler_coords<Complex>({v[0], v[1], v[2], v[3], v[4], v[5]},
                                           direction == "to-euler" ? CoordDirection::to_euler : CoordDirection::to_constant);
      json arr = json::array();
      for (const auto& z : t) arr.push_back(complex_json(z));
      emit(out, json{{"direction", direction}, {"coefficients", arr}});
    } else if (prepare_cmd->parsed()) {
      const auto A = parse_series(a_expr, {}, prep_order);
      const auto C = parse_series(c_expr, {}, prep_order);
      const auto prep = prepare_coordinates(A, C);
      emit(out,
           json{{"f", to_json(prep.f)},
                {"g", to_json(prep.g)},
                {"identity_residual_f", preparation_residual(A, prep.f)},
                {"identity_residual_g", preparation_residual(swap_xy(C), swap_xy(prep.g))}});
    }
  } catch (const SyntaxError& e) {
    json err{{"error", "SyntaxError"}, {"message", e.what()},   {"offset", e.offset()},
             {"line", e.line()},       {"column", e.column()}, {"expected", e.expected()}};
    std::cerr << dump_json(err, 0) << "\n";
    return 1;
  } catch (const Error& e) {
    json idx = json::array();
    for (const auto& q : e.indices()) idx.push_back(json::array({q.q1, q.q2}));
    std::cerr << dump_json(json{{"error", std::string(kind_name(e.kind()))}, {"message", e.what()}, {"indices", idx}}, 0)
              << "\n";
    return is_mathematical_refusal(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << dump_json(json{{"error", "InputError"}, {"message", e.what()}}, 0) << "\n";
    return 1;
  }
  return 0;
}
