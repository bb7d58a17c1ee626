#ifndef FROBENIUS_PROBLEM_HPP
#define FROBENIUS_PROBLEM_HPP

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "expr_parser.hpp"
#include "frobenius.hpp"
#include "indicial.hpp"
#include "json_io.hpp"

namespace frob {

struct Tolerances {
  double resonance = kDefaultResonanceTol;
  double degeneracy = 1e-9;
};

struct ProblemSpec {
  Complex A{}, B{}, C{};
  std::string a_text, b_text, c_text;
  ParamTable params;
  std::optional<std::pair<Complex, Complex>> point;  // empty means "auto"
  int order = 1;
  Tolerances tolerances;
  RegularSingularPDE pde;  // resolved series at `order`
};

namespace detail {

[[noreturn]] inline void schema_fail(const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::SchemaError, pointer + ": " + what);
}

inline Complex complex_from(const json& j, const std::string& pointer) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  schema_fail(pointer, "expected a number or [re, im]");
}

inline std::string string_from(const json& j, const std::string& pointer) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return format_double(j.get<double>());
  schema_fail(pointer, "expected an expression string");
}

}  // namespace detail

/// Validates and resolves a problem document.
inline ProblemSpec problem_from_json(const json& doc) {
  using detail::schema_fail;
  if (!doc.is_object()) schema_fail("", "expected an object");
  ProblemSpec p;
  for (const char* key : {"A", "B", "C", "a", "b", "c", "order"})
    if (!doc.contains(key)) schema_fail(std::string("/") + key, "missing required field");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const std::set<std::string> known = {"A", "B", "C", "a", "b", "c", "params", "point", "order", "tolerances"};
    if (!known.count(it.key())) schema_fail("/" + it.key(), "unknown field");
  }
  p.A = detail::complex_from(doc["A"], "/A");
  p.B = detail::complex_from(doc["B"], "/B");
  p.C = detail::complex_from(doc["C"], "/C");
  p.a_text = detail::string_from(doc["a"], "/a");
  p.b_text = detail::string_from(doc["b"], "/b");
  p.c_text = detail::string_from(doc["c"], "/c");
  if (!doc["order"].is_number_integer() || doc["order"].get<long long>() < 1 || doc["order"].get<long long>() > 2000)
    schema_fail("/order", "expected an integer in [1, 2000]");
  p.order = doc["order"].get<int>();
  if (doc.contains("params")) {
    const auto& ps = doc["params"];
    if (!ps.is_object()) schema_fail("/params", "expected an object");
    for (auto it = ps.begin(); it != ps.end(); ++it)
      p.params[it.key()] = detail::complex_from(it.value(), "/params/" + it.key());
  }
  if (doc.contains("point")) {
    const auto& pt = doc["point"];
    if (pt.is_string()) {
      if (pt.get<std::string>() != "auto") schema_fail("/point", "expected [r, s] or \"auto\"");
    } else if (pt.is_array() && pt.size() == 2) {
      p.point = std::make_pair(detail::complex_from(pt[0], "/point/0"), detail::complex_from(pt[1], "/point/1"));
    } else {
      schema_fail("/point", "expected [r, s] or \"auto\"");
    }
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (!t.is_object()) schema_fail("/tolerances", "expected an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      if (!it.value().is_number() || !(it.value().get<double>() > 0.0))
        schema_fail("/tolerances/" + it.key(), "expected a positive number");
      if (it.key() == "resonance") p.tolerances.resonance = it.value().get<double>();
      else if (it.key() == "degeneracy") p.tolerances.degeneracy = it.value().get<double>();
      else schema_fail("/tolerances/" + it.key(), "unknown tolerance");
    }
  }
  p.pde = RegularSingularPDE(p.A, p.B, p.C, parse_series(p.a_text, p.params, p.order),
                             parse_series(p.b_text, p.params, p.order), parse_series(p.c_text, p.params, p.order));
  return p;
}

inline ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  return problem_from_json(doc);
}

/// Candidate r values 0, 1/2, -1/2, 1, -1, 3/2, -3/2, ... up to |r| <= max_abs_r.
inline std::vector<double> auto_point_grid(double max_abs_r = 20.0) {
  std::vector<double> rs{0.0};
  for (int k = 1; k * 0.5 <= max_abs_r; ++k) {
    rs.push_back(0.5 * k);
    rs.push_back(-0.5 * k);
  }
  return rs;
}

/// First point on the conic, in grid order and root order, whose shifts up to
/// `order` are nonresonant. A fully free s is taken as s = 0.
inline std::pair<Complex, Complex> auto_point(const IndicialConic& conic, int order, double tol) {
  for (double r : auto_point_grid()) {
    SRoots roots;
    try {
      roots = solve_for_s(conic, r);
    } catch (const Error&) {
      continue;
    }
    if (roots.all_solutions) roots.roots = {Complex{}};
    for (const Complex& s : roots.roots) {
      try {
        if (resonance_scan(conic, r, s, order, tol).clean()) return {r, s};
      } catch (const Error&) {
      }
    }
  }
  throw Error(ErrorKind::NoSolution, "no nonresonant conic point on the search grid");
}

inline std::pair<Complex, Complex> resolve_point(const ProblemSpec& p) {
  if (p.point) return *p.point;
  return auto_point(indicial_of(p.pde), p.order, p.tolerances.resonance);
}

}  // namespace frob

#endif  // FROBENIUS_PROBLEM_HPP
