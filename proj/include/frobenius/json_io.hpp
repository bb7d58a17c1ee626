#ifndef FROBENIUS_JSON_IO_HPP
#define FROBENIUS_JSON_IO_HPP

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "frobenius.hpp"
#include "indicial.hpp"
#include "multiseries.hpp"
#include "verify.hpp"

namespace frob {

using json = nlohmann::ordered_json;

/// Doubles are written with 17 significant digits; non-finite values become strings.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void dump(const json& j, std::ostringstream& os, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
        dump(it.value(), os, indent, depth + 1);
      }
      os << nl << close << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      os << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ',';
        if (!flat) os << nl << pad;
        else if (!first && indent > 0) os << ' ';
        first = false;
        dump(v, os, indent, depth + 1);
      }
      if (!flat) os << nl << close;
      os << ']';
      return;
    }
    case json::value_t::number_float: os << format_double(j.get<double>()); return;
    default: os << j.dump(); return;
  }
}

}  // namespace detail

inline std::string dump_json(const json& j, int indent = 2) {
  std::ostringstream os;
  detail::dump(j, os, indent, 0);
  return os.str();
}

inline json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const CSeries2& f) {
  json arr = json::array();
  for (const auto& [q, v] : f.terms()) arr.push_back(json::array({q.q1, q.q2, v.real(), v.imag()}));
  return arr;
}

inline CSeries2 series_from_json(const json& arr, int order) {
  CSeries2::Table t;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 4)
      throw Error(ErrorKind::SchemaError, "series entries must be [q1, q2, re, im]");
    t[{e[0].get<int>(), e[1].get<int>()}] += Complex{e[2].get<double>(), e[3].get<double>()};
  }
  return CSeries2(order, t);
}

inline json to_json(const IndicialConic& c) {
  return json{{"A", complex_json(c.cA)}, {"B", complex_json(c.cB)}, {"C", complex_json(c.cC)},
              {"D", complex_json(c.cD)}, {"E", complex_json(c.cE)}, {"F", complex_json(c.cF)}};
}

inline json to_json(const ConicClass& c) {
  return json{{"discriminant_class", std::string(to_string(c.discriminant_class))},
              {"degenerate", c.degenerate},
              {"degenerate_kind", std::string(to_string(c.degenerate_kind))},
              {"discriminant", c.discriminant},
              {"determinant", c.determinant}};
}

inline json to_json(const ResonanceReport& r) {
  json hits = json::array();
  for (const auto& h : r.hits) hits.push_back(json{{"q1", h.Q.q1}, {"q2", h.Q.q2}, {"magnitude", h.magnitude}});
  return json{{"r0", complex_json(r.r0)}, {"s0", complex_json(r.s0)}, {"N", r.N},
              {"tol", r.tol},             {"hits", hits},             {"nonresonant_up_to", r.nonresonant_up_to}};
}

inline json to_json(const ConvergenceReport& c) {
  return json{{"parabolic_real_type", c.parabolic_real_type},
              {"elliptic_condition", c.elliptic_condition},
              {"hyperbolic_condition", c.hyperbolic_condition},
              {"general_sufficient", c.general_sufficient},
              {"any", c.any}};
}

inline json to_json(const FrobeniusSolution& s, const ConvergenceReport& conv) {
  json out{{"r0", complex_json(s.r0)},
           {"s0", complex_json(s.s0)},
           {"order", s.order},
           {"coeffs", to_json(s.coeffs)},
           {"resonance", to_json(s.resonance)},
           {"convergence", to_json(conv)}};
  if (!s.zeroed_resonances.empty()) {
    json z = json::array();
    for (const auto& q : s.zeroed_resonances) z.push_back(json::array({q.q1, q.q2}));
    out["zeroed_resonances"] = z;
  }
  return out;
}

inline json to_json(const ResidualReport& r) {
  json layers = json::array();
  for (double v : r.per_layer) layers.push_back(v);
  return json{{"max_residual", r.max_residual}, {"per_layer", layers}, {"checked_up_to", r.checked_up_to}};
}

/// q1,q2,re,im rows in canonical order.
inline std::string to_csv(const CSeries2& f) {
  std::string out = "q1,q2,re,im\n";
  for (const auto& [q, v] : f.terms())
    out += std::to_string(q.q1) + "," + std::to_string(q.q2) + "," + format_double(v.real()) + "," +
           format_double(v.imag()) + "\n";
  return out;
}

}  // namespace frob

#endif  // FROBENIUS_JSON_IO_HPP
