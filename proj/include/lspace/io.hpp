#pragma once

// JSON and CSV renderings. Rationals are always exact "p/q" strings and
// key order is fixed, so outputs can be diffed.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lspace/intpoly.hpp"
#include "lspace/knotexpr.hpp"
#include "lspace/obstruct.hpp"
#include "lspace/semigroup.hpp"
#include "lspace/upsilon.hpp"

namespace lspace::io {

using Json = nlohmann::ordered_json;

inline Json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(n));
  return Json(n.str());
}

/// Sorted [exponent, coefficient] pairs.
inline Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, integer_json(c)}));
  return out;
}

inline IntPolynomial polynomial_from_json(const Json& j) {
  IntPolynomial out;
  for (const auto& pair : j) {
    const auto& c = pair.at(1);
    out.add_term(pair.at(0).get<std::uint64_t>(),
                 c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>()));
  }
  return out;
}

inline Json to_json(const FormalSemigroup& s, const std::optional<std::vector<std::int64_t>>& generators = std::nullopt) {
  Json out;
  out["genus"] = s.genus();
  out["small_elements"] = s.small_elements();
  out["generators"] = generators ? Json(*generators) : Json(nullptr);
  return out;
}

inline Json to_json(const PiecewiseLinear& f) {
  Json bps = Json::array();
  Json vals = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(to_string(b));
  for (const auto& v : f.values()) vals.push_back(to_string(v));
  Json out;
  out["breakpoints"] = std::move(bps);
  out["values"] = std::move(vals);
  return out;
}

inline PiecewiseLinear pl_from_json(const Json& j) {
  std::vector<Rational> bps, vals;
  for (const auto& b : j.at("breakpoints")) bps.emplace_back(b.get<std::string>());
  for (const auto& v : j.at("values")) vals.emplace_back(v.get<std::string>());
  if (bps.size() != vals.size() || bps.size() < 2) throw Error(ErrorCode::DomainError, "malformed PL json");
  std::vector<Rational> slopes;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) slopes.push_back((vals[i + 1] - vals[i]) / (bps[i + 1] - bps[i]));
  return PiecewiseLinear(std::move(bps), vals.front(), std::move(slopes));
}

inline Json to_json(const JumpSpectrum& s) {
  Json out = Json::array();
  for (const auto& [t, jump] : s.jumps) {
    Json row;
    row["t"] = to_string(t);
    row["jump"] = to_string(jump);
    row["half_t_times_jump"] = to_string(t * jump / 2);
    out.push_back(std::move(row));
  }
  return out;
}

inline Json to_json(const DecompositionResult& d) {
  Json out;
  out["success"] = d.success;
  Json coeffs = Json::object();
  for (const auto& [n, c] : d.coefficients) coeffs[std::to_string(n)] = to_string(c);
  out["coefficients"] = std::move(coeffs);
  out["all_integer"] = d.all_integer;
  out["all_nonnegative"] = d.all_nonnegative;
  if (d.success) {
    out["failure"] = nullptr;
  } else {
    Json failure;
    failure["location"] = to_string(d.failure_location);
    failure["reason"] = std::string(to_string(d.failure_reason));
    out["failure"] = std::move(failure);
  }
  return out;
}

inline Json to_json(const ClosureResult& c) {
  Json out;
  out["closed"] = c.closed;
  out["witness"] = c.witness ? Json::array({c.witness->first, c.witness->second}) : Json(nullptr);
  return out;
}

inline Json to_json(const ObstructionReport& r) {
  Json out;
  out["knot"] = r.knot.to_string();
  out["verdict"] = std::string(to_string(r.verdict));

  Json closure = to_json(r.semigroup_closed);
  closure["anchor"] = anchors::kSemigroupClosure;
  out["semigroup_closure"] = std::move(closure);

  Json jumps;
  jumps["tested_p"] = r.jump_tested;
  Json failures = Json::array();
  for (const auto& f : r.jump_equality_failures) {
    Json row;
    row["p"] = f.p;
    row["jump_at_2_over_p"] = to_string(f.at_two_over_p);
    row["jump_at_4_over_p"] = to_string(f.at_four_over_p);
    failures.push_back(std::move(row));
  }
  jumps["failures"] = std::move(failures);
  jumps["anchor"] = anchors::kJumpEquality;
  out["jump_equality"] = std::move(jumps);

  Json decomposition = to_json(r.decomposition);
  decomposition["anchor"] = anchors::kDecomposition;
  out["decomposition"] = std::move(decomposition);

  Json index;
  index["result"] = std::string(to_string(r.index_criterion));
  index["anchor"] = anchors::kIndexCriterion;
  out["index_criterion"] = std::move(index);

  Json reasons = Json::array();
  for (const auto& reason : r.reasons) {
    Json row;
    row["obstruction"] = reason.obstruction;
    row["anchor"] = reason.anchor;
    row["detail"] = reason.detail;
    reasons.push_back(std::move(row));
  }
  out["reasons"] = std::move(reasons);
  return out;
}

inline Json to_json(const IndependenceMatrix& m) {
  Json out;
  out["kmin"] = m.kmin;
  out["kmax"] = m.kmax;
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  out["entries"] = std::move(rows);
  return out;
}

inline std::string render(const Rational& r, bool decimal) { return decimal ? to_decimal(r) : to_string(r); }

/// (t, f(t)) at every breakpoint plus the uniform grid 2j/subdivisions,
/// sorted by t.
inline std::vector<std::pair<Rational, Rational>> plot_points(const PiecewiseLinear& f, std::int64_t subdivisions) {
  std::vector<Rational> ts = f.breakpoints();
  for (std::int64_t j = 1; j < subdivisions; ++j) ts.push_back(make_rational(2 * j, subdivisions));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<std::pair<Rational, Rational>> out;
  for (auto& t : ts) out.emplace_back(t, evaluate(f, t));
  return out;
}

inline std::string points_csv(const PiecewiseLinear& f, std::int64_t subdivisions, bool decimal = false) {
  std::ostringstream os;
  os << "t,upsilon\n";
  for (const auto& [t, v] : plot_points(f, subdivisions)) os << render(t, decimal) << "," << render(v, decimal) << "\n";
  return os.str();
}

inline std::string matrix_csv(const IndependenceMatrix& m, bool decimal = false) {
  std::ostringstream os;
  os << "k";
  for (auto i = m.kmin; i <= m.kmax; ++i) os << ",lambda_" << i;
  os << "\n";
  for (auto k = m.kmin; k <= m.kmax; ++k) {
    os << k;
    for (auto i = m.kmin; i <= m.kmax; ++i) os << "," << render(m.at(k, i), decimal);
    os << "\n";
  }
  return os.str();
}

}  // namespace lspace::io
