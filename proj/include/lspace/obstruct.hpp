#pragma once

// Obstructions to algebraicity of L-space knots and the lambda_k
// functionals that vanish on every integer combination of Upsilon of
// T(n, n+1) torus knots.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lspace/error.hpp"
#include "lspace/knotexpr.hpp"
#include "lspace/rational.hpp"
#include "lspace/semigroup.hpp"
#include "lspace/upsilon.hpp"

namespace lspace {

enum class DecompositionFailure { NonDyadicLocation, ResidualNonzero };

inline std::string_view to_string(DecompositionFailure f) {
  return f == DecompositionFailure::NonDyadicLocation ? "NonDyadicLocation" : "ResidualNonzero";
}

/// Coefficients c_n with f = sum c_n Upsilon_{T(n,n+1)}, or where peeling
/// got stuck. On failure, coefficients holds what was peeled before.
struct DecompositionResult {
  bool success = false;
  std::map<std::int64_t, Rational> coefficients;
  bool all_integer = true;
  bool all_nonnegative = true;
  Rational failure_location;
  DecompositionFailure failure_reason = DecompositionFailure::ResidualNonzero;

  /// Succeeded with integer coefficients.
  bool integral() const { return success && all_integer; }
};

namespace detail {

/// Memoized Upsilon of T(n, n+1); values are immutable once inserted.
inline const PiecewiseLinear& consecutive_torus_cached(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, PiecewiseLinear> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, torus_consecutive_upsilon(n)).first;
  return it->second;
}

inline bool is_symmetric(const PiecewiseLinear& f) {
  const auto& bps = f.breakpoints();
  const auto vals = f.values();
  const std::size_t m = bps.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (bps[i] + bps[m - 1 - i] != 2) return false;
    if (vals[i] != vals[m - 1 - i]) return false;
  }
  return true;
}

}  // namespace detail

/// Greedy peeling: the least breakpoint t1 of the residual must be 2/n,
/// and only Upsilon_{T(n,n+1)} reaches it, so c_n = jump(t1)/n is forced.
inline DecompositionResult decompose_into_consecutive_torus(const PiecewiseLinear& f) {
  if (f.value_at_zero() != 0) throw Error(ErrorCode::DomainError, "decomposition requires f(0) = 0");
  if (!detail::is_symmetric(f)) throw Error(ErrorCode::DomainError, "decomposition requires f(t) = f(2-t)");

  DecompositionResult out;
  PiecewiseLinear residual = f;
  while (!residual.is_zero()) {
    if (residual.segment_count() < 2) {
      out.failure_location = residual.breakpoints().front();
      out.failure_reason = DecompositionFailure::ResidualNonzero;
      return out;
    }
    const Rational t1 = residual.breakpoints()[1];
    const Rational n_exact = Rational(2) / t1;
    if (!is_integer(n_exact) || n_exact < 2) {
      out.failure_location = t1;
      out.failure_reason = DecompositionFailure::NonDyadicLocation;
      return out;
    }
    const auto n = static_cast<std::int64_t>(numerator_of(n_exact));
    const Rational jump = residual.slopes()[1] - residual.slopes()[0];
    const Rational c = jump / n;
    out.coefficients[n] = c;
    if (!is_integer(c)) out.all_integer = false;
    if (c < 0) out.all_nonnegative = false;
    residual = pl_axpy(residual, -c, detail::consecutive_torus_cached(n));
  }
  out.success = true;
  return out;
}

/// Recombines sum c_n Upsilon_{T(n,n+1)}.
inline PiecewiseLinear recombine(const std::map<std::int64_t, Rational>& coefficients) {
  PiecewiseLinear out;
  for (const auto& [n, c] : coefficients) out = pl_axpy(out, c, detail::consecutive_torus_cached(n));
  return out;
}

struct JumpComparison {
  bool equal;
  Rational at_two_over_p;
  Rational at_four_over_p;
};

/// Compares the derivative jumps at 2/p and 4/p; they agree for every
/// algebraic knot when p is odd.
inline JumpComparison jump_equality(const PiecewiseLinear& f, std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw Error(ErrorCode::DomainError, "jump_equality requires an odd p >= 3");
  const auto spectrum = jump_spectrum(f);
  Rational a = spectrum.at(make_rational(2, p));
  Rational b = spectrum.at(make_rational(4, p));
  return {a == b, a, b};
}

/// lambda_k(f) = (jump(2/(2k-1)) - jump(4/(2k-1))) / (2k-1).
inline Rational lambda(std::int64_t k, const PiecewiseLinear& f) {
  if (k < 2) throw Error(ErrorCode::DomainError, "lambda_k requires k >= 2");
  const std::int64_t p = 2 * k - 1;
  auto cmp = jump_equality(f, p);
  return (cmp.at_two_over_p - cmp.at_four_over_p) / p;
}

inline PiecewiseLinear j_family_upsilon(std::int64_t k) { return upsilon_of_knot(KnotExpr::j_family(k)); }

/// Rows are J_k for k in [kmin, kmax]; column i holds lambda_i(Upsilon_{J_k}).
struct IndependenceMatrix {
  std::int64_t kmin;
  std::int64_t kmax;
  std::vector<std::vector<Rational>> entries;

  const Rational& at(std::int64_t k, std::int64_t i) const {
    return entries[static_cast<std::size_t>(k - kmin)][static_cast<std::size_t>(i - kmin)];
  }
};

inline IndependenceMatrix independence_matrix(std::int64_t kmin, std::int64_t kmax) {
  if (kmin < 3 || kmax < kmin) throw Error(ErrorCode::DomainError, "independence_matrix requires 3 <= kmin <= kmax");
  IndependenceMatrix m{kmin, kmax, {}};
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    const auto f = j_family_upsilon(k);
    std::vector<Rational> row;
    for (std::int64_t i = kmin; i <= kmax; ++i) row.push_back(lambda(i, f));
    m.entries.push_back(std::move(row));
  }
  return m;
}

/// Odd p >= 3 for which 2/p or 4/p is a breakpoint of f; jump equality
/// holds trivially for every other odd p.
inline std::vector<std::int64_t> relevant_odd_p(const PiecewiseLinear& f) {
  std::set<std::int64_t> ps;
  for (const auto& [t, jump] : jump_spectrum(f).jumps) {
    for (int numer : {2, 4}) {
      Rational p = Rational(numer) / t;
      if (!is_integer(p)) continue;
      Integer pi = numerator_of(p);
      if (pi >= 3 && pi % 2 == 1) ps.insert(static_cast<std::int64_t>(pi));
    }
  }
  return {ps.begin(), ps.end()};
}

enum class Verdict { Algebraic, NotAlgebraic, NoObstructionFound };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Algebraic: return "Algebraic";
    case Verdict::NotAlgebraic: return "NotAlgebraic";
    case Verdict::NoObstructionFound: return "NoObstructionFound";
  }
  return "Unknown";
}

struct JumpFailure {
  std::int64_t p;
  Rational at_two_over_p;
  Rational at_four_over_p;
};

struct ObstructionReason {
  std::string obstruction;
  std::string anchor;
  std::string detail;
};

namespace anchors {
inline constexpr const char* kSemigroupClosure = "formal semigroup of an algebraic knot is closed under addition";
inline constexpr const char* kJumpEquality = "algebraic knots have equal Upsilon' jumps at 2/p and 4/p for odd p >= 3";
inline constexpr const char* kDecomposition = "Upsilon of an algebraic knot is a sum of Upsilon of T(n,n+1)";
inline constexpr const char* kIndexCriterion = "iterated torus knot is algebraic iff q_{i+1} > p_i q_i p_{i+1}";
}  // namespace anchors

struct ObstructionReport {
  KnotExpr knot = KnotExpr::unknot();
  ClosureResult semigroup_closed;
  std::vector<std::int64_t> jump_tested;
  std::vector<JumpFailure> jump_equality_failures;
  DecompositionResult decomposition;
  AlgebraicClass index_criterion = AlgebraicClass::Unknown;
  Verdict verdict = Verdict::NoObstructionFound;
  std::vector<ObstructionReason> reasons;
};

/// Runs every obstruction on an L-space knot. Only the index criterion can
/// affirm algebraicity; the other checks can only rule it out.
inline ObstructionReport algebraicity_report(const KnotExpr& k) {
  ObstructionReport r;
  r.knot = k;
  const FormalSemigroup s = semigroup_of(k);
  const PiecewiseLinear ups = upsilon_from_semigroup(s);

  r.semigroup_closed = is_semigroup(s);
  if (!r.semigroup_closed.closed) {
    const auto [x, y] = *r.semigroup_closed.witness;
    r.reasons.push_back({"semigroup_closure", anchors::kSemigroupClosure,
                         std::to_string(x) + " + " + std::to_string(y) + " = " + std::to_string(x + y) +
                             " is not in S"});
  }

  r.jump_tested = relevant_odd_p(ups);
  for (auto p : r.jump_tested) {
    auto cmp = jump_equality(ups, p);
    if (!cmp.equal) r.jump_equality_failures.push_back({p, cmp.at_two_over_p, cmp.at_four_over_p});
  }
  if (!r.jump_equality_failures.empty()) {
    std::string detail = "unequal at p =";
    for (const auto& f : r.jump_equality_failures) detail += " " + std::to_string(f.p);
    r.reasons.push_back({"jump_equality", anchors::kJumpEquality, detail});
  }

  r.decomposition = decompose_into_consecutive_torus(ups);
  if (!r.decomposition.integral()) {
    std::string detail = r.decomposition.success
                             ? std::string("non-integer coefficients")
                             : std::string(to_string(r.decomposition.failure_reason)) + " at t = " +
                                   to_string(r.decomposition.failure_location);
    r.reasons.push_back({"decomposition", anchors::kDecomposition, detail});
  }

  r.index_criterion = classify_algebraic(k);
  if (r.index_criterion == AlgebraicClass::NotAlgebraic) {
    r.reasons.push_back({"index_criterion", anchors::kIndexCriterion, "cabling indices violate the criterion"});
  }

  if (!r.reasons.empty()) {
    r.verdict = Verdict::NotAlgebraic;
  } else if (r.index_criterion == AlgebraicClass::Algebraic) {
    r.verdict = Verdict::Algebraic;
  } else {
    r.verdict = Verdict::NoObstructionFound;
  }
  return r;
}

}  // namespace lspace
