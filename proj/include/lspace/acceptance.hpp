#pragma once

// Reproduction checks, shipped in the library so that any build can be
// re-validated from the command line. Each check carries its own
// independent oracle where one exists (brute-force sieves, direct maxima,
// closed forms) instead of trusting a second call into the same code path.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lspace/intpoly.hpp"
#include "lspace/knotexpr.hpp"
#include "lspace/obstruct.hpp"
#include "lspace/semigroup.hpp"
#include "lspace/upsilon.hpp"

namespace lspace::acceptance {

struct CheckResult {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    if (passed) detail = what;
    passed = false;
  }
};

struct Check {
  std::string id;
  std::vector<std::string> tags;
  std::string anchor;
  std::function<CheckResult()> run;

  bool matches(const std::string& filter) const {
    if (filter.empty() || id == filter) return true;
    return std::find(tags.begin(), tags.end(), filter) != tags.end();
  }
};

namespace oracle {

/// Membership of <gens> below limit by plain dynamic programming.
inline std::vector<bool> generated_below(const std::vector<std::int64_t>& gens, std::int64_t limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  if (limit > 0) in[0] = true;
  for (std::int64_t n = 1; n < limit; ++n)
    for (auto g : gens)
      if (g <= n && in[static_cast<std::size_t>(n - g)]) in[static_cast<std::size_t>(n)] = true;
  return in;
}

/// max over m in [0, 2g] of -2 #(S n [0,m)) - t (g - m), counting directly.
inline Rational upsilon_direct_max(const FormalSemigroup& s, const Rational& t) {
  const std::int64_t g = s.genus();
  Rational best;
  std::int64_t count = 0;
  for (std::int64_t m = 0; m <= 2 * g; ++m) {
    Rational value = Rational(-2 * count) - t * Rational(g - m);
    if (m == 0 || value > best) best = value;
    if (s.contains(m)) ++count;
  }
  return best;
}

/// Closed form of the Upsilon' jumps of T(n, n+1): n at 2i/n for 0 < i < n.
inline JumpSpectrum consecutive_torus_jumps(std::int64_t n) {
  JumpSpectrum out;
  for (std::int64_t i = 1; i < n; ++i) out.jumps.emplace(make_rational(2 * i, n), Rational(n));
  return out;
}

}  // namespace oracle

/// Semigroups used by the property checks: torus knots, admissible cables,
/// the J family, and the pretzel fixture.
inline std::vector<std::pair<std::string, FormalSemigroup>> sample_semigroups() {
  std::vector<KnotExpr> knots;
  for (std::int64_t p = 2; p <= 7; ++p)
    for (std::int64_t q = p + 1; q <= 15; ++q)
      if (std::gcd(p, q) == 1) knots.push_back(KnotExpr::torus(p, q));
  const std::vector<KnotExpr> inners{KnotExpr::torus(2, 3), KnotExpr::torus(2, 5), KnotExpr::torus(3, 4)};
  for (const auto& inner : inners) {
    const std::int64_t g = genus(inner);
    for (std::int64_t p = 2; p <= 3; ++p) {
      int taken = 0;
      for (std::int64_t q = p * (2 * g - 1); taken < 3; ++q) {
        if (std::gcd(p, q) != 1) continue;
        knots.push_back(KnotExpr::cable(inner, p, q));
        ++taken;
      }
    }
  }
  for (std::int64_t k = 3; k <= 10; ++k) knots.push_back(KnotExpr::j_family(k));
  knots.push_back(KnotExpr::pretzel_p237());

  std::vector<std::pair<std::string, FormalSemigroup>> out;
  for (const auto& k : knots) out.emplace_back(k.to_string(), from_alexander(alexander(k)));
  return out;
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

inline CheckResult check_torus_3_7() {
  CheckResult r;
  const IntPolynomial expected{{0, 1}, {1, -1}, {3, 1}, {4, -1}, {6, 1}, {8, -1}, {9, 1}, {11, -1}, {12, 1}};
  const auto d = alexander(parse_knot("T(3,7)"));
  r.require(d == expected, "Alexander polynomial of T(3,7) is " + d.to_string());
  const auto s = from_alexander(d);
  r.require(s.genus() == 6, "genus " + std::to_string(s.genus()) + " != 6");
  std::vector<std::int64_t> upto;
  for (std::int64_t n = 0; n <= 12; ++n)
    if (s.contains(n)) upto.push_back(n);
  r.require(upto == std::vector<std::int64_t>{0, 3, 6, 7, 9, 10, 12}, "S n [0,12] = " + join(upto));
  for (std::int64_t n = 13; n <= 40; ++n) r.require(s.contains(n), std::to_string(n) + " missing from S");
  return r;
}

inline CheckResult check_pretzel() {
  CheckResult r;
  // Reconstruct Delta from the printed set {0,3,5,7,8,10} u Z>10.
  IntPolynomial reconstructed;
  const std::set<std::int64_t> printed{0, 3, 5, 7, 8, 10};
  for (std::int64_t s = 0; s < 10; ++s) {
    if (!printed.count(s)) continue;
    reconstructed.add_term(static_cast<std::uint64_t>(s), 1);
    reconstructed.add_term(static_cast<std::uint64_t>(s + 1), -1);
  }
  reconstructed.add_term(10, 1);
  r.require(reconstructed == alexander(KnotExpr::pretzel_p237()), "P237 Alexander polynomial disagrees with the set");
  const auto s = from_alexander(reconstructed);
  r.require(s.genus() == 5, "genus " + std::to_string(s.genus()) + " != 5");
  std::vector<std::int64_t> upto;
  for (std::int64_t n = 0; n <= 10; ++n)
    if (s.contains(n)) upto.push_back(n);
  r.require(upto == std::vector<std::int64_t>{0, 3, 5, 7, 8, 10}, "S n [0,10] = " + join(upto));
  const auto closure = is_semigroup(s);
  r.require(!closure.closed, "P237 semigroup reported closed");
  r.require(closure.witness == std::make_pair<std::int64_t, std::int64_t>(3, 3), "witness is not (3,3)");
  return r;
}

inline CheckResult check_cabling_coherence() {
  CheckResult r;
  const auto inner = torus_alexander(2, 3);
  const auto s = from_alexander(inner);
  for (std::int64_t p = 2; p <= 4; ++p) {
    int taken = 0;
    for (std::int64_t q = p * (2 * s.genus() - 1); taken < 4; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++taken;
      const auto lhs = cable_semigroup(s, p, q);
      const auto rhs = from_alexander(cable_alexander(inner, p, q));
      r.require(lhs == rhs, "C(T(2,3);" + std::to_string(p) + "," + std::to_string(q) + ") semigroups differ");
    }
  }
  return r;
}

inline CheckResult check_j_semigroups() {
  CheckResult r;
  for (std::int64_t k = 3; k <= 10; ++k) {
    const auto s = from_alexander(alexander(KnotExpr::j_family(k)));
    const std::vector<std::int64_t> gens{2 * k - 1, 2 * k, 3 * k};
    r.require(s == from_generators(gens), "S_{J_" + std::to_string(k) + "} != <2k-1,2k,3k>");
    const auto sieve = oracle::generated_below(gens, 2 * s.genus() + 3 * k);
    for (std::int64_t n = 0; n < static_cast<std::int64_t>(sieve.size()); ++n)
      r.require(sieve[static_cast<std::size_t>(n)] == s.contains(n),
                "J_" + std::to_string(k) + " membership of " + std::to_string(n) + " differs from the sieve");
  }
  return r;
}

inline CheckResult check_j_upsilon_segments() {
  CheckResult r;
  std::vector<std::int64_t> second_fails;
  for (std::int64_t k = 3; k <= 10; ++k) {
    const auto f = j_family_upsilon(k);
    const std::int64_t g = k + (k - 1) * (k - 1);
    r.require(genus(KnotExpr::j_family(k)) == g, "genus of J_" + std::to_string(k));
    const Rational a = make_rational(2, 2 * k - 1);
    const Rational b = make_rational(4, k + 1);
    auto first = [&](const Rational& t) { return Rational(-g) * t; };
    auto second = [&](const Rational& t) { return Rational(-2) - Rational(g - (2 * k - 1)) * t; };
    for (const Rational& t : {Rational(0), Rational(a / 2), a})
      r.require(evaluate(f, t) == first(t), "J_" + std::to_string(k) + " first segment at t=" + to_string(t));
    bool second_ok = true;
    for (const Rational& t : {a, Rational((a + b) / 2), b}) second_ok = second_ok && evaluate(f, t) == second(t);
    if (!second_ok) second_fails.push_back(k);
    r.require(evaluate(f, (a + b) / 2) > first((a + b) / 2), "J_" + std::to_string(k) + " not above -gt past 2/(2k-1)");
  }
  // the m = 2(2k-1) line overtakes the second segment at 6/(2k-1), which precedes 4/(k+1) once k > 5
  r.require(second_fails.empty(), "second segment breaks before 4/(k+1) for k in " + join(second_fails) +
                                      "; the next breakpoint there is 6/(2k-1)");
  return r;
}

inline CheckResult check_lambda_matrix() {
  CheckResult r;
  const auto m = independence_matrix(3, 10);
  for (std::int64_t k = 3; k <= 10; ++k) {
    r.require(m.at(k, k) == 1, "lambda_" + std::to_string(k) + "(J_" + std::to_string(k) + ") = " + to_string(m.at(k, k)));
    for (std::int64_t i = k + 1; i <= 10; ++i)
      r.require(m.at(k, i) == 0, "lambda_" + std::to_string(i) + "(J_" + std::to_string(k) + ") = " + to_string(m.at(k, i)));
  }
  return r;
}

inline CheckResult check_decomposition() {
  CheckResult r;
  std::vector<KnotExpr> algebraic;
  for (std::int64_t p = 2; p <= 6; ++p)
    for (std::int64_t q = p + 1; q <= 13; ++q)
      if (std::gcd(p, q) == 1) algebraic.push_back(KnotExpr::torus(p, q));
  for (std::int64_t q : {13, 15, 17}) algebraic.push_back(KnotExpr::cable(KnotExpr::torus(2, 3), 2, q));
  for (const auto& k : algebraic) {
    r.require(classify_algebraic(k) == AlgebraicClass::Algebraic, k.to_string() + " is not classified algebraic");
    const auto f = upsilon_of_knot(k);
    const auto d = decompose_into_consecutive_torus(f);
    r.require(d.success && d.all_integer && d.all_nonnegative, k.to_string() + " does not decompose");
    if (d.success) r.require(recombine(d.coefficients) == f, k.to_string() + " decomposition does not recombine");
  }
  for (std::int64_t k = 3; k <= 10; ++k) {
    const auto d = decompose_into_consecutive_torus(j_family_upsilon(k));
    r.require(!d.success || !d.all_integer || !d.all_nonnegative, "J_" + std::to_string(k) + " decomposes");
  }
  return r;
}

inline CheckResult check_properties() {
  CheckResult r;
  const auto samples = sample_semigroups();
  for (const auto& [name, s] : samples) {
    const std::int64_t g = s.genus();
    for (std::int64_t x = 0; x < 2 * g; ++x)
      r.require(s.contains(x) != s.contains(2 * g - 1 - x), name + ": duality fails at " + std::to_string(x));
    std::int64_t index = 0;
    for (std::int64_t x = 0; index <= g; ++x) {
      if (!s.contains(x)) continue;
      r.require(x >= 2 * index, name + ": element #" + std::to_string(index + 1) + " below 2i");
      ++index;
    }

    const auto f = upsilon_from_semigroup(s);
    r.require(f.value_at_zero() == 0, name + ": Upsilon(0) != 0");
    for (std::size_t i = 1; i < f.slopes().size(); ++i)
      r.require(f.slopes()[i] > f.slopes()[i - 1], name + ": Upsilon not convex");
    const auto& bps = f.breakpoints();
    for (std::size_t i = 0; i < bps.size(); ++i) {
      std::vector<Rational> ts{bps[i]};
      if (i + 1 < bps.size()) ts.push_back((bps[i] + bps[i + 1]) / 2);
      for (const auto& t : ts)
        r.require(evaluate(f, t) == evaluate(f, 2 - t), name + ": Upsilon not symmetric at " + to_string(t));
    }
    for (const auto& [t, jump] : jump_spectrum(f).jumps)
      r.require(is_integer(t * jump / 2), name + ": (t/2) jump not integral at " + to_string(t));

    if (g > 0 && is_semigroup(s).closed) {
      const auto a = min_nonzero(s);
      const Rational first_break = make_rational(2, a);
      r.require(f.slopes()[0] == -g, name + ": initial slope is not -g");
      r.require(bps.size() > 2 && bps[1] == first_break, name + ": first singularity not at 2/a");
    }
  }

  for (std::int64_t n = 2; n <= 40; ++n)
    r.require(jump_spectrum(torus_consecutive_upsilon(n)) == oracle::consecutive_torus_jumps(n),
              "T(" + std::to_string(n) + "," + std::to_string(n + 1) + ") jump spectrum");

  std::mt19937_64 rng(20160101);
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  std::uniform_int_distribution<std::int64_t> den(1, 60);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [name, s] = samples[pick(rng)];
    const std::int64_t d = den(rng);
    const std::int64_t num = std::uniform_int_distribution<std::int64_t>(0, 2 * d)(rng);
    const Rational t = make_rational(num, d);
    r.require(evaluate(upsilon_from_semigroup(s), t) == oracle::upsilon_direct_max(s, t),
              name + ": envelope differs from the direct maximum at " + to_string(t));
  }
  return r;
}

inline CheckResult check_jump_equality_on_basis() {
  CheckResult r;
  std::vector<PiecewiseLinear> basis;
  for (std::int64_t n = 2; n <= 20; ++n) basis.push_back(torus_consecutive_upsilon(n));
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> count(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<Integer, PiecewiseLinear>> terms;
    const int m = count(rng);
    for (int j = 0; j < m; ++j) terms.emplace_back(Integer(coeff(rng)), basis[pick(rng)]);
    const auto f = pl_combine(terms);
    for (std::int64_t p = 3; p <= 15; p += 2)
      r.require(jump_equality(f, p).equal, "trial " + std::to_string(trial) + ": jumps differ at p=" + std::to_string(p));
  }
  return r;
}

inline std::vector<Check> checks() {
  return {
      {"torus-3-7", {"alexander", "semigroup"}, "T(3,7): Delta and S = <3,7>", check_torus_3_7},
      {"pretzel-p237", {"semigroup"}, "P(-2,3,7): S = {0,3,5,7,8,10} u Z>10 is not a semigroup", check_pretzel},
      {"cabling-coherence", {"alexander", "semigroup"}, "S_{K_{p,q}} = p S_K + q Z>=0", check_cabling_coherence},
      {"j-semigroups", {"semigroup"}, "S_{J_k} = <2k-1, 2k, 3k>", check_j_semigroups},
      {"j-upsilon", {"upsilon"}, "Upsilon_{J_k} on [0, 2/(2k-1)] and [2/(2k-1), 4/(k+1)]", check_j_upsilon_segments},
      {"lambda-matrix", {"upsilon", "lambda"}, "lambda_k(J_k) = 1, lambda_i(J_k) = 0 for i > k", check_lambda_matrix},
      {"decomposition", {"upsilon", "decompose"}, "algebraic Upsilon is a sum of Upsilon of T(n,n+1)", check_decomposition},
      {"properties", {"upsilon", "semigroup", "property"}, "duality, growth, symmetry, convexity, integrality, jumps of T(n,n+1), first singularity", check_properties},
      {"jump-equality", {"upsilon", "lambda", "property"}, "jumps at 2/p and 4/p agree on combinations of Upsilon of T(n,n+1)", check_jump_equality_on_basis},
  };
}

/// Runs every check matching filter, printing one PASS/FAIL line each.
/// Returns 0 iff all selected checks pass.
inline int run_checks(const std::string& filter, std::ostream& out) {
  int passed = 0, failed = 0;
  for (const auto& c : checks()) {
    if (!c.matches(filter)) continue;
    CheckResult result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    out << (result.passed ? "PASS " : "FAIL ") << c.id << " -- " << c.anchor;
    if (!result.passed) out << " :: " << result.detail;
    out << "\n";
    (result.passed ? passed : failed) += 1;
  }
  out << passed << " passed, " << failed << " failed\n";
  return failed == 0 && passed > 0 ? 0 : 1;
}

}  // namespace lspace::acceptance
