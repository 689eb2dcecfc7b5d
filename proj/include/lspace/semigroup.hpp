#pragma once

// Formal semigroups of L-space knots: the subset S of Z>=0 with
// sum_{s in S} t^s = Delta(t) / (1 - t). S always contains every integer
// >= 2g, so it is stored as g plus its members below 2g.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lspace/error.hpp"
#include "lspace/intpoly.hpp"
#include "lspace/knotexpr.hpp"

namespace lspace {

class FormalSemigroup {
 public:
  using Element = std::int64_t;

  /// Z>=0, the semigroup of the unknot.
  FormalSemigroup() = default;

  /// Throws InvalidShape unless the elements describe a valid formal
  /// semigroup of genus g: members of [0, 2g), containing 0, self-dual
  /// with respect to 2g-1, and with the (i+1)-th element at least 2i.
  FormalSemigroup(std::int64_t genus, std::vector<Element> small_elements)
      : genus_(genus), small_(std::move(small_elements)) {
    std::sort(small_.begin(), small_.end());
    small_.erase(std::unique(small_.begin(), small_.end()), small_.end());
    validate();
  }

  std::int64_t genus() const noexcept { return genus_; }

  /// Sorted members of S in [0, 2g).
  const std::vector<Element>& small_elements() const noexcept { return small_; }

  bool contains(Element n) const {
    if (n < 0) return false;
    if (n >= 2 * genus_) return true;
    return std::binary_search(small_.begin(), small_.end(), n);
  }

  /// #(S intersect [0, m)).
  std::int64_t count_below(Element m) const {
    if (m <= 0) return 0;
    if (m >= 2 * genus_) return genus_ + (m - 2 * genus_);
    return std::lower_bound(small_.begin(), small_.end(), m) - small_.begin();
  }

  std::vector<Element> gaps() const {
    std::vector<Element> out;
    for (Element n = 0; n < 2 * genus_; ++n)
      if (!contains(n)) out.push_back(n);
    return out;
  }

  friend bool operator==(const FormalSemigroup&, const FormalSemigroup&) = default;

 private:
  void fail(const std::string& why) const {
    throw Error(ErrorCode::InvalidShape, "invalid formal semigroup (genus " + std::to_string(genus_) + "): " + why);
  }

  void validate() const {
    if (genus_ < 0) fail("negative genus");
    if (genus_ == 0) {
      if (!small_.empty()) fail("genus 0 admits no elements below 0");
      return;
    }
    if (small_.front() != 0) fail("0 is not an element");
    if (small_.back() >= 2 * genus_) fail("element " + std::to_string(small_.back()) + " is not below 2g");
    for (Element s = 0; s < 2 * genus_; ++s) {
      if (contains(s) == contains(2 * genus_ - 1 - s)) {
        fail("duality fails at " + std::to_string(s));
      }
    }
    for (std::size_t i = 0; i < small_.size(); ++i) {
      if (small_[i] < static_cast<Element>(2 * i)) {
        fail("element #" + std::to_string(i + 1) + " is " + std::to_string(small_[i]) + " < " + std::to_string(2 * i));
      }
    }
  }

  std::int64_t genus_ = 0;
  std::vector<Element> small_;
};

/// Reads S off the exponent runs: [alpha_0, alpha_1) u [alpha_2, alpha_3)
/// u ... u {alpha_2n} u Z>alpha_2n.
inline FormalSemigroup from_alexander(const IntPolynomial& d) {
  if (auto why = lspace_shape_violation(d)) throw Error(ErrorCode::NotLSpaceShape, *why);
  if (!is_palindromic(d)) throw Error(ErrorCode::NotLSpaceShape, "polynomial is not palindromic");
  const auto alphas = d.exponents();
  std::vector<FormalSemigroup::Element> small;
  for (std::size_t i = 0; i + 1 < alphas.size(); i += 2)
    for (auto s = alphas[i]; s < alphas[i + 1]; ++s) small.push_back(static_cast<FormalSemigroup::Element>(s));
  try {
    return FormalSemigroup(static_cast<std::int64_t>(d.degree() / 2), std::move(small));
  } catch (const Error& e) {
    throw Error(ErrorCode::NotLSpaceShape, e.what());
  }
}

/// (1 - t) * sum_{s in S} t^s.
inline IntPolynomial to_alexander(const FormalSemigroup& s) {
  IntPolynomial out;
  for (auto e : s.small_elements()) {
    out.add_term(static_cast<std::uint64_t>(e), 1);
    out.add_term(static_cast<std::uint64_t>(e) + 1, -1);
  }
  out.add_term(static_cast<std::uint64_t>(2 * s.genus()), 1);
  return out;
}

struct ClosureResult {
  bool closed;
  std::optional<std::pair<FormalSemigroup::Element, FormalSemigroup::Element>> witness;
};

/// Whether S is closed under addition; otherwise the lexicographically
/// least (x, y), x <= y, with x + y outside S.
inline ClosureResult is_semigroup(const FormalSemigroup& s) {
  const auto& elems = s.small_elements();
  const auto bound = 2 * s.genus();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size() && elems[i] + elems[j] < bound; ++j) {
      if (!s.contains(elems[i] + elems[j])) return {false, std::make_pair(elems[i], elems[j])};
    }
  }
  return {true, std::nullopt};
}

/// S_{K_{p,q}} = p S_K + q Z>=0, valid when q >= p(2g-1).
inline FormalSemigroup cable_semigroup(const FormalSemigroup& s, std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 1) throw Error(ErrorCode::DomainError, "cable_semigroup requires p >= 2 and q >= 1");
  if (gcd64(p, q) != 1) throw Error(ErrorCode::NotCoprime, "cable indices are not coprime");
  const std::int64_t g = s.genus();
  if (q < p * (2 * g - 1)) {
    throw Error(ErrorCode::HypothesisViolated,
                "q = " + std::to_string(q) + " < p(2g-1) = " + std::to_string(p * (2 * g - 1)));
  }
  const std::int64_t new_genus = p * g + (p - 1) * (q - 1) / 2;
  const std::int64_t bound = 2 * new_genus;
  std::vector<char> member(static_cast<std::size_t>(bound), 0);
  for (std::int64_t b = 0; q * b < bound; ++b)
    for (std::int64_t a = 0; p * a + q * b < bound; ++a)
      if (s.contains(a)) member[static_cast<std::size_t>(p * a + q * b)] = 1;
  std::vector<FormalSemigroup::Element> small;
  for (std::int64_t n = 0; n < bound; ++n)
    if (member[static_cast<std::size_t>(n)]) small.push_back(n);
  return FormalSemigroup(new_genus, std::move(small));
}

/// Numerical semigroup generated by gens. Sieves until min(gens)
/// consecutive members appear, after which every integer is a member.
/// Throws InfiniteComplement when gcd > 1 and NotSymmetric when the result
/// is not self-dual (no L-space knot has such a semigroup).
inline FormalSemigroup from_generators(std::span<const std::int64_t> gens) {
  if (gens.empty()) throw Error(ErrorCode::DomainError, "empty generator set");
  std::int64_t g = 0;
  for (auto x : gens) {
    if (x < 1) throw Error(ErrorCode::DomainError, "generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw Error(ErrorCode::InfiniteComplement, "generators have gcd " + std::to_string(g));
  const std::int64_t smallest = *std::min_element(gens.begin(), gens.end());

  std::vector<char> member{1};
  std::int64_t run = 1;
  while (run < smallest) {
    const auto n = static_cast<std::int64_t>(member.size());
    char in = 0;
    for (auto x : gens)
      if (x <= n && member[static_cast<std::size_t>(n - x)]) {
        in = 1;
        break;
      }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }

  std::int64_t gap_count = 0;
  for (char m : member) gap_count += m ? 0 : 1;
  std::vector<FormalSemigroup::Element> small;
  for (std::int64_t n = 0; n < 2 * gap_count; ++n) {
    if (n >= static_cast<std::int64_t>(member.size()) || member[static_cast<std::size_t>(n)]) small.push_back(n);
  }
  try {
    return FormalSemigroup(gap_count, std::move(small));
  } catch (const Error& e) {
    throw Error(ErrorCode::NotSymmetric, std::string("generated semigroup is not a formal semigroup: ") + e.what());
  }
}

inline FormalSemigroup from_generators(std::initializer_list<std::int64_t> gens) {
  return from_generators(std::span<const std::int64_t>(gens.begin(), gens.size()));
}

/// {p1 p2...pm, q1 p2...pm, q2 p3...pm, ..., q_{m-1} pm, qm} for the tower
/// (p1,q1), ..., (pm,qm). The unknot yields {1}.
inline std::vector<std::int64_t> iterated_torus_generators(const KnotExpr& k) {
  auto tower = cable_tower(k);
  if (!tower) throw Error(ErrorCode::NotIteratedTorus, k.to_string() + " is not an iterated torus knot");
  if (auto cert = certify_lspace(k); !cert.ok()) throw Error(ErrorCode::NotLSpace, cert.reason);
  if (tower->empty()) return {1};
  const auto m = tower->size();
  std::vector<std::int64_t> gens;
  // suffix[i] = p_{i+1} ... p_m (0-based)
  std::vector<std::int64_t> suffix(m + 1, 1);
  for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * (*tower)[i].p;
  gens.push_back(suffix[0]);
  for (std::size_t i = 0; i < m; ++i) gens.push_back((*tower)[i].q * suffix[i + 1]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

inline FormalSemigroup::Element min_nonzero(const FormalSemigroup& s) {
  if (s.genus() == 0) throw Error(ErrorCode::Undefined, "least nonzero element is undefined for genus 0");
  const auto& e = s.small_elements();
  return e.size() > 1 ? e[1] : 2 * s.genus();
}

/// S_K for a knot that is certified (or a candidate) L-space knot.
inline FormalSemigroup semigroup_of(const KnotExpr& k) {
  if (auto cert = certify_lspace(k); !cert.ok()) throw Error(ErrorCode::NotLSpace, cert.reason);
  return from_alexander(alexander(k));
}

}  // namespace lspace
