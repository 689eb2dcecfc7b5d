#pragma once

// Descriptions of positively iterated torus knots (and a few explicit
// L-space fixtures), their text grammar, Alexander polynomials, genus,
// L-space certification and algebraicity classification.

#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lspace/error.hpp"
#include "lspace/intpoly.hpp"

namespace lspace {

/// Innermost-first cabling indices; the first pair is the torus knot itself.
struct CablePair {
  std::int64_t p;
  std::int64_t q;
  friend bool operator==(const CablePair&, const CablePair&) = default;
};

class KnotExpr {
 public:
  struct Torus {
    std::int64_t p;
    std::int64_t q;
  };
  struct Cable {
    std::shared_ptr<const KnotExpr> inner;
    std::int64_t p;
    std::int64_t q;
  };
  /// (T(2,3))_{k,2k-1}
  struct JFamily {
    std::int64_t k;
  };
  struct ExplicitAlexander {
    IntPolynomial poly;
  };
  /// The (-2,3,7) pretzel knot.
  struct PretzelP237 {};

  using Node = std::variant<Torus, Cable, JFamily, ExplicitAlexander, PretzelP237>;

  static KnotExpr unknot() { return KnotExpr(Torus{1, 1}); }

  /// T(p,q), stored with p <= q; T(1,q) is the unknot.
  static KnotExpr torus(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw Error(ErrorCode::ConstraintError, "torus indices must be >= 1");
    if (gcd64(p, q) != 1) {
      throw Error(ErrorCode::ConstraintError,
                  "T(" + std::to_string(p) + "," + std::to_string(q) + ") indices are not coprime");
    }
    if (p == 1 || q == 1) return unknot();
    if (p > q) std::swap(p, q);
    return KnotExpr(Torus{p, q});
  }

  /// (p,q)-cable of inner. A (1,q)-cable is inner itself, a cable of the
  /// unknot is a torus knot, and (T(2,3))_{k,2k-1} with k >= 3 is J(k).
  static KnotExpr cable(const KnotExpr& inner, std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw Error(ErrorCode::ConstraintError, "cable indices must be >= 1");
    if (gcd64(p, q) != 1) {
      throw Error(ErrorCode::ConstraintError,
                  "cable indices (" + std::to_string(p) + "," + std::to_string(q) + ") are not coprime");
    }
    if (p == 1) return inner;
    if (inner.is_unknot()) return torus(p, q);
    if (const auto* t = std::get_if<Torus>(&inner.node_); t && t->p == 2 && t->q == 3 && p >= 3 && q == 2 * p - 1)
      return j_family(p);
    return KnotExpr(Cable{std::make_shared<const KnotExpr>(inner), p, q});
  }

  static KnotExpr j_family(std::int64_t k) {
    if (k < 3) throw Error(ErrorCode::ConstraintError, "J(k) requires k >= 3");
    if (gcd64(k, 2 * k - 1) != 1) throw Error(ErrorCode::ConstraintError, "J(k) cabling indices not coprime");
    return KnotExpr(JFamily{k});
  }

  static KnotExpr explicit_alexander(IntPolynomial poly) {
    if (auto why = lspace_shape_violation(poly)) {
      throw Error(ErrorCode::ConstraintError, "not an L-space Alexander polynomial: " + *why);
    }
    return KnotExpr(ExplicitAlexander{std::move(poly)});
  }

  static KnotExpr pretzel_p237() { return KnotExpr(PretzelP237{}); }

  const Node& node() const noexcept { return node_; }

  bool is_unknot() const {
    const auto* t = std::get_if<Torus>(&node_);
    return t != nullptr && t->p == 1;
  }

  /// Canonical text in the knot grammar; parse(to_string()) round-trips.
  std::string to_string() const {
    return std::visit(
        [](const auto& n) -> std::string {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Torus>) {
            if (n.p == 1) return "U";
            return "T(" + std::to_string(n.p) + "," + std::to_string(n.q) + ")";
          } else if constexpr (std::is_same_v<N, Cable>) {
            return "C(" + n.inner->to_string() + ";" + std::to_string(n.p) + "," + std::to_string(n.q) + ")";
          } else if constexpr (std::is_same_v<N, JFamily>) {
            return "J(" + std::to_string(n.k) + ")";
          } else if constexpr (std::is_same_v<N, ExplicitAlexander>) {
            std::string out = "alex[";
            auto coeffs = n.poly.dense();
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
              if (i) out += ",";
              out += coeffs[i].str();
            }
            return out + "]";
          } else {
            return "P237";
          }
        },
        node_);
  }

  friend bool operator==(const KnotExpr& a, const KnotExpr& b) { return a.to_string() == b.to_string(); }
  friend std::strong_ordering operator<=>(const KnotExpr& a, const KnotExpr& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  explicit KnotExpr(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Formal integer combination of knots, e.g. 2*T(3,4) - T(3,7).
class KnotCombination {
 public:
  using Terms = std::map<KnotExpr, std::int64_t>;

  KnotCombination() = default;
  explicit KnotCombination(const KnotExpr& k, std::int64_t multiplicity = 1) { add(k, multiplicity); }

  void add(const KnotExpr& k, std::int64_t multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, multiplicity);
    if (!inserted) {
      it->second += multiplicity;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// The single knot when this is exactly 1*K.
  std::optional<KnotExpr> single_knot() const {
    if (terms_.size() == 1 && terms_.begin()->second == 1) return terms_.begin()->first;
    return std::nullopt;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0*U";
    std::string out;
    bool first = true;
    for (const auto& [k, m] : terms_) {
      std::int64_t mag = m < 0 ? -m : m;
      if (first) {
        if (m < 0) out += "-";
      } else {
        out += m < 0 ? " - " : " + ";
      }
      first = false;
      if (mag != 1) out += std::to_string(mag) + "*";
      out += k.to_string();
    }
    return out;
  }

  friend bool operator==(const KnotCombination&, const KnotCombination&) = default;

 private:
  Terms terms_;
};

namespace detail {

class KnotParser {
 public:
  explicit KnotParser(std::string_view text) : text_(text) {}

  KnotCombination combination() {
    KnotCombination out;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    term(out, sign);
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw SyntaxError(pos_, std::string("expected '+' or '-', found '") + c + "'");
      ++pos_;
      term(out, c == '-' ? -1 : 1);
    }
    return out;
  }

 private:
  void term(KnotCombination& out, int sign) {
    skip_ws();
    std::int64_t mult = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mult = integer();
      expect('*');
    }
    KnotExpr k = atom();
    out.add(k, sign * mult);
  }

  KnotExpr atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept_word("alex")) {
      expect('[');
      std::vector<Integer> coeffs;
      coeffs.push_back(signed_integer());
      while (true) {
        skip_ws();
        if (peek() == ']') break;
        expect(',');
        coeffs.push_back(signed_integer());
      }
      expect(']');
      return KnotExpr::explicit_alexander(IntPolynomial::from_dense(coeffs));
    }
    if (accept_word("P237")) return KnotExpr::pretzel_p237();
    char c = peek();
    if (c == 'U') {
      ++pos_;
      return KnotExpr::unknot();
    }
    if (c == 'T') {
      ++pos_;
      expect('(');
      std::int64_t p = integer();
      expect(',');
      std::int64_t q = integer();
      expect(')');
      return constrained(start, [&] { return KnotExpr::torus(p, q); });
    }
    if (c == 'C') {
      ++pos_;
      expect('(');
      KnotExpr inner = atom();
      expect(';');
      std::int64_t p = integer();
      expect(',');
      std::int64_t q = integer();
      expect(')');
      return constrained(start, [&] { return KnotExpr::cable(inner, p, q); });
    }
    if (c == 'J') {
      ++pos_;
      expect('(');
      std::int64_t k = integer();
      expect(')');
      return constrained(start, [&] { return KnotExpr::j_family(k); });
    }
    if (at_end()) throw SyntaxError(pos_, "unexpected end of input, expected a knot");
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "', expected a knot");
  }

  template <class F>
  KnotExpr constrained(std::size_t start, F&& make) {
    try {
      return make();
    } catch (const Error& e) {
      throw Error(ErrorCode::ConstraintError, e.what() + std::string(" (at offset ") + std::to_string(start) + ")");
    }
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected an integer");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) throw Error(ErrorCode::ConstraintError, "integer out of range at offset " + std::to_string(start));
    return value;
  }

  Integer signed_integer() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected an integer");
    Integer v(std::string(text_.substr(start, pos_ - start)));
    return negative ? Integer(-v) : v;
  }

  bool accept_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      if (at_end()) throw SyntaxError(pos_, std::string("unexpected end of input, expected '") + c + "'");
      throw SyntaxError(pos_, std::string("expected '") + c + "', found '" + peek() + "'");
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the knot-combination grammar:
///   combination := term (('+'|'-') term)*      (leading '-' allowed)
///   term        := (integer '*')? atom
///   atom        := T(p,q) | C(atom;p,q) | J(k) | P237 | U | alex[c0,c1,...]
inline KnotCombination parse(std::string_view text) { return detail::KnotParser(text).combination(); }

/// Parses text that must describe exactly one knot with multiplicity 1.
inline KnotExpr parse_knot(std::string_view text) {
  auto combo = parse(text);
  if (auto k = combo.single_knot()) return *k;
  throw Error(ErrorCode::ConstraintError, "expected a single knot, got '" + combo.to_string() + "'");
}

/// Alexander polynomial of P(-2,3,7); its formal semigroup is
/// {0,3,5,7,8,10} together with every integer above 10.
inline IntPolynomial pretzel_p237_alexander() {
  return IntPolynomial{{0, 1}, {1, -1}, {3, 1}, {4, -1}, {5, 1}, {6, -1}, {7, 1}, {9, -1}, {10, 1}};
}

inline IntPolynomial alexander(const KnotExpr& k) {
  return std::visit(
      [](const auto& n) -> IntPolynomial {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, KnotExpr::Torus>) {
          return torus_alexander(n.p, n.q);
        } else if constexpr (std::is_same_v<N, KnotExpr::Cable>) {
          return cable_alexander(alexander(*n.inner), n.p, n.q);
        } else if constexpr (std::is_same_v<N, KnotExpr::JFamily>) {
          return cable_alexander(torus_alexander(2, 3), n.k, 2 * n.k - 1);
        } else if constexpr (std::is_same_v<N, KnotExpr::ExplicitAlexander>) {
          return n.poly;
        } else {
          return pretzel_p237_alexander();
        }
      },
      k.node());
}

inline std::int64_t genus(const KnotExpr& k) {
  auto d = alexander(k).degree();
  if (d % 2 != 0) throw Error(ErrorCode::InvalidShape, "Alexander polynomial has odd degree");
  return static_cast<std::int64_t>(d / 2);
}

/// Cabling indices of an iterated torus knot, innermost first. Empty for
/// the unknot; nullopt for knots not given as iterated torus knots.
inline std::optional<std::vector<CablePair>> cable_tower(const KnotExpr& k) {
  return std::visit(
      [](const auto& n) -> std::optional<std::vector<CablePair>> {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, KnotExpr::Torus>) {
          if (n.p == 1) return std::vector<CablePair>{};
          return std::vector<CablePair>{{n.p, n.q}};
        } else if constexpr (std::is_same_v<N, KnotExpr::Cable>) {
          auto inner = cable_tower(*n.inner);
          if (inner) inner->push_back({n.p, n.q});
          return inner;
        } else if constexpr (std::is_same_v<N, KnotExpr::JFamily>) {
          return std::vector<CablePair>{{2, 3}, {n.k, 2 * n.k - 1}};
        } else {
          return std::nullopt;
        }
      },
      k.node());
}

struct Certification {
  enum class Status { Certified, CertifiedCandidate, NotLSpace };
  Status status;
  std::string reason;

  bool ok() const { return status != Status::NotLSpace; }
};

inline std::string_view to_string(Certification::Status s) {
  switch (s) {
    case Certification::Status::Certified: return "Certified";
    case Certification::Status::CertifiedCandidate: return "CertifiedCandidate";
    case Certification::Status::NotLSpace: return "NotLSpace";
  }
  return "Unknown";
}

/// Torus knots are L-space knots; a (p,q)-cable of K is one iff K is and
/// q >= p(2g(K)-1). Explicit polynomials only get necessary conditions
/// checked, so they are never more than a candidate.
inline Certification certify_lspace(const KnotExpr& k) {
  using S = Certification::Status;
  return std::visit(
      [&k](const auto& n) -> Certification {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, KnotExpr::Torus>) {
          return {S::Certified, ""};
        } else if constexpr (std::is_same_v<N, KnotExpr::Cable>) {
          auto inner = certify_lspace(*n.inner);
          if (inner.status == S::NotLSpace) return {S::NotLSpace, "inner knot: " + inner.reason};
          const std::int64_t bound = n.p * (2 * genus(*n.inner) - 1);
          if (n.q < bound) {
            return {S::NotLSpace, "cable " + k.to_string() + " violates q >= p(2g-1): " + std::to_string(n.q) +
                                      " < " + std::to_string(bound)};
          }
          return {inner.status, ""};
        } else if constexpr (std::is_same_v<N, KnotExpr::JFamily>) {
          // 2k-1 >= k(2*1-1) for every k >= 1
          return {S::Certified, ""};
        } else if constexpr (std::is_same_v<N, KnotExpr::ExplicitAlexander>) {
          const IntPolynomial& d = n.poly;
          if (auto why = lspace_shape_violation(d)) return {S::NotLSpace, *why};
          if (!is_palindromic(d)) return {S::NotLSpace, "polynomial is not palindromic"};
          const auto deg = d.degree();
          if (deg == 0) return {S::CertifiedCandidate, ""};
          if (d.coefficient(1) != -1) return {S::NotLSpace, "alpha_1 != 1"};
          auto series = alexander_function_prefix(d, deg);
          std::uint64_t index = 0;
          for (std::uint64_t s = 0; s <= deg && index <= deg / 2; ++s) {
            if (!series[s]) continue;
            if (s < 2 * index) {
              return {S::NotLSpace, "element #" + std::to_string(index + 1) + " of the formal semigroup is " +
                                        std::to_string(s) + " < " + std::to_string(2 * index)};
            }
            ++index;
          }
          return {S::CertifiedCandidate, ""};
        } else {
          return {S::Certified, ""};
        }
      },
      k.node());
}

enum class AlgebraicClass { Algebraic, NotAlgebraic, Unknown };

inline std::string_view to_string(AlgebraicClass c) {
  switch (c) {
    case AlgebraicClass::Algebraic: return "Algebraic";
    case AlgebraicClass::NotAlgebraic: return "NotAlgebraic";
    case AlgebraicClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

/// An iterated torus knot is algebraic iff q_{i+1} > p_i q_i p_{i+1} along
/// its cable tower.
inline AlgebraicClass classify_algebraic(const KnotExpr& k) {
  auto tower = cable_tower(k);
  if (!tower) return AlgebraicClass::Unknown;
  for (std::size_t i = 0; i + 1 < tower->size(); ++i) {
    const auto& [pi, qi] = (*tower)[i];
    const auto& [pn, qn] = (*tower)[i + 1];
    if (!(qn > pi * qi * pn)) return AlgebraicClass::NotAlgebraic;
  }
  return AlgebraicClass::Algebraic;
}

}  // namespace lspace
