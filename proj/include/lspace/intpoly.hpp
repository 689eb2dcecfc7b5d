#pragma once

// Sparse polynomials in one variable t with arbitrary-precision integer
// coefficients, plus the Alexander-polynomial constructors used for torus
// knots and their cables.

#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lspace/error.hpp"
#include "lspace/rational.hpp"

namespace lspace {

class IntPolynomial {
 public:
  using Exponent = std::uint64_t;
  using Terms = std::map<Exponent, Integer>;

  /// The zero polynomial.
  IntPolynomial() = default;

  IntPolynomial(std::initializer_list<std::pair<Exponent, long long>> terms) {
    for (const auto& [e, c] : terms) add_term(e, Integer(c));
  }

  static IntPolynomial constant(const Integer& c) { return monomial(0, c); }

  static IntPolynomial monomial(Exponent e, const Integer& c = 1) {
    IntPolynomial p;
    p.add_term(e, c);
    return p;
  }

  /// Dense low-to-high coefficients.
  static IntPolynomial from_dense(std::span<const Integer> coefficients) {
    IntPolynomial p;
    for (std::size_t i = 0; i < coefficients.size(); ++i) p.add_term(i, coefficients[i]);
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Exponent degree() const {
    if (is_zero()) throw Error(ErrorCode::DomainError, "degree of the zero polynomial is undefined");
    return terms_.rbegin()->first;
  }

  Integer coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  const Integer& leading_coefficient() const {
    if (is_zero()) throw Error(ErrorCode::DomainError, "zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
  }

  std::vector<Integer> dense() const {
    if (is_zero()) return {};
    std::vector<Integer> out(degree() + 1);
    for (const auto& [e, c] : terms_) out[e] = c;
    return out;
  }

  /// Sorted exponents; for an L-space polynomial these are the alpha_i.
  std::vector<Exponent> exponents() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  void add_term(Exponent e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  IntPolynomial& operator+=(const IntPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    IntPolynomial out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, e.g. "1 - t + t^3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  Terms terms_;
};

inline IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

/// Exact quotient a / b. Throws NotDivisible when the remainder is nonzero
/// or a quotient coefficient would not be an integer.
inline IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DomainError, "division by the zero polynomial");
  const auto db = b.degree();
  const Integer& lb = b.leading_coefficient();
  IntPolynomial quotient;
  IntPolynomial rem = a;
  while (!rem.is_zero() && rem.degree() >= db) {
    const auto dr = rem.degree();
    const Integer& lr = rem.leading_coefficient();
    if (lr % lb != 0) {
      throw Error(ErrorCode::NotDivisible, "quotient coefficient is not an integer");
    }
    Integer c = lr / lb;
    const auto shift = dr - db;
    quotient.add_term(shift, c);
    for (const auto& [e, cb] : b.terms()) rem.add_term(e + shift, -c * cb);
  }
  if (!rem.is_zero()) {
    throw Error(ErrorCode::NotDivisible, "nonzero remainder " + rem.to_string());
  }
  return quotient;
}

/// a(t^p).
inline IntPolynomial substitute_power(const IntPolynomial& a, std::uint64_t p) {
  if (p == 0) throw Error(ErrorCode::DomainError, "substitute_power requires p >= 1");
  IntPolynomial out;
  for (const auto& [e, c] : a.terms()) out.add_term(e * p, c);
  return out;
}

/// Unsymmetrized Alexander polynomial of T(p,q), computed as the exact
/// quotient (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)).
inline IntPolynomial torus_alexander(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::DomainError, "torus indices must be positive");
  if (gcd64(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "T(" + std::to_string(p) + "," + std::to_string(q) + ") indices are not coprime");
  }
  auto binomial = [](std::uint64_t n) { return IntPolynomial{{n, 1}, {0, -1}}; };
  const auto up = static_cast<std::uint64_t>(p);
  const auto uq = static_cast<std::uint64_t>(q);
  return poly_exact_div(binomial(up * uq) * binomial(1), binomial(up) * binomial(uq));
}

/// Delta_{K_{p,q}}(t) = Delta_K(t^p) * Delta_{T(p,q)}(t).
inline IntPolynomial cable_alexander(const IntPolynomial& inner, std::int64_t p, std::int64_t q) {
  return substitute_power(inner, static_cast<std::uint64_t>(p)) * torus_alexander(p, q);
}

/// Coefficients 0..n of a(t)/(1-t) as a power series. Throws NotLSpaceShape
/// as soon as a coefficient in range is outside {0, 1}.
inline std::vector<int> alexander_function_prefix(const IntPolynomial& a, std::uint64_t n) {
  if (a.coefficient(0) != 1) {
    throw Error(ErrorCode::DomainError, "Alexander function requires constant term 1");
  }
  std::vector<int> out;
  out.reserve(n + 1);
  Integer running = 0;
  auto it = a.terms().begin();
  for (std::uint64_t i = 0; i <= n; ++i) {
    while (it != a.terms().end() && it->first == i) {
      running += it->second;
      ++it;
    }
    if (running != 0 && running != 1) {
      throw Error(ErrorCode::NotLSpaceShape,
                  "series coefficient " + running.str() + " at degree " + std::to_string(i));
    }
    out.push_back(running == 1 ? 1 : 0);
  }
  return out;
}

/// Necessary shape of an L-space Alexander polynomial: constant term 1,
/// coefficients alternating +1/-1 by exponent, even degree. Returns the
/// first violation found.
inline std::optional<std::string> lspace_shape_violation(const IntPolynomial& a) {
  if (a.is_zero()) return "zero polynomial";
  if (a.coefficient(0) != 1) return "constant term is not 1";
  int expected = 1;
  for (const auto& [e, c] : a.terms()) {
    if (c != expected) {
      return "coefficient of t^" + std::to_string(e) + " is " + c.str() + ", expected " +
             std::to_string(expected);
    }
    expected = -expected;
  }
  if (a.degree() % 2 != 0) return "degree is odd";
  return std::nullopt;
}

/// t^deg a(1/t) == a(t).
inline bool is_palindromic(const IntPolynomial& a) {
  if (a.is_zero()) return true;
  const auto d = a.degree();
  for (const auto& [e, c] : a.terms())
    if (a.coefficient(d - e) != c) return false;
  return true;
}

/// Parses text such as "1 - t + t^3", "2*t^2 - 3t + 1" or "-t^4".
inline IntPolynomial parse_polynomial(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  IntPolynomial out;
  bool first = true;
  skip_ws();
  if (pos == text.size()) throw SyntaxError(pos, "empty polynomial");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw SyntaxError(pos, "expected '+' or '-'");
    }
    first = false;

    Integer coeff = 1;
    bool have_coeff = false;
    std::string digits = read_digits();
    if (!digits.empty()) {
      coeff = Integer(digits);
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos == text.size() || text[pos] != 't') throw SyntaxError(pos, "expected 't' after '*'");
      }
    }
    std::uint64_t exponent = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      exponent = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::size_t at = pos;
        std::string e = read_digits();
        if (e.empty()) throw SyntaxError(at, "expected exponent");
        if (e.size() > 18) throw SyntaxError(at, "exponent too large");
        exponent = std::stoull(e);
      }
    } else if (!have_coeff) {
      throw SyntaxError(pos, "expected a term");
    }
    out.add_term(exponent, sign * coeff);
  }
  return out;
}

}  // namespace lspace
