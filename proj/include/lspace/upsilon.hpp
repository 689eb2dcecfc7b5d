#pragma once

// Exact piecewise-linear functions on [0,2] and the Upsilon invariant of
// L-space knots, realized as the upper envelope of the lines
//   t -> -2 #(S n [0,m)) - t (g - m),   m = 0..2g.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lspace/error.hpp"
#include "lspace/knotexpr.hpp"
#include "lspace/rational.hpp"
#include "lspace/semigroup.hpp"

namespace lspace {

/// Continuous piecewise-linear function on [0,2] with rational breakpoints
/// 0 = b_0 < ... < b_m = 2 and one rational slope per segment. Always kept
/// canonical: adjacent slopes differ, so equality is structural.
class PiecewiseLinear {
 public:
  /// The zero function.
  PiecewiseLinear() : breakpoints_{Rational(0), Rational(2)}, slopes_{Rational(0)} {}

  PiecewiseLinear(std::vector<Rational> breakpoints, Rational value_at_zero, std::vector<Rational> slopes)
      : breakpoints_(std::move(breakpoints)), value_at_zero_(std::move(value_at_zero)), slopes_(std::move(slopes)) {
    if (breakpoints_.size() < 2 || slopes_.size() + 1 != breakpoints_.size()) {
      throw Error(ErrorCode::DomainError, "breakpoints and slopes do not match");
    }
    if (breakpoints_.front() != 0 || breakpoints_.back() != 2) {
      throw Error(ErrorCode::DomainError, "breakpoints must span [0,2]");
    }
    canonicalize();
  }

  static PiecewiseLinear linear(const Rational& value_at_zero, const Rational& slope) {
    return PiecewiseLinear({Rational(0), Rational(2)}, value_at_zero, {slope});
  }

  const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Rational>& slopes() const noexcept { return slopes_; }
  const Rational& value_at_zero() const noexcept { return value_at_zero_; }
  std::size_t segment_count() const noexcept { return slopes_.size(); }

  bool is_zero() const { return slopes_.size() == 1 && slopes_[0] == 0 && value_at_zero_ == 0; }

  /// Values at every breakpoint, in order.
  std::vector<Rational> values() const {
    std::vector<Rational> out{value_at_zero_};
    for (std::size_t i = 0; i < slopes_.size(); ++i)
      out.push_back(out.back() + slopes_[i] * (breakpoints_[i + 1] - breakpoints_[i]));
    return out;
  }

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  void canonicalize() {
    std::vector<Rational> bps{breakpoints_.front()};
    std::vector<Rational> slopes;
    for (std::size_t i = 0; i < slopes_.size(); ++i) {
      if (breakpoints_[i + 1] < breakpoints_[i]) throw Error(ErrorCode::DomainError, "breakpoints not increasing");
      if (breakpoints_[i + 1] == breakpoints_[i]) continue;
      if (!slopes.empty() && slopes.back() == slopes_[i]) {
        bps.back() = breakpoints_[i + 1];
      } else {
        slopes.push_back(slopes_[i]);
        bps.push_back(breakpoints_[i + 1]);
      }
    }
    breakpoints_ = std::move(bps);
    slopes_ = std::move(slopes);
  }

  std::vector<Rational> breakpoints_;
  Rational value_at_zero_;
  std::vector<Rational> slopes_;
};

/// Derivative jumps at the interior breakpoints, keyed by location.
struct JumpSpectrum {
  std::map<Rational, Rational> jumps;

  Rational at(const Rational& t) const {
    auto it = jumps.find(t);
    return it == jumps.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const JumpSpectrum&, const JumpSpectrum&) = default;
};

struct Line {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& t) const { return slope * t + intercept; }
};

/// Pointwise maximum of the lines over [0,2].
inline PiecewiseLinear envelope(std::vector<Line> lines) {
  if (lines.empty()) throw Error(ErrorCode::DomainError, "envelope of an empty set of lines");
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return a.slope != b.slope ? a.slope < b.slope : a.intercept > b.intercept;
  });
  // keep the highest intercept per slope
  lines.erase(std::unique(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.slope == b.slope; }),
              lines.end());

  auto crossing = [](const Line& a, const Line& b) { return (a.intercept - b.intercept) / (b.slope - a.slope); };

  // Upper hull over the whole real line, slopes increasing left to right.
  std::vector<Line> hull;
  for (auto& l : lines) {
    while (hull.size() >= 2 && crossing(hull[hull.size() - 2], l) <= crossing(hull[hull.size() - 2], hull.back()))
      hull.pop_back();
    hull.push_back(std::move(l));
  }

  const Rational lo(0), hi(2);
  std::vector<Rational> bps{lo};
  std::vector<Rational> slopes;
  std::size_t first = hull.size();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const bool has_end = i + 1 < hull.size();
    Rational end = has_end ? crossing(hull[i], hull[i + 1]) : hi;
    if (has_end && end <= lo) continue;
    if (first == hull.size()) first = i;
    if (!has_end || end >= hi) {
      slopes.push_back(hull[i].slope);
      bps.push_back(hi);
      break;
    }
    slopes.push_back(hull[i].slope);
    bps.push_back(end);
  }
  return PiecewiseLinear(std::move(bps), hull[first](lo), std::move(slopes));
}

/// The 2g+1 lines whose envelope is Upsilon.
inline std::vector<Line> upsilon_lines(const FormalSemigroup& s) {
  std::vector<Line> lines;
  const std::int64_t g = s.genus();
  lines.reserve(static_cast<std::size_t>(2 * g + 1));
  for (std::int64_t m = 0; m <= 2 * g; ++m) lines.push_back({Rational(m - g), Rational(-2 * s.count_below(m))});
  return lines;
}

inline PiecewiseLinear upsilon_from_semigroup(const FormalSemigroup& s) { return envelope(upsilon_lines(s)); }

/// sum c_i f_i, merging breakpoint sets exactly.
inline PiecewiseLinear pl_combine(std::span<const std::pair<Integer, PiecewiseLinear>> terms) {
  std::vector<Rational> bps;
  for (const auto& [c, f] : terms) bps.insert(bps.end(), f.breakpoints().begin(), f.breakpoints().end());
  bps.push_back(Rational(0));
  bps.push_back(Rational(2));
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::vector<Rational> slopes(bps.size() - 1, Rational(0));
  Rational v0 = 0;
  for (const auto& [c, f] : terms) {
    if (c == 0) continue;
    const Rational rc(c);
    v0 += rc * f.value_at_zero();
    std::size_t seg = 0;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      while (f.breakpoints()[seg + 1] <= bps[i]) ++seg;
      slopes[i] += rc * f.slopes()[seg];
    }
  }
  return PiecewiseLinear(std::move(bps), std::move(v0), std::move(slopes));
}

inline PiecewiseLinear pl_combine(std::initializer_list<std::pair<Integer, PiecewiseLinear>> terms) {
  return pl_combine(std::span<const std::pair<Integer, PiecewiseLinear>>(terms.begin(), terms.size()));
}

/// Rational-weighted variant used when peeling off basis functions.
inline PiecewiseLinear pl_axpy(const PiecewiseLinear& y, const Rational& a, const PiecewiseLinear& x) {
  std::vector<Rational> bps = y.breakpoints();
  bps.insert(bps.end(), x.breakpoints().begin(), x.breakpoints().end());
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<Rational> slopes(bps.size() - 1);
  std::size_t sy = 0, sx = 0;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    while (y.breakpoints()[sy + 1] <= bps[i]) ++sy;
    while (x.breakpoints()[sx + 1] <= bps[i]) ++sx;
    slopes[i] = y.slopes()[sy] + a * x.slopes()[sx];
  }
  return PiecewiseLinear(std::move(bps), y.value_at_zero() + a * x.value_at_zero(), std::move(slopes));
}

inline Rational evaluate(const PiecewiseLinear& f, const Rational& t) {
  if (t < 0 || t > 2) throw Error(ErrorCode::OutOfDomain, "t = " + to_string(t) + " is outside [0,2]");
  Rational value = f.value_at_zero();
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < f.segment_count(); ++i) {
    if (t <= bps[i + 1]) return value + f.slopes()[i] * (t - bps[i]);
    value += f.slopes()[i] * (bps[i + 1] - bps[i]);
  }
  return value;
}

inline JumpSpectrum jump_spectrum(const PiecewiseLinear& f) {
  JumpSpectrum out;
  for (std::size_t i = 1; i < f.segment_count(); ++i) {
    Rational jump = f.slopes()[i] - f.slopes()[i - 1];
    if (jump != 0) out.jumps.emplace(f.breakpoints()[i], std::move(jump));
  }
  return out;
}

/// Upsilon of T(n, n+1), built from the semigroup <n, n+1>.
inline PiecewiseLinear torus_consecutive_upsilon(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "torus_consecutive_upsilon requires n >= 2");
  return upsilon_from_semigroup(from_generators({n, n + 1}));
}

inline PiecewiseLinear upsilon_of_knot(const KnotExpr& k) { return upsilon_from_semigroup(semigroup_of(k)); }

/// Upsilon is additive under connected sum and odd under mirroring.
inline PiecewiseLinear upsilon_of_combination(const KnotCombination& c) {
  std::vector<std::pair<Integer, PiecewiseLinear>> terms;
  for (const auto& [k, m] : c.terms()) terms.emplace_back(Integer(m), upsilon_of_knot(k));
  return pl_combine(terms);
}

}  // namespace lspace
