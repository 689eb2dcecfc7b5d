// Walks the J_k = (T(2,3))_{k,2k-1} family: semigroup, Upsilon, and the
// lambda_k value that separates it from combinations of algebraic knots.

#include <iostream>

#include "lspace/obstruct.hpp"

int main() {
  using namespace lspace;
  for (std::int64_t k = 3; k <= 6; ++k) {
    const auto knot = KnotExpr::j_family(k);
    const auto s = semigroup_of(knot);
    const auto f = upsilon_from_semigroup(s);
    std::cout << knot.to_string() << "  genus " << s.genus() << "  generators {";
    const auto gens = iterated_torus_generators(knot);
    for (std::size_t i = 0; i < gens.size(); ++i) std::cout << (i ? "," : "") << gens[i];
    std::cout << "}\n  Upsilon breakpoints:";
    for (const auto& b : f.breakpoints()) std::cout << " " << to_string(b);
    std::cout << "\n  lambda_" << k << " = " << to_string(lambda(k, f));
    const auto report = algebraicity_report(knot);
    std::cout << "  verdict " << to_string(report.verdict) << "\n";
  }
}
