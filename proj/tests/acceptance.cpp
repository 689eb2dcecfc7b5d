// One test per reproduction criterion; each prints a PASS/FAIL line.
#include <gtest/gtest.h>

#include <iostream>

#include "lspace/acceptance.hpp"

namespace lspace::acceptance {
namespace {

void expect_check(const std::string& id) {
  for (const auto& c : checks()) {
    if (c.id != id) continue;
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << c.id << " -- " << c.anchor;
    if (!r.passed) std::cout << " :: " << r.detail;
    std::cout << std::endl;
    EXPECT_TRUE(r.passed) << r.detail;
    return;
  }
  FAIL() << "no check named " << id;
}

TEST(Acceptance, Torus37) { expect_check("torus-3-7"); }
TEST(Acceptance, PretzelP237) { expect_check("pretzel-p237"); }
TEST(Acceptance, CablingCoherence) { expect_check("cabling-coherence"); }
TEST(Acceptance, JSemigroups) { expect_check("j-semigroups"); }
TEST(Acceptance, JUpsilon) { expect_check("j-upsilon"); }
TEST(Acceptance, LambdaMatrix) { expect_check("lambda-matrix"); }
TEST(Acceptance, Decomposition) { expect_check("decomposition"); }
TEST(Acceptance, Properties) { expect_check("properties"); }
TEST(Acceptance, JumpEquality) { expect_check("jump-equality"); }

TEST(Acceptance, EveryCheckIsCovered) { EXPECT_EQ(checks().size(), 9u); }

}  // namespace
}  // namespace lspace::acceptance

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
