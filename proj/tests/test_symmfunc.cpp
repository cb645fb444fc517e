#include <catch2/catch_amalgamated.hpp>

#include "gammatch/families.hpp"
#include "gammatch/symmfunc.hpp"

using namespace gammatch;

TEST_CASE("brick tabloid counts", "[symmfunc]") {
  CHECK(brick_tabloid_count(Partition::of({1, 1, 2, 2}), 6) == 6);
  CHECK(brick_tabloid_count(Partition::of({6}), 6) == 1);
  CHECK(brick_tabloid_count(Partition::of({1, 2, 3}), 6) == 6);
  CHECK_THROWS_AS(brick_tabloid_count(Partition::of({1, 2}), 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(Partition::of({2, 1}), std::invalid_argument);
}

TEST_CASE("tabloid counts sum to the composition count", "[symmfunc]") {
  for (int n = 1; n <= 10; ++n) {
    Int total = 0;
    for (const auto& lambda : partitions_of(n))
      total += brick_tabloid_count(lambda, n);
    CHECK(total == (Int(1) << (n - 1)));
  }
}

TEST_CASE("theta_h_direct reproduces published rows", "[symmfunc]") {
  auto g = FamilySpec::pair_1324_123().pattern_set();
  CHECK(theta_h_direct(g, 3).negated_variable() ==
        YPoly::monomial(2, Int(2)) + YPoly::monomial(3, Int(1)));
  CHECK(theta_h_direct(g, 1) == YPoly::monomial(1, Int(-1)));

  auto g22 = FamilySpec::two_run(2, 2).pattern_set();
  YPoly row5;
  row5 += YPoly::monomial(1, Int(1));
  row5 += YPoly::monomial(2, Int(9));
  row5 += YPoly::monomial(3, Int(11));
  row5 += YPoly::monomial(4, Int(4));
  row5 += YPoly::monomial(5, Int(1));
  CHECK(theta_h_direct(g22, 5).negated_variable() == row5);
}

TEST_CASE("composition route equals partition route", "[symmfunc]") {
  for (auto spec : {FamilySpec::pair_1324_123(), FamilySpec::two_run(2, 3),
                    FamilySpec::two_run_capped(2, 3)}) {
    auto gamma = spec.pattern_set();
    for (int n = 0; n <= 7; ++n)
      CHECK(theta_h_direct(gamma, n) == theta_h_by_partitions(gamma, n));
  }
}
