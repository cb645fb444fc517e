#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gammatch/brute_force.hpp"
#include "gammatch/families.hpp"
#include "gammatch/tabloids.hpp"

using namespace gammatch;

namespace {

YPoly neg_y(std::initializer_list<std::pair<int, long>> terms) {
  YPoly p;
  for (auto [e, c] : terms) p += YPoly::monomial(e, Int(c));
  return p;
}

int count_objects(const PatternSet& gamma, int n) {
  int count = 0;
  for_each_object(gamma, n, [&](const FilledBrickTabloid&) { ++count; });
  return count;
}

}  // namespace

TEST_CASE("object space small cases", "[tabloids]") {
  auto g12 = PatternSet::normalize_raw({{1, 2}});
  CHECK(count_objects(g12, 1) == 1);
  // B=(2) admits only 21; B=(1,1) admits both orders.
  CHECK(count_objects(g12, 2) == 3);
}

TEST_CASE("streamed objects are exactly the admissible pairs", "[tabloids]") {
  auto gamma = FamilySpec::two_run_capped(2, 2).pattern_set();
  const int n = 5;
  std::set<std::pair<std::vector<int>, std::vector<int>>> streamed;
  for_each_object(gamma, n, [&](const FilledBrickTabloid& o) {
    CHECK(in_object_space(o, gamma));
    streamed.insert({o.bricks, o.perm.values});
  });
  // direct filter over every (composition, permutation) pair
  std::size_t direct = 0;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      FilledBrickTabloid o;
      int run = 1;
      for (int g = 1; g <= n - 1; ++g) {
        if (mask & (1u << (g - 1))) {
          o.bricks.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      o.bricks.push_back(run);
      o.perm.values = sigma;
      if (in_object_space(o, gamma)) {
        ++direct;
        CHECK(streamed.count({o.bricks, o.perm.values}) == 1);
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CHECK(streamed.size() == direct);
}

TEST_CASE("signed sum over the object space", "[tabloids]") {
  auto gamma = FamilySpec::pair_1324_123().pattern_set();
  YPoly total;
  for_each_object(gamma, 3, [&](const FilledBrickTabloid& o) {
    total += signed_weight_poly(o);
  });
  CHECK(total.negated_variable() == neg_y({{2, 2}, {3, 1}}));
}

TEST_CASE("the worked 19-cell example", "[tabloids]") {
  auto gamma = PatternSet::normalize_raw({{1, 3, 2, 4}, {1, 4, 2, 3}, {1, 2, 3, 4, 5}});
  FilledBrickTabloid o;
  o.bricks = {9, 3, 5, 2};
  o.perm.values = {2, 5, 9, 15, 11, 6, 16, 19, 17,
                   7, 14, 8,
                   18, 1, 3, 13, 10,
                   12, 4};
  REQUIRE(in_object_space(o, gamma));
  auto w = signed_weight(o);
  CHECK(w.sign == 1);
  CHECK(w.y_exponent == 11);

  auto image = involution_step(o, gamma);
  CHECK(image.bricks == std::vector<int>{4, 5, 3, 5, 2});
  CHECK(image.perm == o.perm);
  auto wi = signed_weight(image);
  CHECK(wi.sign == -w.sign);
  CHECK(wi.y_exponent == w.y_exponent);
  CHECK(involution_step(image, gamma) == o);

  auto art = render_ascii(o);
  CHECK(art.find("15") != std::string::npos);
  CHECK(art.find("-y") != std::string::npos);
}

TEST_CASE("involution fixed point and merge cases", "[tabloids]") {
  auto gamma = FamilySpec::pair_1324_123().pattern_set();

  FilledBrickTabloid singles;
  singles.bricks = {1, 1, 1, 1};
  singles.perm.values = {1, 2, 3, 4};
  CHECK(involution_step(singles, gamma) == singles);

  FilledBrickTabloid split_me;
  split_me.bricks = {2, 1};
  split_me.perm.values = {1, 3, 2};
  auto merged = involution_step(split_me, gamma);
  CHECK(merged.bricks == std::vector<int>{3});
  CHECK(merged.y_cells() == std::vector<int>{2});
  CHECK(involution_step(merged, gamma) == split_me);
}

TEST_CASE("involution is a sign-reversing weight-preserving pairing", "[tabloids]") {
  for (auto spec : {FamilySpec::pair_1324_123(), FamilySpec::two_run(2, 2)}) {
    auto gamma = spec.pattern_set();
    for (int n = 0; n <= 5; ++n) {
      YPoly all, fixed;
      for_each_object(gamma, n, [&](const FilledBrickTabloid& o) {
        auto image = involution_step(o, gamma);
        CHECK(involution_step(image, gamma) == o);
        if (image == o) {
          fixed += signed_weight_poly(o);
        } else {
          auto w = signed_weight(o), wi = signed_weight(image);
          CHECK(w.sign == -wi.sign);
          CHECK(w.y_exponent == wi.y_exponent);
        }
        all += signed_weight_poly(o);
      });
      CHECK(all == fixed);
      CHECK(all == fixed_point_signed_sum(gamma, n));
    }
  }
}

TEST_CASE("fixed points are generated constructively", "[tabloids]") {
  auto gamma = FamilySpec::pair_1324_123().pattern_set();
  auto fp3 = fixed_points(gamma, 3);
  REQUIRE(fp3.size() == 3);
  for (auto& o : fp3) CHECK(o.perm.values == std::vector<int>{1, 2, 3});
  CHECK(fixed_point_signed_sum(gamma, 3).negated_variable() ==
        neg_y({{2, 2}, {3, 1}}));

  auto fp2 = fixed_points(gamma, 2);
  CHECK(fp2.size() == 2);
  CHECK(fixed_point_signed_sum(gamma, 2).negated_variable() ==
        neg_y({{1, 1}, {2, 1}}));

  auto fp1 = fixed_points(gamma, 1);
  REQUIRE(fp1.size() == 1);
  CHECK(signed_weight_poly(fp1[0]) == YPoly::monomial(1, Int(-1)));
}

TEST_CASE("constructive fixed points equal the involution's", "[tabloids]") {
  for (auto spec : {FamilySpec::pair_1324_123(), FamilySpec::two_run(2, 2),
                    FamilySpec::two_run_capped(2, 2)}) {
    auto gamma = spec.pattern_set();
    for (int n = 0; n <= 5; ++n) {
      std::vector<FilledBrickTabloid> from_involution;
      for_each_object(gamma, n, [&](const FilledBrickTabloid& o) {
        if (involution_step(o, gamma) == o) from_involution.push_back(o);
      });
      auto constructive = fixed_points(gamma, n);
      std::sort(from_involution.begin(), from_involution.end(),
                [](auto& a, auto& b) {
                  return std::tie(a.perm.values, a.bricks) <
                         std::tie(b.perm.values, b.bricks);
                });
      std::sort(constructive.begin(), constructive.end(), [](auto& a, auto& b) {
        return std::tie(a.perm.values, a.bricks) <
               std::tie(b.perm.values, b.bricks);
      });
      CHECK(from_involution == constructive);
    }
  }
}

TEST_CASE("fixed point sums match inversion", "[tabloids]") {
  auto g22 = FamilySpec::two_run(2, 2).pattern_set();
  CHECK(fixed_point_signed_sum(g22, 4).negated_variable() ==
        neg_y({{1, 1}, {2, 5}, {3, 3}, {4, 1}}));
  auto g222 = FamilySpec::two_run_capped(2, 2).pattern_set();
  CHECK(fixed_point_signed_sum(g222, 5).negated_variable() ==
        neg_y({{3, 8}, {4, 4}, {5, 1}}));
}

TEST_CASE("first-brick classification", "[tabloids]") {
  auto g223 = FamilySpec::two_run_capped(2, 3);
  auto gamma = g223.pattern_set();
  // No brick may exceed s = 3.
  CHECK(fixed_point_sum_by_first_brick(gamma, 6, 4).is_zero());
  for (int n = 2; n <= 8; ++n) {
    YPoly sum;
    for (int r = 1; r <= std::min(3, n); ++r)
      sum += fixed_point_sum_by_first_brick(gamma, n, r);
    CHECK(sum == fixed_point_signed_sum(gamma, n));
    // r < k1: the first brick is forced, contributing -y U_{n-r}.
    YPoly y = YPoly::monomial(1, Int(1));
    CHECK(fixed_point_sum_by_first_brick(gamma, n, 1) ==
          -(y * fixed_point_signed_sum(gamma, n - 1)));
  }
}

TEST_CASE("first-brick partial sums satisfy the removal identities", "[tabloids]") {
  // U^(r) = -y U_{n-r} for r < k1, and U^(r)_n = U^(k1)_{n-(r-k1)} for
  // k1 < r <= s.
  const YPoly y = YPoly::monomial(1, Int(1));
  for (auto spec : {FamilySpec::two_run_capped(2, 3), FamilySpec::two_run_capped(3, 4)}) {
    auto gamma = spec.pattern_set();
    const int k1 = spec.k1, s = spec.s;
    for (int n = 2; n <= 9; ++n) {
      for (int r = 1; r < std::min(k1, n + 1); ++r)
        CHECK(fixed_point_sum_by_first_brick(gamma, n, r) ==
              -(y * fixed_point_signed_sum(gamma, n - r)));
      for (int r = k1 + 1; r <= std::min(s, n); ++r)
        CHECK(fixed_point_sum_by_first_brick(gamma, n, r) ==
              fixed_point_sum_by_first_brick(gamma, n - (r - k1), k1));
    }
  }
}

TEST_CASE("two-descent families are rejected", "[tabloids]") {
  auto gamma = FamilySpec::tau1432().pattern_set();
  CHECK_THROWS_AS(fixed_points(gamma, 3), std::domain_error);
  CHECK_THROWS_AS(count_objects(gamma, 3), std::domain_error);
}
