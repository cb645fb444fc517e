#include <catch2/catch_amalgamated.hpp>

#include "gammatch/analysis.hpp"

using namespace gammatch;

namespace {

YPoly from_coeffs(int lowest, std::initializer_list<long> coeffs) {
  YPoly p;
  int e = lowest;
  for (long c : coeffs) p += YPoly::monomial(e++, Int(c));
  return p;
}

}  // namespace

TEST_CASE("log-concavity checks", "[analysis]") {
  // U_{gamma(2,2),6}(-y)
  auto u6 = from_coeffs(1, {1, 14, 36, 19, 5, 1});
  CHECK(is_log_concave(u6).holds);

  // the equality case fails the strict inequality
  auto flat = from_coeffs(0, {1, 1, 1});
  auto lc = is_log_concave(flat);
  CHECK(!lc.holds);
  CHECK(lc.first_violation == 1);

  // U_{gamma(6,4),10}(-y) begins y + 65y^2 + 36y^3 + 84y^4 ...
  auto u64 = from_coeffs(1, {1, 65, 36, 84, 126, 126, 84, 36, 9, 1});
  CHECK(!is_log_concave(u64).holds);

  CHECK(is_log_concave(from_coeffs(2, {7, 3})).holds);  // two terms: vacuous
  CHECK(!is_log_concave(from_coeffs(0, {1, 0, 1})).holds);  // internal zero
}

TEST_CASE("unimodality checks", "[analysis]") {
  auto u64 = from_coeffs(1, {1, 65, 36, 84, 126, 126, 84, 36, 9, 1});
  CHECK(!is_unimodal(u64).holds);

  auto rising_falling = from_coeffs(3, {1, 4, 4, 2});
  auto um = is_unimodal(rising_falling);
  CHECK(um.holds);
  CHECK(um.argmax_exponents == std::vector<int>{4, 5});

  CHECK(is_unimodal(YPoly(Int(7))).holds);
  CHECK(is_unimodal(YPoly()).holds);
}

TEST_CASE("survey reproduces the reported observations", "[analysis]") {
  auto g22 = FamilySpec::two_run(2, 2);
  auto rows = survey(g22, 1, 27);
  for (auto& row : rows) {
    if (row.n <= 21) CHECK(row.log_concave);
    if (row.n == 18) CHECK(row.argmax_exponents == std::vector<int>{8});
    if (row.n == 19) CHECK(row.argmax_exponents == std::vector<int>{9});
    if (row.n == 26) CHECK(row.argmax_exponents == std::vector<int>{12});
    if (row.n == 27) CHECK(row.argmax_exponents == std::vector<int>{12});
  }

  auto g64 = FamilySpec::two_run(6, 4);
  auto rows64 = survey(g64, 10, 11);
  CHECK(!rows64[0].unimodal);
  CHECK(!rows64[1].unimodal);
}

TEST_CASE("strict log-concavity implies unimodality on surveyed rows", "[analysis]") {
  for (auto spec : {FamilySpec::two_run(2, 2), FamilySpec::two_run(6, 4),
                    FamilySpec::pair_1324_123(), FamilySpec::two_run_capped(2, 3)}) {
    for (auto& row : survey(spec, 1, 18)) {
      if (row.log_concave) CHECK(row.unimodal);
    }
  }
}
