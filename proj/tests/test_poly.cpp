#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gammatch/egf.hpp"
#include "gammatch/poly.hpp"

using namespace gammatch;

namespace {

EgfSeries<YPoly> exp_series(int order) {
  EgfSeries<YPoly> s;
  s.c.assign(order + 1, YPoly::one());
  return s;
}

YPoly random_ypoly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-5, 5);
  YPoly p;
  int d = deg(rng);
  for (int e = 0; e <= d; ++e) p += YPoly::monomial(e, Int(coeff(rng)));
  return p;
}

EgfSeries<YPoly> random_unit_series(std::mt19937& rng, int order) {
  EgfSeries<YPoly> s;
  s.c.push_back(YPoly::one());
  for (int n = 1; n <= order; ++n) s.c.push_back(random_ypoly(rng, 4));
  return s;
}

}  // namespace

TEST_CASE("YPoly basics", "[poly]") {
  YPoly p = YPoly::monomial(2, Int(2)) + YPoly::monomial(3, Int(1));
  CHECK(p.to_string() == "2y^2 + y^3");
  CHECK(p.degree() == 3);
  CHECK(p.lowest_exponent() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.negated_variable().to_string() == "2y^2 - y^3");
  CHECK((YPoly::monomial(1, Int(1)) * YPoly::monomial(1, Int(1))).to_string() == "y^2");
  CHECK(YPoly().to_string() == "0");
  CHECK(p.evaluate(2) == 16);
}

TEST_CASE("XYPoly substitution", "[poly]") {
  XYPoly p = XYPoly::monomial(1, 1, Int(1)) + XYPoly::monomial(2, 2, Int(1));
  CHECK(p.to_string() == "xy + x^2y^2");
  CHECK(p.substitute_x(1) == YPoly::monomial(1, Int(1)) + YPoly::monomial(2, Int(1)));
  CHECK(p.substitute_x(2) ==
        YPoly::monomial(1, Int(2)) + YPoly::monomial(2, Int(4)));
  CHECK(p.x_degree() == 2);
}

TEST_CASE("egf_product squares e^t", "[egf]") {
  auto c = egf_product(exp_series(3), exp_series(3), 3).c;
  for (int n = 0; n <= 3; ++n) CHECK(c[n] == YPoly(Int(1) << n));
}

TEST_CASE("egf_product with the identity series", "[egf]") {
  std::mt19937 rng(5);
  auto a = random_unit_series(rng, 6);
  CHECK(egf_product(a, EgfSeries<YPoly>::identity(6), 6) == a);
}

TEST_CASE("egf_product binomial convolution by hand", "[egf]") {
  EgfSeries<YPoly> a;
  a.c = {YPoly::one(), YPoly::monomial(1, Int(1)), YPoly{}};
  auto sq = egf_product(a, a, 2);
  // c_2 = binom(2,1) * y * y = 2y^2
  CHECK(sq.c[2] == YPoly::monomial(2, Int(2)));
}

TEST_CASE("egf_reciprocal of e^t is e^-t", "[egf]") {
  auto b = egf_reciprocal(exp_series(5), 5).c;
  for (int n = 0; n <= 5; ++n)
    CHECK(b[n] == YPoly(Int(n % 2 ? -1 : 1)));
}

TEST_CASE("egf_reciprocal of 1+t", "[egf]") {
  EgfSeries<YPoly> a;
  a.c.assign(7, YPoly{});
  a.c[0] = YPoly::one();
  a.c[1] = YPoly::one();
  auto b = egf_reciprocal(a, 6).c;
  Int fact = 1;
  for (int n = 0; n <= 6; ++n) {
    if (n) fact *= n;
    CHECK(b[n] == YPoly(Int(n % 2 ? -fact : fact)));
  }
}

TEST_CASE("egf_reciprocal requires constant term 1", "[egf]") {
  EgfSeries<YPoly> a;
  a.c.assign(3, YPoly::one());
  a.c[0] = YPoly(Int(2));
  CHECK_THROWS_AS(egf_reciprocal(a, 2), std::invalid_argument);
}

TEST_CASE("egf operations reject short operands", "[egf]") {
  auto a = exp_series(3);
  CHECK_THROWS_AS(egf_product(a, a, 4), std::invalid_argument);
  CHECK_THROWS_AS(egf_reciprocal(a, 5), std::invalid_argument);
  CHECK_THROWS_AS(egf_formal_x_power(a, 9), std::invalid_argument);
}

TEST_CASE("product with reciprocal is the identity series", "[egf]") {
  std::mt19937 rng(17);
  for (int round = 0; round < 10; ++round) {
    int order = 8 + round % 5;
    auto a = random_unit_series(rng, order);
    auto b = egf_reciprocal(a, order);
    CHECK(egf_product(a, b, order) == EgfSeries<YPoly>::identity(order));
  }
}

TEST_CASE("egf_integer_power basics", "[egf]") {
  std::mt19937 rng(23);
  auto a = random_unit_series(rng, 5);
  CHECK(egf_integer_power(a, 0, 5) == EgfSeries<YPoly>::identity(5));
  auto cubes = egf_integer_power(exp_series(4), 3, 4).c;
  for (int n = 0; n <= 4; ++n) {
    Int want = 1;
    for (int i = 0; i < n; ++i) want *= 3;
    CHECK(cubes[n] == YPoly(want));
  }
}

TEST_CASE("formal x power of e^t is e^{xt}", "[egf]") {
  auto pw = egf_formal_x_power(exp_series(5), 5).c;
  for (int n = 0; n <= 5; ++n) CHECK(pw[n] == XYPoly::monomial(n, 0, Int(1)));
}

TEST_CASE("formal x power first-order coefficients", "[egf]") {
  std::mt19937 rng(31);
  for (int round = 0; round < 5; ++round) {
    auto a = random_unit_series(rng, 4);
    auto pw = egf_formal_x_power(a, 4).c;
    CHECK(pw[0] == XYPoly::one());
    // c_1 = a_1 * x
    XYPoly want;
    for (int e = 0; e <= a.c[1].degree(); ++e)
      want.add_term(1, e, a.c[1].coeff(e));
    CHECK(pw[1] == want);
  }
}

TEST_CASE("formal x power specializes to integer powers", "[egf]") {
  std::mt19937 rng(47);
  for (int round = 0; round < 4; ++round) {
    int order = 6;
    auto a = random_unit_series(rng, order);
    auto pw = egf_formal_x_power(a, order);
    for (int m = 0; m <= order + 3; ++m) {
      auto direct = egf_integer_power(a, m, order);
      for (int n = 0; n <= order; ++n)
        CHECK(pw.c[n].substitute_x(m) == direct.c[n]);
    }
  }
}

TEST_CASE("formal x power at x = 1 returns the series", "[egf]") {
  std::mt19937 rng(53);
  auto a = random_unit_series(rng, 7);
  auto pw = egf_formal_x_power(a, 7);
  for (int n = 0; n <= 7; ++n) CHECK(pw.c[n].substitute_x(1) == a.c[n]);
}

TEST_CASE("formal x power coefficients have x-degree at most n", "[egf]") {
  std::mt19937 rng(61);
  for (int round = 0; round < 5; ++round) {
    auto a = random_unit_series(rng, 6);
    auto pw = egf_formal_x_power(a, 6);
    for (int n = 0; n <= 6; ++n) CHECK(pw.c[n].x_degree() <= n);
  }
}
