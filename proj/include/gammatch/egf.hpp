#pragma once

#include <stdexcept>
#include <vector>

#include "gammatch/bigint.hpp"
#include "gammatch/poly.hpp"

namespace gammatch {

/// Truncated exponential generating function. c[n] stores n! * [t^n] of the
/// series, so products and reciprocals are binomial convolutions over integer
/// polynomials and nothing ever divides.
template <class P>
struct EgfSeries {
  std::vector<P> c;  // c[0..N]

  EgfSeries() = default;
  explicit EgfSeries(std::vector<P> coeffs) : c(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c.size()) - 1; }

  static EgfSeries identity(int order) {
    EgfSeries s;
    s.c.assign(order + 1, P{});
    s.c[0] = P::one();
    return s;
  }

  bool operator==(const EgfSeries&) const = default;
};

template <class P>
EgfSeries<P> egf_product(const EgfSeries<P>& a, const EgfSeries<P>& b, int order) {
  if (a.order() < order || b.order() < order)
    throw std::invalid_argument("egf_product: operand order too small");
  EgfSeries<P> r;
  r.c.assign(order + 1, P{});
  for (int n = 0; n <= order; ++n) {
    P acc{};
    for (int k = 0; k <= n; ++k) acc += binomial(n, k) * (a.c[k] * b.c[n - k]);
    r.c[n] = std::move(acc);
  }
  return r;
}

/// B with egf_product(A, B) = 1; requires a_0 = 1.
template <class P>
EgfSeries<P> egf_reciprocal(const EgfSeries<P>& a, int order) {
  if (a.order() < order)
    throw std::invalid_argument("egf_reciprocal: operand order too small");
  if (!(a.c[0] == P::one()))
    throw std::invalid_argument("egf_reciprocal: constant term must be 1");
  EgfSeries<P> b;
  b.c.assign(order + 1, P{});
  b.c[0] = P::one();
  for (int n = 1; n <= order; ++n) {
    P acc{};
    for (int k = 1; k <= n; ++k) acc += binomial(n, k) * (a.c[k] * b.c[n - k]);
    b.c[n] = -acc;
  }
  return b;
}

template <class P>
EgfSeries<P> egf_integer_power(const EgfSeries<P>& a, int m, int order) {
  if (m < 0) throw std::invalid_argument("egf_integer_power: negative power");
  if (a.order() < order)
    throw std::invalid_argument("egf_integer_power: operand order too small");
  EgfSeries<P> r = EgfSeries<P>::identity(order);
  for (int i = 0; i < m; ++i) r = egf_product(r, a, order);
  return r;
}

namespace detail {

// Exact Lagrange interpolation through (nodes[j], values[j]); the data must
// lie on an integer-coefficient polynomial or this throws.
inline std::vector<Int> interpolate_integer_poly(const std::vector<int>& nodes,
                                                 const std::vector<Int>& values) {
  const std::size_t m = nodes.size();
  std::vector<Rat> acc(m, Rat(0));
  std::vector<Rat> basis;
  for (std::size_t j = 0; j < m; ++j) {
    basis.assign(1, Rat(1));
    Rat denom(1);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      // multiply basis by (x - nodes[i])
      basis.push_back(Rat(0));
      for (std::size_t d = basis.size() - 1; d > 0; --d)
        basis[d] = basis[d - 1] - Rat(nodes[i]) * basis[d];
      basis[0] = -Rat(nodes[i]) * basis[0];
      denom *= Rat(nodes[j] - nodes[i]);
    }
    Rat scale = Rat(values[j]) / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += scale * basis[d];
  }
  std::vector<Int> out(m);
  for (std::size_t d = 0; d < m; ++d) {
    if (boost::multiprecision::denominator(acc[d]) != 1)
      throw std::logic_error("interpolation produced a non-integer coefficient");
    out[d] = boost::multiprecision::numerator(acc[d]);
  }
  return out;
}

}  // namespace detail

/// A(t)^x for a_0 = 1: coefficient n is a polynomial in x of x-degree <= n,
/// recovered by evaluating integer powers A^m at m = 1..n+1 and interpolating
/// exactly, coefficient-wise in y.
inline EgfSeries<XYPoly> egf_formal_x_power(const EgfSeries<YPoly>& a, int order) {
  if (a.order() < order)
    throw std::invalid_argument("egf_formal_x_power: operand order too small");
  if (!(a.c[0] == YPoly::one()))
    throw std::invalid_argument("egf_formal_x_power: constant term must be 1");

  // powers[m] = A^m, m = 0..order+1
  std::vector<EgfSeries<YPoly>> powers;
  powers.reserve(order + 2);
  powers.push_back(EgfSeries<YPoly>::identity(order));
  for (int m = 1; m <= order + 1; ++m)
    powers.push_back(egf_product(powers.back(), a, order));

  EgfSeries<XYPoly> r;
  r.c.assign(order + 1, XYPoly{});
  for (int n = 0; n <= order; ++n) {
    std::vector<int> nodes(n + 1);
    for (int j = 0; j <= n; ++j) nodes[j] = j + 1;
    int ydeg = -1;
    for (int j = 0; j <= n; ++j)
      ydeg = std::max(ydeg, powers[nodes[j]].c[n].degree());
    XYPoly cn;
    for (int e = 0; e <= ydeg; ++e) {
      std::vector<Int> vals(n + 1);
      for (int j = 0; j <= n; ++j) vals[j] = powers[nodes[j]].c[n].coeff(e);
      std::vector<Int> xcoeffs = detail::interpolate_integer_poly(nodes, vals);
      for (std::size_t k = 0; k < xcoeffs.size(); ++k)
        cn.add_term(static_cast<int>(k), e, xcoeffs[k]);
    }
    r.c[n] = std::move(cn);
  }
  return r;
}

}  // namespace gammatch
