#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammatch/bigint.hpp"
#include "gammatch/families.hpp"
#include "gammatch/poly.hpp"

namespace gammatch {

namespace detail {

inline YPoly y_monomial(int e, long c = 1) { return YPoly::monomial(e, Int(c)); }

// (-y)^k as a polynomial.
inline YPoly neg_y_pow(int k) {
  return YPoly::monomial(k, (k % 2) ? Int(-1) : Int(1));
}

inline Int hessenberg_determinant(std::vector<std::vector<Int>> m) {
  // Fraction-free Bareiss elimination with row pivoting.
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace detail

/// The displayed Catalan-entry matrix whose determinant is H_i: a k x k
/// Hessenberg matrix with -1 on the subdiagonal, zeros below, and band
/// entries C_{3(j-i)+2}; for odd i = 2k-1 the last column is C_{3(k-i)+1}.
inline std::vector<std::vector<Int>> hankel_catalan_matrix(int i) {
  if (i < 1) throw std::invalid_argument("hankel_catalan_matrix: i >= 1");
  const bool odd = (i % 2) == 1;
  const int k = odd ? (i + 1) / 2 : i / 2;
  std::vector<std::vector<Int>> m(k, std::vector<Int>(k, Int(0)));
  for (int r = 1; r <= k; ++r) {
    for (int c = 1; c <= k; ++c) {
      if (c == r - 1)
        m[r - 1][c - 1] = -1;
      else if (c < r - 1)
        m[r - 1][c - 1] = 0;
      else if (odd && c == k)
        m[r - 1][c - 1] = catalan(3 * (k - r) + 1);
      else
        m[r - 1][c - 1] = catalan(3 * (c - r) + 2);
    }
  }
  return m;
}

inline Int hankel_catalan_h(int i) {
  return detail::hessenberg_determinant(hankel_catalan_matrix(i));
}

namespace detail {

inline YPoly recursion_step(const FamilySpec& f, int n,
                            const std::vector<YPoly>& table) {
  const YPoly y = y_monomial(1);
  const YPoly one = YPoly::one();
  const YPoly one_minus_y = one - y;
  auto u = [&](int m) -> YPoly { return m < 0 ? YPoly{} : table[m]; };

  switch (f.kind) {
    case FamilyKind::pair_1324_123: {
      YPoly r = -(y * u(n - 1)) - y * u(n - 2);
      for (int k = 2; 2 * k <= n; ++k)
        r += catalan(k - 1) * (neg_y_pow(k) * u(n - 2 * k));
      return r;
    }
    case FamilyKind::family_1324p: {
      const int p = f.p;
      YPoly r;
      for (int k = 1; k <= p - 2; ++k) r -= y * u(n - k);
      // Chains of overlapping matches need a first brick of at least two
      // cells; the leftover fixed point may have any size down to zero.
      for (int k = 2; k <= p - 2; ++k)
        for (int m = 2; n - k - (m - 1) * (p - 2) >= 0; ++m)
          r += neg_y_pow(m) * u(n - k - (m - 1) * (p - 2));
      return r;
    }
    case FamilyKind::two_run: {
      const int small = std::min(f.k1, f.k2);
      const int large = std::max(f.k1, f.k2);
      YPoly r = one_minus_y * u(n - 1);
      // The second case (2 in cell k1+1) needs room for a match across the
      // first two bricks, so it only exists once n reaches the pattern length.
      if (n >= f.k1 + f.k2) {
        YPoly inner = u(n - large);
        YPoly tail;
        for (int i = 1; i <= small - 1; ++i) tail += u(n - large - i);
        inner += y * tail;
        r -= binomial(n - 2, f.k1 - 1) * (y * inner);
      }
      return r;
    }
    case FamilyKind::two_run_capped: {
      const int k1 = f.k1, s = f.s;
      YPoly r;
      for (int rr = 1; rr <= k1 - 1; ++rr) r -= y * u(n - rr);
      for (int p = 0; p <= s - k1; ++p) {
        const Int b = binomial(n - p - 2, k1 - 1);
        r -= (Int(1) + b) * (y * u(n - p - k1));
        YPoly tail;
        for (int a = 1; a <= k1 - 1; ++a) tail += u(n - p - k1 - a);
        r -= b * (y_monomial(2) * tail);
      }
      return r;
    }
    case FamilyKind::tau_1432:
      return one_minus_y * u(n - 1) -
             binomial(n - 2, 2) * (y_monomial(2) * u(n - 3));
    case FamilyKind::tau_142536: {
      YPoly r = one_minus_y * u(n - 1);
      for (int k = 1; 6 * k <= n - 2; ++k)
        r += hankel_catalan_h(2 * k) * (y_monomial(3 * k) * u(n - 6 * k - 1));
      for (int k = 1; 6 * k <= n; ++k)
        r -= hankel_catalan_h(2 * k - 1) *
             (y_monomial(3 * k - 1) * (u(n - 6 * k + 2) + y * u(n - 6 * k + 1)));
      return r;
    }
    case FamilyKind::tau_162534: {
      YPoly r = one_minus_y * u(n - 1);
      for (int k = 1; 6 * k <= n; ++k)
        r -= binomial(n - 3 * k - 1, 3 * k - 1) *
             (y_monomial(3 * k - 1) * u(n - 6 * k + 1));
      for (int k = 1; 6 * k <= n - 2; ++k)
        r += binomial(n - 3 * k - 2, 3 * k) *
             (y_monomial(3 * k) * u(n - 6 * k - 1));
      return r;
    }
    case FamilyKind::pair_14253_15243: {
      YPoly r = one_minus_y * u(n - 1);
      // A five-cell match cannot consume the whole object, so the removal
      // terms only exist for n >= 5.
      if (n >= 5) {
        YPoly inner = u(n - 4) + Int(n - 5) * (one_minus_y * u(n - 5));
        r -= Int(n - 3) * (y_monomial(2) * inner);
        r += Int(n - 3) * Int(n - 5) * Int(n - 6) * (y_monomial(3) * u(n - 6));
      }
      return r;
    }
  }
  throw std::logic_error("unknown family kind");
}

inline std::map<std::string, std::vector<YPoly>>& recursion_cache() {
  static std::map<std::string, std::vector<YPoly>> cache;
  return cache;
}

inline std::mutex& recursion_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

/// U_{Gamma,n}(y) via the family recursion, bottom-up with U_0 = 1,
/// U_1 = -y and U_m = 0 for m < 0. Memoized per family.
inline YPoly recursion_u(const FamilySpec& f, int n) {
  if (n < 0) return {};
  std::lock_guard<std::mutex> lock(detail::recursion_mutex());
  auto& table = detail::recursion_cache()[f.key()];
  if (table.empty()) {
    table.push_back(YPoly::one());
    table.push_back(detail::y_monomial(1, -1));
  }
  while (static_cast<int>(table.size()) <= n)
    table.push_back(
        detail::recursion_step(f, static_cast<int>(table.size()), table));
  return table[n];
}

/// The four closed forms, by family and parity of n.
enum class ClosedForm {
  gamma222_even,
  gamma222_odd,
  pair1324_123_even,
  pair1324_123_odd,
};

inline YPoly closed_form_u(ClosedForm which, int n) {
  if (n < 0) throw std::invalid_argument("closed_form_u: n >= 0");
  const bool want_even = which == ClosedForm::gamma222_even ||
                         which == ClosedForm::pair1324_123_even;
  if ((n % 2 == 0) != want_even)
    throw std::invalid_argument("closed_form_u: parity of n does not match");
  YPoly r;
  switch (which) {
    case ClosedForm::gamma222_even: {
      const int k = n / 2;
      for (int i = 0; i <= k; ++i) {
        Int c = double_falling_factorial(2 * k - 1, k - i);
        if ((k + i) % 2) c = -c;
        r += YPoly::monomial(k + i, c);
      }
      return r;
    }
    case ClosedForm::gamma222_odd: {
      const int k = (n - 1) / 2;
      for (int i = 0; i <= k; ++i) {
        Int c = double_falling_factorial(2 * k, k - i);
        if ((k + 1 + i) % 2) c = -c;
        r += YPoly::monomial(k + 1 + i, c);
      }
      return r;
    }
    case ClosedForm::pair1324_123_even: {
      const int m = n / 2;
      for (int k = 0; k <= m; ++k) {
        Int c = exact_div(Int(2 * k + 1) * binomial(2 * m, m - k),
                          Int(m + k + 1));
        if ((m + k) % 2) c = -c;
        r += YPoly::monomial(m + k, c);
      }
      return r;
    }
    case ClosedForm::pair1324_123_odd: {
      const int m = (n - 1) / 2;
      for (int k = 0; k <= m; ++k) {
        Int c = exact_div(Int(2 * (k + 1)) * binomial(2 * m + 1, m - k),
                          Int(m + k + 2));
        if ((m + k + 1) % 2) c = -c;
        r += YPoly::monomial(m + k + 1, c);
      }
      return r;
    }
  }
  throw std::logic_error("unknown closed form");
}

struct LowestCoeff {
  int exponent = 0;  // power of y in U(-y) carrying the lowest coefficient
  Int value;
};

/// The lowest-power coefficient of U_{gamma(2,2,s),n}(-y) where a formula is
/// stated: residue classes 0 and s-1 mod s for any s >= 3, plus class 1 mod 3
/// when s = 3 (the A_k recursion). Other classes are not covered.
inline std::optional<LowestCoeff> lowest_coeff(int s, int n) {
  if (s < 3) throw std::invalid_argument("lowest_coeff: s >= 3");
  if (n < 1) throw std::invalid_argument("lowest_coeff: n >= 1");
  const int q = n / s;
  const int rem = n % s;
  if (rem == 0) {
    Int v = 1;
    for (int i = 1; i <= q; ++i) v *= Int((i - 1) * s + 1);
    return LowestCoeff{q, v};
  }
  if (rem == s - 1) {
    Int v = 1;
    for (int i = 1; i <= q; ++i) v *= Int((i + 1) * s + 1);
    return LowestCoeff{q + 1, v};
  }
  if (s == 3 && rem == 1 && q >= 1) {
    // A_1 = 5, A_k = (3k-1) A_{k-1} + 3k * prod_{i<k} (3i+4)
    Int a = 5;
    Int prod = 1;  // prod_{i=1}^{k-1} (3i+4)
    for (int k = 2; k <= q; ++k) {
      prod *= Int(3 * (k - 1) + 4);
      a = Int(3 * k - 1) * a + Int(3 * k) * prod;
    }
    return LowestCoeff{q + 1, a};
  }
  return std::nullopt;
}

}  // namespace gammatch
