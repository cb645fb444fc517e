#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gammatch {

// All coefficient arithmetic in this library is exact. Counts and polynomial
// coefficients use Int; interpolation intermediates use Rat.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

namespace detail {

inline std::vector<std::vector<Int>>& pascal_rows() {
  static std::vector<std::vector<Int>> rows{{Int(1)}};
  return rows;
}

inline std::mutex& pascal_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

// binom(n, k) with the combinatorial convention: 0 outside 0 <= k <= n.
inline Int binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(detail::pascal_mutex());
  auto& rows = detail::pascal_rows();
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<Int> next(prev.size() + 1, Int(1));
    for (std::size_t j = 1; j + 1 < next.size(); ++j)
      next[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(next));
  }
  return rows[n][k];
}

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// multinomial(n; parts) where sum(parts) must equal n.
inline Int multinomial(int n, const std::vector<int>& parts) {
  Int r = 1;
  int rest = n;
  for (int b : parts) {
    if (b < 0 || b > rest) throw std::invalid_argument("bad multinomial part");
    r *= binomial(rest, b);
    rest -= b;
  }
  if (rest != 0) throw std::invalid_argument("multinomial parts do not sum to n");
  return r;
}

// C_n = binom(2n, n) / (n + 1).
inline Int catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan of negative index");
  Int num = binomial(2 * n, n);
  Int den = n + 1;
  if (num % den != 0) throw std::logic_error("catalan division not exact");
  return num / den;
}

// (x)vv_k = x (x-2) (x-4) ... (x-2k+2), with (x)vv_0 = 1.
inline Int double_falling_factorial(int x, int k) {
  Int r = 1;
  for (int j = 0; j < k; ++j) r *= Int(x - 2 * j);
  return r;
}

// q = a / b asserting exact divisibility.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("division by zero");
  if (a % b != 0) throw std::logic_error("expected exact division");
  return a / b;
}

}  // namespace gammatch
