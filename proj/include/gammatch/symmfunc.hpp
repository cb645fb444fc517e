#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "gammatch/bigint.hpp"
#include "gammatch/brute_force.hpp"
#include "gammatch/perm.hpp"
#include "gammatch/poly.hpp"

namespace gammatch {

/// A partition: weakly increasing positive parts.
struct Partition {
  std::vector<int> parts;

  static Partition of(std::vector<int> p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i && p[i] < p[i - 1])
        throw std::invalid_argument("partition parts must be weakly increasing");
    }
    return Partition{std::move(p)};
  }

  int n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }

  int length() const { return static_cast<int>(parts.size()); }
};

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int min_part) {
    if (rest == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = min_part; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, 1);
  return out;
}

/// B_{lambda,n}: the number of orderings of the parts of lambda filling a
/// 1 x n row, i.e. the multinomial of part multiplicities.
inline Int brick_tabloid_count(const Partition& lambda, int n) {
  if (lambda.n() != n)
    throw std::invalid_argument("brick_tabloid_count: |lambda| != n");
  std::map<int, int> mult;
  for (int p : lambda.parts) ++mult[p];
  Int r = factorial(lambda.length());
  for (auto& [part, m] : mult) r = exact_div(r, factorial(m));
  return r;
}

inline void for_each_composition(int n,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  if (n == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  // Cut positions encoded in a bitmask over the n-1 gaps.
  for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int g = 0; g < n - 1; ++g) {
      if (mask & (1ul << g)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    fn(parts);
  }
}

/// n! Theta_Gamma(h_n) computed directly: sum over compositions (b_1..b_l)
/// of n of (-1)^l multinomial(n; b) prod_i NM_{Gamma,b_i}(1,y). Equals
/// U_{Gamma,n}(y).
inline YPoly theta_h_direct(const PatternSet& gamma, int n) {
  if (n < 0) throw std::invalid_argument("theta_h_direct: n >= 0");
  if (n > 12)
    throw std::invalid_argument("theta_h_direct: n above supported range");
  if (n == 0) return YPoly::one();
  auto nm = nm_table_y(gamma, n);
  YPoly total;
  for_each_composition(n, [&](const std::vector<int>& parts) {
    YPoly prod = YPoly::one();
    for (int b : parts) prod = prod * nm[b];
    Int coeff = multinomial(n, parts);
    if (parts.size() % 2) coeff = -coeff;
    total += coeff * prod;
  });
  return total;
}

/// Same quantity grouped by partition using B_{lambda,n}; a second algebraic
/// route used to cross-check brick_tabloid_count in context.
inline YPoly theta_h_by_partitions(const PatternSet& gamma, int n) {
  if (n == 0) return YPoly::one();
  auto nm = nm_table_y(gamma, n);
  YPoly total;
  for (const auto& lambda : partitions_of(n)) {
    YPoly prod = YPoly::one();
    for (int b : lambda.parts) prod = prod * nm[b];
    Int coeff = brick_tabloid_count(lambda, n) * multinomial(n, lambda.parts);
    if (lambda.length() % 2) coeff = -coeff;
    total += coeff * prod;
  }
  return total;
}

}  // namespace gammatch
