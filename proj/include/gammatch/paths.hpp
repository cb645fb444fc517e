#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammatch/bigint.hpp"
#include "gammatch/perm.hpp"
#include "gammatch/tabloids.hpp"

namespace gammatch {

/// A path over steps U = (1,1) and D = (1,-1) starting at height 0.
struct LatticePath {
  std::string steps;  // characters 'U' and 'D'

  static LatticePath parse(const std::string& s) {
    for (char c : s)
      if (c != 'U' && c != 'D')
        throw std::invalid_argument("path steps must be 'U' or 'D'");
    return LatticePath{s};
  }

  int length() const { return static_cast<int>(steps.size()); }

  /// h[0] = 0 and h[i] = height after step i.
  std::vector<int> heights() const {
    std::vector<int> h(length() + 1, 0);
    for (int i = 1; i <= length(); ++i)
      h[i] = h[i - 1] + (steps[i - 1] == 'U' ? 1 : -1);
    return h;
  }

  int end_height() const {
    int h = 0;
    for (char c : steps) h += (c == 'U') ? 1 : -1;
    return h;
  }

  int min_height() const {
    int h = 0, mn = 0;
    for (char c : steps) {
      h += (c == 'U') ? 1 : -1;
      mn = std::min(mn, h);
    }
    return mn;
  }

  int down_steps_ending_at_zero() const {
    int h = 0, count = 0;
    for (char c : steps) {
      h += (c == 'U') ? 1 : -1;
      if (c == 'D' && h == 0) ++count;
    }
    return count;
  }

  bool is_dyck() const { return end_height() == 0 && min_height() >= 0; }

  /// Reflection about the x-axis.
  LatticePath flipped() const {
    LatticePath r = *this;
    for (char& c : r.steps) c = (c == 'U') ? 'D' : 'U';
    return r;
  }

  bool operator==(const LatticePath&) const = default;
  auto operator<=>(const LatticePath&) const = default;
};

/// T(n,k): length 2n+1, ends at height 2k+1, never below the axis.
inline bool is_t_path(const LatticePath& p, int n, int k) {
  return p.length() == 2 * n + 1 && p.end_height() == 2 * k + 1 &&
         p.min_height() >= 0;
}

/// R(n,k): length 2n, ends at height 0, exactly k down steps ending at 0;
/// may dip below the axis.
inline bool is_r_path(const LatticePath& p, int n, int k) {
  return p.length() == 2 * n && p.end_height() == 0 &&
         p.down_steps_ending_at_zero() == k;
}

/// Standard tableau of shape (r, r): rows increasing, columns increasing
/// top-to-bottom with row1 on top.
struct TwoRowSYT {
  std::vector<int> row1, row2;

  static TwoRowSYT of(std::vector<int> r1, std::vector<int> r2) {
    TwoRowSYT t{std::move(r1), std::move(r2)};
    if (t.row1.size() != t.row2.size())
      throw std::invalid_argument("tableau rows must have equal length");
    for (std::size_t j = 0; j < t.row1.size(); ++j) {
      if (j && (t.row1[j] <= t.row1[j - 1] || t.row2[j] <= t.row2[j - 1]))
        throw std::invalid_argument("tableau rows must increase");
      if (t.row1[j] >= t.row2[j])
        throw std::invalid_argument("tableau columns must increase");
    }
    return t;
  }

  int cols() const { return static_cast<int>(row1.size()); }

  bool is_standard() const {
    std::vector<int> all = row1;
    all.insert(all.end(), row2.begin(), row2.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  bool operator==(const TwoRowSYT&) const = default;
};

/// phi: step i is U iff i lies in the first row. Standard entries required.
inline LatticePath syt_to_dyck(const TwoRowSYT& t) {
  if (!t.is_standard())
    throw std::invalid_argument("syt_to_dyck: entries must be 1..2r");
  LatticePath p;
  p.steps.assign(2 * t.cols(), 'D');
  for (int v : t.row1) p.steps[v - 1] = 'U';
  if (!p.is_dyck()) throw std::invalid_argument("tableau is not column-strict");
  return p;
}

inline TwoRowSYT dyck_to_syt(const LatticePath& p) {
  if (!p.is_dyck()) throw std::invalid_argument("dyck_to_syt: not a Dyck path");
  std::vector<int> r1, r2;
  for (int i = 1; i <= p.length(); ++i)
    (p.steps[i - 1] == 'U' ? r1 : r2).push_back(i);
  return TwoRowSYT::of(std::move(r1), std::move(r2));
}

namespace detail {

// Maximal runs of size-2 bricks in a fixed point with bricks of size 1 and 2,
// each run reduced to a standard tableau; exactly singles+1 runs, where runs
// may be empty.
struct RunDecomposition {
  std::vector<TwoRowSYT> tableaux;
  int singles = 0;
};

inline RunDecomposition decompose_fixed_point(const FilledBrickTabloid& o) {
  RunDecomposition d;
  std::vector<int> bottom, top;
  auto close_run = [&]() {
    std::vector<int> all = bottom;
    all.insert(all.end(), top.begin(), top.end());
    auto red = reduce(all).values;
    std::vector<int> r1(red.begin(), red.begin() + bottom.size());
    std::vector<int> r2(red.begin() + bottom.size(), red.end());
    d.tableaux.push_back(TwoRowSYT::of(std::move(r1), std::move(r2)));
    bottom.clear();
    top.clear();
  };
  int pos = 0;
  for (int b : o.bricks) {
    if (b == 2) {
      bottom.push_back(o.perm.values[pos]);
      top.push_back(o.perm.values[pos + 1]);
    } else if (b == 1) {
      close_run();
      ++d.singles;
    } else {
      throw std::invalid_argument("bricks must have size 1 or 2");
    }
    pos += b;
  }
  close_run();
  return d;
}

// Rebuilds the unique fixed point with the given runs: values are forced,
// each run occupying the next consecutive block, each single brick taking the
// next value after its preceding run.
inline FilledBrickTabloid rebuild_fixed_point(
    const std::vector<TwoRowSYT>& tableaux) {
  FilledBrickTabloid o;
  const int q = static_cast<int>(tableaux.size()) - 1;
  int offset = 0;
  for (int j = 0; j <= q; ++j) {
    const auto& t = tableaux[j];
    for (int col = 0; col < t.cols(); ++col) {
      o.bricks.push_back(2);
      o.perm.values.push_back(offset + t.row1[col]);
      o.perm.values.push_back(offset + t.row2[col]);
    }
    offset += 2 * t.cols();
    if (j < q) {
      o.bricks.push_back(1);
      o.perm.values.push_back(offset + 1);
      offset += 1;
    }
  }
  return o;
}

}  // namespace detail

/// theta: a fixed point with 2k+1 bricks of size 1 and n-k bricks of size 2
/// maps to a path in T(n,k) by rotating each run of size-2 bricks into a
/// tableau, taking its Dyck path, and joining the pieces with up steps.
inline LatticePath theta_map(const FilledBrickTabloid& o) {
  auto d = detail::decompose_fixed_point(o);
  if (d.singles % 2 == 0)
    throw std::invalid_argument("theta_map: needs an odd number of size-1 bricks");
  LatticePath p;
  for (std::size_t j = 0; j < d.tableaux.size(); ++j) {
    if (j) p.steps += 'U';
    p.steps += syt_to_dyck(d.tableaux[j]).steps;
  }
  return p;
}

inline FilledBrickTabloid theta_inverse(const LatticePath& p, int n, int k) {
  if (!is_t_path(p, n, k))
    throw std::invalid_argument("theta_inverse: not a path of T(n,k)");
  auto h = p.heights();
  std::vector<int> d(2 * k + 2, 0);  // d[i] = last up step ending at level i
  for (int t = 1; t <= p.length(); ++t)
    if (p.steps[t - 1] == 'U' && h[t] <= 2 * k + 1) d[h[t]] = t;
  std::vector<TwoRowSYT> tabs;
  int prev = 0;
  for (int i = 1; i <= 2 * k + 2; ++i) {
    int stop = (i <= 2 * k + 1) ? d[i] : p.length() + 1;
    if (stop <= prev)
      throw std::invalid_argument("theta_inverse: malformed path");
    LatticePath seg{p.steps.substr(prev, stop - prev - 1)};
    tabs.push_back(dyck_to_syt(seg));
    prev = stop;
  }
  return detail::rebuild_fixed_point(tabs);
}

/// beta: a fixed point with 2k bricks of size 1 and n-k bricks of size 2 maps
/// to a path in R(n,k); odd-numbered runs are flipped below the axis and the
/// size-1 bricks alternate as U and D steps.
inline LatticePath beta_map(const FilledBrickTabloid& o) {
  auto d = detail::decompose_fixed_point(o);
  if (d.singles % 2 != 0)
    throw std::invalid_argument("beta_map: needs an even number of size-1 bricks");
  LatticePath p;
  for (std::size_t j = 0; j < d.tableaux.size(); ++j) {
    if (j) p.steps += (j % 2 == 1) ? 'U' : 'D';
    LatticePath piece = syt_to_dyck(d.tableaux[j]);
    if (j % 2 == 0) piece = piece.flipped();
    p.steps += piece.steps;
  }
  return p;
}

inline FilledBrickTabloid beta_inverse(const LatticePath& p, int n, int k) {
  if (!is_r_path(p, n, k))
    throw std::invalid_argument("beta_inverse: not a path of R(n,k)");
  auto h = p.heights();
  std::vector<int> f;  // down steps ending at height 0
  for (int t = 1; t <= p.length(); ++t)
    if (p.steps[t - 1] == 'D' && h[t] == 0) f.push_back(t);
  std::vector<TwoRowSYT> tabs;
  int prev = 0;  // step index after which the current segment starts
  for (int j = 0; j < k; ++j) {
    int e = 0;  // rightmost up step from height 0 before f[j]
    for (int t = prev + 1; t < f[j]; ++t)
      if (p.steps[t - 1] == 'U' && h[t - 1] == 0) e = t;
    if (e == 0) throw std::invalid_argument("beta_inverse: malformed path");
    LatticePath below{p.steps.substr(prev, e - prev - 1)};
    tabs.push_back(dyck_to_syt(below.flipped()));
    LatticePath above{p.steps.substr(e, f[j] - e - 1)};
    tabs.push_back(dyck_to_syt(above));
    prev = f[j];
  }
  LatticePath last{p.steps.substr(prev)};
  tabs.push_back(dyck_to_syt(last.flipped()));
  return detail::rebuild_fixed_point(tabs);
}

/// Exhaustive |T(n,k)| or |R(n,k)| over all 2^len step sequences.
inline Int path_census(char kind, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("path_census: 0 <= k <= n");
  const int len = (kind == 'T') ? 2 * n + 1 : 2 * n;
  if (kind != 'T' && kind != 'R')
    throw std::invalid_argument("path_census: kind is 'T' or 'R'");
  Int count = 0;
  for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
    LatticePath p;
    p.steps.reserve(len);
    for (int i = 0; i < len; ++i) p.steps += (mask & (1ul << i)) ? 'U' : 'D';
    if (kind == 'T' ? is_t_path(p, n, k) : is_r_path(p, n, k)) ++count;
  }
  return count;
}

/// T(n,k) = 2(k+1) binom(2n+1, n-k) / (n+k+2), division exact.
inline Int t_path_formula(int n, int k) {
  return exact_div(Int(2 * (k + 1)) * binomial(2 * n + 1, n - k),
                   Int(n + k + 2));
}

/// R(n,k) = (2k+1) binom(2n, n-k) / (n+k+1), division exact.
inline Int r_path_formula(int n, int k) {
  return exact_div(Int(2 * k + 1) * binomial(2 * n, n - k), Int(n + k + 1));
}

/// All sigma in S_{2k} with a 1324-match starting at every odd position
/// 1, 3, ..., 2k-3; there are C_{k-1} of them.
inline std::vector<Permutation> chain_match_permutations(int k) {
  if (k < 2) throw std::invalid_argument("chain_match_permutations: k >= 2");
  static const PatternSet only_1324 = PatternSet::normalize_raw({{1, 3, 2, 4}});
  std::vector<Permutation> out;
  std::vector<int> sigma(2 * k);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    bool ok = true;
    for (int pos = 1; pos <= 2 * k - 3 && ok; pos += 2)
      ok = only_1324.matches_window(sigma.data() + pos - 1, 4);
    if (ok) out.emplace_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace gammatch
