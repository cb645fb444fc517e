#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammatch/perm.hpp"
#include "gammatch/poly.hpp"

namespace gammatch {

/// A brick tabloid of shape (n) filled with a permutation. Labels are
/// derived, never stored: within-brick descent cells carry y, brick-final
/// cells carry -y.
struct FilledBrickTabloid {
  std::vector<int> bricks;  // composition of n
  Permutation perm;

  int size() const { return perm.size(); }
  int brick_count() const { return static_cast<int>(bricks.size()); }

  /// 1-indexed first cells of each brick.
  std::vector<int> brick_starts() const {
    std::vector<int> s;
    int pos = 1;
    for (int b : bricks) {
      s.push_back(pos);
      pos += b;
    }
    return s;
  }

  /// 1-indexed cells labeled y (descents inside a brick).
  std::vector<int> y_cells() const {
    std::vector<int> out;
    int pos = 1;
    for (int b : bricks) {
      for (int c = pos; c < pos + b - 1; ++c)
        if (perm.values[c - 1] > perm.values[c]) out.push_back(c);
      pos += b;
    }
    return out;
  }

  bool operator==(const FilledBrickTabloid&) const = default;
};

struct SignedWeight {
  int sign = 1;       // (-1)^{#bricks}
  int y_exponent = 0; // #bricks + #within-brick descents

  bool operator==(const SignedWeight&) const = default;
};

inline SignedWeight signed_weight(const FilledBrickTabloid& o) {
  SignedWeight w;
  w.sign = (o.brick_count() % 2) ? -1 : 1;
  w.y_exponent = o.brick_count() + static_cast<int>(o.y_cells().size());
  return w;
}

inline YPoly signed_weight_poly(const FilledBrickTabloid& o) {
  auto w = signed_weight(o);
  return YPoly::monomial(w.y_exponent, Int(w.sign));
}

/// Membership in the object space: no Gamma-match of perm lies entirely
/// inside a single brick.
inline bool in_object_space(const FilledBrickTabloid& o, const PatternSet& gamma) {
  auto spans = match_spans(o.perm.values, gamma);
  auto starts = o.brick_starts();
  for (auto [s, len] : spans) {
    for (int i = 0; i < o.brick_count(); ++i) {
      int lo = starts[i], hi = starts[i] + o.bricks[i] - 1;
      if (s >= lo && s + len - 1 <= hi) return false;
    }
  }
  return true;
}

namespace detail {

inline void require_involution_family(const PatternSet& gamma) {
  if (gamma.max_descents() > 1)
    throw std::domain_error(
        "the split/merge involution requires patterns with at most one descent");
}

}  // namespace detail

/// Streams every (B, sigma) of the object space, each exactly once.
inline void for_each_object(
    const PatternSet& gamma, int n,
    const std::function<void(const FilledBrickTabloid&)>& fn) {
  detail::require_involution_family(gamma);
  if (n < 0 || n > 9)
    throw std::invalid_argument("for_each_object: supported range is 0 <= n <= 9");
  if (n == 0) {
    fn(FilledBrickTabloid{});
    return;
  }
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  FilledBrickTabloid o;
  do {
    // A composition is admissible iff every match window is cut somewhere:
    // span (s, len) needs a brick boundary in gaps s .. s+len-2.
    auto spans = match_spans(sigma, gamma);
    std::vector<std::uint32_t> needed;
    needed.reserve(spans.size());
    for (auto [s, len] : spans) {
      std::uint32_t m = 0;
      for (int g = s; g <= s + len - 2; ++g) m |= 1u << (g - 1);
      needed.push_back(m);
    }
    const std::uint32_t top = n > 1 ? (1u << (n - 1)) : 1u;
    for (std::uint32_t mask = 0; mask < top; ++mask) {
      bool ok = true;
      for (std::uint32_t need : needed)
        if (!(mask & need)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      o.bricks.clear();
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
      fn(o);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

/// One application of the split/merge map: scan cells left to right; at the
/// first cell labeled y, split its brick there; at the first brick-final cell
/// with a decrease into the next brick and no Gamma-match inside the two
/// bricks, merge them. Fixed points are returned unchanged.
inline FilledBrickTabloid involution_step(const FilledBrickTabloid& o,
                                          const PatternSet& gamma) {
  detail::require_involution_family(gamma);
  const auto& v = o.perm.values;
  const int n = o.size();
  auto starts = o.brick_starts();
  auto spans = match_spans(v, gamma);

  auto has_span_within = [&](int lo, int hi) {
    for (auto [s, len] : spans)
      if (s >= lo && s + len - 1 <= hi) return true;
    return false;
  };

  int brick = 0;
  for (int c = 1; c <= n - 1; ++c) {
    while (brick + 1 < o.brick_count() && starts[brick + 1] <= c) ++brick;
    const int end = starts[brick] + o.bricks[brick] - 1;
    if (c < end) {
      if (v[c - 1] > v[c]) {
        // case (i): split after cell c
        FilledBrickTabloid r = o;
        r.bricks[brick] = c - starts[brick] + 1;
        r.bricks.insert(r.bricks.begin() + brick + 1, end - c);
        return r;
      }
    } else {  // c == end, next brick starts at c+1
      if (v[c - 1] > v[c] &&
          !has_span_within(starts[brick], end + o.bricks[brick + 1])) {
        // case (ii): merge bricks brick and brick+1
        FilledBrickTabloid r = o;
        r.bricks[brick] += r.bricks[brick + 1];
        r.bricks.erase(r.bricks.begin() + brick + 1);
        return r;
      }
    }
  }
  return o;
}

namespace detail {

// Does sigma have a Gamma-match inside window [lo, hi] (1-indexed, inclusive)
// covering both cells c and c+1?
inline bool match_covering_boundary(const std::vector<int>& sigma,
                                    const PatternSet& gamma, int lo, int hi,
                                    int c) {
  for (int len : gamma.lengths()) {
    for (int s = std::max(lo, c - len + 2); s <= std::min(c, hi - len + 1); ++s)
      if (gamma.matches_window(sigma.data() + s - 1, len)) return true;
  }
  return false;
}

struct FixedPointGen {
  const PatternSet& gamma;
  int n;
  int cap;
  int first_brick = 0;  // 0 = unconstrained
  const std::function<void(const FilledBrickTabloid&)>& fn;

  std::vector<int> sigma;
  std::vector<int> bricks;
  std::vector<int> remaining;  // ascending

  void run() {
    sigma.clear();
    bricks.clear();
    remaining.resize(n);
    std::iota(remaining.begin(), remaining.end(), 1);
    extend();
  }

  void extend() {
    if (remaining.empty()) {
      FilledBrickTabloid o;
      o.bricks = bricks;
      o.perm.values = sigma;
      fn(o);
      return;
    }
    const int limit = std::min<int>(cap, static_cast<int>(remaining.size()));
    for (int b = 1; b <= limit; ++b) {
      if (bricks.empty() && first_brick && b != first_brick) continue;
      // The next brick always holds the smallest remaining value (brick
      // minima increase left to right), plus b-1 chosen larger values.
      std::vector<int> idx(b - 1);
      std::iota(idx.begin(), idx.end(), 1);
      while (true) {
        place(b, idx);
        if (b == 1) break;
        int i = b - 2;
        while (i >= 0 &&
               idx[i] == static_cast<int>(remaining.size()) - (b - 1 - i))
          --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < b - 1; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }

  void place(int b, const std::vector<int>& idx) {
    std::vector<int> content{remaining[0]};
    for (int i : idx) content.push_back(remaining[i]);
    const int prev_cells = static_cast<int>(sigma.size());
    if (!bricks.empty()) {
      // Condition 3: a decrease between bricks must be covered by a match
      // inside the two bricks that involves the boundary pair.
      int c = prev_cells;  // 1-indexed last cell of the previous brick
      if (sigma[c - 1] > content[0]) {
        std::vector<int> window = sigma;
        window.insert(window.end(), content.begin(), content.end());
        int lo = prev_cells - bricks.back() + 1;
        int hi = prev_cells + b;
        if (!match_covering_boundary(window, gamma, lo, hi, c)) return;
      }
    }
    bricks.push_back(b);
    sigma.insert(sigma.end(), content.begin(), content.end());
    std::vector<int> saved = remaining;
    std::vector<int> next;
    for (int v : remaining)
      if (std::find(content.begin(), content.end(), v) == content.end())
        next.push_back(v);
    remaining = std::move(next);
    extend();
    remaining = std::move(saved);
    sigma.resize(prev_cells);
    bricks.pop_back();
  }
};

}  // namespace detail

/// Streams the fixed points of the involution, generated constructively from
/// their structure (increasing bricks, increasing brick minima, covered
/// decreases, capped brick sizes) rather than by filtering the object space.
inline void for_each_fixed_point(
    const PatternSet& gamma, int n,
    const std::function<void(const FilledBrickTabloid&)>& fn,
    int first_brick = 0) {
  detail::require_involution_family(gamma);
  if (n < 0 || n > 12)
    throw std::invalid_argument("fixed points: supported range is 0 <= n <= 12");
  if (n == 0) {
    if (first_brick == 0) fn(FilledBrickTabloid{});
    return;
  }
  int cap = gamma.identity_member() ? *gamma.identity_member() - 1 : n;
  detail::FixedPointGen gen{gamma, n, cap, first_brick, fn, {}, {}, {}};
  gen.run();
}

inline std::vector<FilledBrickTabloid> fixed_points(const PatternSet& gamma,
                                                    int n) {
  std::vector<FilledBrickTabloid> out;
  for_each_fixed_point(gamma, n,
                       [&](const FilledBrickTabloid& o) { out.push_back(o); });
  return out;
}

/// Sum of sgn(O) W(O) over fixed points; equals U_{Gamma,n}(y).
inline YPoly fixed_point_signed_sum(const PatternSet& gamma, int n) {
  YPoly total;
  for_each_fixed_point(gamma, n, [&](const FilledBrickTabloid& o) {
    total += signed_weight_poly(o);
  });
  return total;
}

/// Partial signed sum over fixed points whose first brick has length r.
inline YPoly fixed_point_sum_by_first_brick(const PatternSet& gamma, int n,
                                            int r) {
  if (r < 1 || r > n)
    throw std::invalid_argument("first brick length out of range");
  YPoly total;
  for_each_fixed_point(
      gamma, n,
      [&](const FilledBrickTabloid& o) { total += signed_weight_poly(o); }, r);
  return total;
}

/// Two-row ASCII rendering: cells with brick walls, labels underneath.
inline std::string render_ascii(const FilledBrickTabloid& o) {
  const auto& v = o.perm.values;
  auto ys = o.y_cells();
  auto is_y = [&](int c) {
    return std::find(ys.begin(), ys.end(), c) != ys.end();
  };
  int width = 2;
  for (int x : v) width = std::max(width, static_cast<int>(std::to_string(x).size()));
  std::ostringstream cells, labels;
  int c = 1;
  for (int bi = 0; bi < o.brick_count(); ++bi) {
    cells << "|";
    labels << " ";
    for (int j = 0; j < o.bricks[bi]; ++j, ++c) {
      std::string num = std::to_string(v[c - 1]);
      std::string lab = (j == o.bricks[bi] - 1) ? "-y" : (is_y(c) ? "y" : "");
      cells << std::string(width + 1 - num.size(), ' ') << num;
      labels << std::string(width + 1 - lab.size(), ' ') << lab;
    }
    cells << " ";
    labels << " ";
  }
  cells << "|";
  return cells.str() + "\n" + labels.str() + "\n";
}

}  // namespace gammatch
