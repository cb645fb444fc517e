#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammatch {

/// A finite sequence of pairwise-distinct positive integers. A *standard*
/// permutation additionally has value set exactly {1,...,n}.
struct Permutation {
  std::vector<int> values;

  Permutation() = default;
  explicit Permutation(std::vector<int> v) : values(std::move(v)) {}

  int size() const { return static_cast<int>(values.size()); }

  bool distinct() const {
    std::set<int> s(values.begin(), values.end());
    return static_cast<int>(s.size()) == size();
  }

  bool is_standard() const {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < size(); ++i)
      if (sorted[i] != i + 1) return false;
    return true;
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (values[i] != i + 1) return false;
    return true;
  }

  std::string to_string() const {
    bool wide = false;
    for (int v : values) wide |= v > 9;
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
      if (i && wide) os << " ";
      os << values[i];
    }
    return os.str();
  }

  auto operator<=>(const Permutation&) const = default;
};

/// red(seq): replace the i-th smallest entry by i. Length preserved.
inline Permutation reduce(const std::vector<int>& seq) {
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::invalid_argument("reduce: entries must be pairwise distinct");
  std::vector<int> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), seq[i]);
    out[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return Permutation(std::move(out));
}

inline Permutation reduce(const Permutation& p) { return reduce(p.values); }

inline int descent_count(const std::vector<int>& v) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) ++d;
  return d;
}

/// Left-to-right minima; the first entry always counts.
inline int lrmin_count(const std::vector<int>& v) {
  int count = 0;
  int best = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i] < best) {
      ++count;
      best = v[i];
    }
  }
  return count;
}

namespace detail {

// Rank word of a window packed 4 bits per entry; windows here never exceed
// length 15 (longest built-in pattern has length 10).
inline std::uint64_t window_key(const int* w, int len) {
  std::uint64_t key = 0;
  for (int i = 0; i < len; ++i) {
    int rank = 1;
    for (int j = 0; j < len; ++j)
      if (w[j] < w[i]) ++rank;
    key |= static_cast<std::uint64_t>(rank) << (4 * i);
  }
  return key;
}

}  // namespace detail

/// A normalized set of patterns: standard permutations all starting with 1,
/// with at most one identity member (a longer identity is redundant next to a
/// shorter one and is removed).
class PatternSet {
 public:
  PatternSet() = default;

  /// Validates and normalizes a raw pattern list.
  static PatternSet normalize(std::vector<Permutation> raw) {
    PatternSet ps;
    std::set<Permutation> uniq;
    std::optional<int> shortest_identity;
    for (auto& p : raw) {
      if (p.size() == 0 || !p.is_standard())
        throw std::invalid_argument("pattern " + p.to_string() +
                                    " is not a standard permutation");
      if (p.values[0] != 1)
        throw std::invalid_argument("pattern " + p.to_string() +
                                    " does not start with 1");
      if (p.is_identity() &&
          (!shortest_identity || p.size() < *shortest_identity))
        shortest_identity = p.size();
      uniq.insert(std::move(p));
    }
    for (auto& p : uniq) {
      if (p.is_identity() && shortest_identity && p.size() > *shortest_identity)
        continue;  // absorbed by the shorter identity
      ps.patterns_.push_back(p);
    }
    if (ps.patterns_.empty())
      throw std::invalid_argument("empty pattern set");
    ps.min_len_ = ps.max_len_ = ps.patterns_.front().size();
    ps.max_descents_ = 0;
    for (auto& p : ps.patterns_) {
      ps.min_len_ = std::min(ps.min_len_, p.size());
      ps.max_len_ = std::max(ps.max_len_, p.size());
      ps.max_descents_ = std::max(ps.max_descents_, descent_count(p.values));
      if (p.is_identity()) ps.identity_member_ = p.size();
      if (p.size() > 15)
        throw std::invalid_argument("patterns longer than 15 are unsupported");
    }
    for (auto& p : ps.patterns_) {
      int len = p.size();
      if (std::find(ps.lengths_.begin(), ps.lengths_.end(), len) ==
          ps.lengths_.end())
        ps.lengths_.push_back(len);
    }
    std::sort(ps.lengths_.begin(), ps.lengths_.end());
    ps.keys_by_len_.assign(ps.max_len_ + 1, {});
    for (auto& p : ps.patterns_)
      ps.keys_by_len_[p.size()].push_back(
          detail::window_key(p.values.data(), p.size()));
    for (auto& v : ps.keys_by_len_) std::sort(v.begin(), v.end());
    return ps;
  }

  static PatternSet normalize_raw(const std::vector<std::vector<int>>& raw) {
    std::vector<Permutation> ps;
    ps.reserve(raw.size());
    for (auto& v : raw) ps.emplace_back(v);
    return normalize(std::move(ps));
  }

  const std::vector<Permutation>& patterns() const { return patterns_; }
  int min_len() const { return min_len_; }
  int max_len() const { return max_len_; }
  std::optional<int> identity_member() const { return identity_member_; }
  int max_descents() const { return max_descents_; }
  const std::vector<int>& lengths() const { return lengths_; }

  bool matches_window(const int* w, int len) const {
    if (len < 2 || len > max_len_ || keys_by_len_[len].empty()) return false;
    const auto& keys = keys_by_len_[len];
    return std::binary_search(keys.begin(), keys.end(),
                              detail::window_key(w, len));
  }

  std::string canonical_key() const {
    std::string k;
    for (auto& p : patterns_) {
      if (!k.empty()) k += '|';
      for (int v : p.values) {
        k += std::to_string(v);
        k += ',';
      }
    }
    return k;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (i) s += ",";
      s += patterns_[i].to_string();
    }
    return s + "}";
  }

 private:
  std::vector<Permutation> patterns_;
  std::vector<int> lengths_;
  std::vector<std::vector<std::uint64_t>> keys_by_len_;
  int min_len_ = 0;
  int max_len_ = 0;
  std::optional<int> identity_member_;
  int max_descents_ = 0;
};

/// All Gamma-match windows of v as (start, length), 1-indexed starts. A match
/// needs at least two cells (red of a window of length >= 2).
inline std::vector<std::pair<int, int>> match_spans(const std::vector<int>& v,
                                                    const PatternSet& gamma) {
  std::vector<std::pair<int, int>> spans;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int len : gamma.lengths())
      if (i + len <= n && gamma.matches_window(v.data() + i, len))
        spans.emplace_back(i + 1, len);
  return spans;
}

inline bool has_gamma_match(const std::vector<int>& v, const PatternSet& gamma) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int len : gamma.lengths())
      if (i + len <= n && gamma.matches_window(v.data() + i, len)) return true;
  return false;
}

struct PermStats {
  int des = 0;
  int lrmin = 0;
  std::vector<int> match_positions;  // 1-indexed, one entry per start
};

/// des, LRmin and Gamma-match starting positions of a standard permutation.
inline PermStats stats(const Permutation& p, const PatternSet& gamma) {
  if (!p.is_standard())
    throw std::invalid_argument("stats: permutation is not standard");
  PermStats st;
  st.des = descent_count(p.values);
  st.lrmin = lrmin_count(p.values);
  int last = 0;
  for (auto [start, len] : match_spans(p.values, gamma)) {
    (void)len;
    if (start != last) st.match_positions.push_back(start);
    last = start;
  }
  return st;
}

}  // namespace gammatch
