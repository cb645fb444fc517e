#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gammatch/egf.hpp"
#include "gammatch/perm.hpp"
#include "gammatch/poly.hpp"

namespace gammatch {

// 13! ~ 6.2e9 is past desk scale; larger n needs an explicit override.
inline constexpr int kEnumerationCap = 13;

inline void check_enumeration_size(int n, bool allow_large) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > kEnumerationCap && !allow_large)
    throw std::invalid_argument(
        "exhaustive enumeration above n = " + std::to_string(kEnumerationCap) +
        " requires the explicit override");
}

inline int worker_count_hint() {
  if (const char* env = std::getenv("GAMMATCH_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Streams NM_n(Gamma) in lexicographic order without materializing S_n.
class NmStream {
 public:
  NmStream(int n, PatternSet gamma, bool allow_large = false)
      : gamma_(std::move(gamma)), n_(n) {
    check_enumeration_size(n, allow_large);
    current_.resize(n);
    std::iota(current_.begin(), current_.end(), 1);
    fresh_ = true;
  }

  std::optional<Permutation> next() {
    while (true) {
      if (fresh_) {
        fresh_ = false;
      } else {
        if (n_ == 0) return std::nullopt;
        if (!std::next_permutation(current_.begin(), current_.end()))
          return std::nullopt;
      }
      if (!has_gamma_match(current_, gamma_)) return Permutation(current_);
    }
  }

 private:
  PatternSet gamma_;
  std::vector<int> current_;
  int n_;
  bool fresh_;
};

inline std::vector<Permutation> enumerate_nm(int n, const PatternSet& gamma,
                                             bool allow_large = false) {
  NmStream s(n, gamma, allow_large);
  std::vector<Permutation> out;
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

namespace detail {

// Counts over permutations with a fixed first element; grid[lrmin][des].
// Per-block counts are bounded by (n-1)! so uint64 suffices through n = 14.
inline std::vector<std::vector<std::uint64_t>> nm_block_counts(
    int n, int first, const PatternSet& gamma) {
  std::vector<std::vector<std::uint64_t>> grid(
      n + 1, std::vector<std::uint64_t>(n + 1, 0));
  std::vector<int> perm(n);
  perm[0] = first;
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (v != first) rest.push_back(v);
  do {
    std::copy(rest.begin(), rest.end(), perm.begin() + 1);
    if (!has_gamma_match(perm, gamma))
      ++grid[lrmin_count(perm)][descent_count(perm)];
  } while (std::next_permutation(rest.begin(), rest.end()));
  return grid;
}

}  // namespace detail

/// NM_{Gamma,n}(x,y) = sum over match-free sigma of x^LRmin y^(1+des).
/// Work is partitioned by first element; the merge order is fixed so the
/// result does not depend on scheduling. NM_{Gamma,0} = 1.
inline XYPoly nm_polynomial(int n, const PatternSet& gamma,
                            bool allow_large = false) {
  check_enumeration_size(n, allow_large);
  if (n == 0) return XYPoly::one();

  int workers = std::min(worker_count_hint(), n);
  std::vector<std::vector<std::vector<std::uint64_t>>> blocks(n);
  if (workers <= 1) {
    for (int v = 1; v <= n; ++v)
      blocks[v - 1] = detail::nm_block_counts(n, v, gamma);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<int> next_block{1};
    for (int w = 0; w < workers; ++w) {
      futs.push_back(std::async(std::launch::async, [&]() {
        while (true) {
          int v = next_block.fetch_add(1);
          if (v > n) return;
          blocks[v - 1] = detail::nm_block_counts(n, v, gamma);
        }
      }));
    }
    for (auto& f : futs) f.get();
  }

  XYPoly out;
  for (int v = 1; v <= n; ++v)
    for (int lr = 0; lr <= n; ++lr)
      for (int d = 0; d <= n; ++d)
        if (blocks[v - 1][lr][d])
          out.add_term(lr, 1 + d, Int(blocks[v - 1][lr][d]));
  return out;
}

namespace detail {

inline std::map<std::pair<std::string, int>, XYPoly>& nm_cache() {
  static std::map<std::pair<std::string, int>, XYPoly> cache;
  return cache;
}

inline std::mutex& nm_cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

/// Cached nm_polynomial; concurrent callers observe a consistent cache.
inline XYPoly nm_polynomial_cached(int n, const PatternSet& gamma,
                                   bool allow_large = false) {
  auto key = std::make_pair(gamma.canonical_key(), n);
  {
    std::lock_guard<std::mutex> lock(detail::nm_cache_mutex());
    auto it = detail::nm_cache().find(key);
    if (it != detail::nm_cache().end()) return it->second;
  }
  XYPoly value = nm_polynomial(n, gamma, allow_large);
  std::lock_guard<std::mutex> lock(detail::nm_cache_mutex());
  return detail::nm_cache().emplace(key, std::move(value)).first->second;
}

/// (NM_{Gamma,0}(1,y), ..., NM_{Gamma,N}(1,y)).
inline std::vector<YPoly> nm_table_y(const PatternSet& gamma, int n_max,
                                     bool allow_large = false) {
  check_enumeration_size(n_max, allow_large);  // fail before any work
  std::vector<YPoly> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    out.push_back(nm_polynomial_cached(n, gamma, allow_large).substitute_x(1));
  return out;
}

/// U_{Gamma,n}(y) for n = 0..N by inverting the brute-force NM series.
inline std::vector<YPoly> u_from_inversion(const PatternSet& gamma, int n_max,
                                           bool allow_large = false) {
  EgfSeries<YPoly> nm(nm_table_y(gamma, n_max, allow_large));
  return egf_reciprocal(nm, n_max).c;
}

}  // namespace gammatch
