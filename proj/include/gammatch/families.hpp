#pragma once

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammatch/perm.hpp"

namespace gammatch {

/// The built-in pattern families with known U-recursions.
enum class FamilyKind {
  pair_1324_123,     // {1324, 123}
  family_1324p,      // {1324...p, 12...(p-1)}, p >= 5
  two_run,           // sigma_1 = 1, sigma_{k1+1} = 2, two increasing runs
  two_run_capped,    // two_run(k1, k1) plus the identity 12...(s+1)
  tau_1432,          // single pattern, two descents
  tau_142536,        // single pattern, two descents
  tau_162534,        // single pattern, two descents
  pair_14253_15243,  // two patterns, two descents each
};

struct FamilySpec {
  FamilyKind kind;
  int k1 = 0;
  int k2 = 0;
  int p = 0;
  int s = 0;

  static FamilySpec pair_1324_123() { return {FamilyKind::pair_1324_123}; }

  static FamilySpec gamma_p(int p) {
    if (p < 5) throw std::invalid_argument("gamma_p requires p >= 5");
    FamilySpec f{FamilyKind::family_1324p};
    f.p = p;
    return f;
  }

  static FamilySpec two_run(int k1, int k2) {
    if (k1 < 2 || k2 < 2) throw std::invalid_argument("two_run requires k1, k2 >= 2");
    FamilySpec f{FamilyKind::two_run};
    f.k1 = k1;
    f.k2 = k2;
    return f;
  }

  static FamilySpec two_run_capped(int k1, int s) {
    if (k1 < 2 || s < k1)
      throw std::invalid_argument("two_run_capped requires s >= k1 >= 2");
    FamilySpec f{FamilyKind::two_run_capped};
    f.k1 = k1;
    f.k2 = k1;
    f.s = s;
    return f;
  }

  static FamilySpec tau1432() { return {FamilyKind::tau_1432}; }
  static FamilySpec tau142536() { return {FamilyKind::tau_142536}; }
  static FamilySpec tau162534() { return {FamilyKind::tau_162534}; }
  static FamilySpec pair_14253_15243() { return {FamilyKind::pair_14253_15243}; }

  std::string name() const {
    std::ostringstream os;
    switch (kind) {
      case FamilyKind::pair_1324_123: return "1324-123";
      case FamilyKind::family_1324p: os << "1324p(p=" << p << ")"; break;
      case FamilyKind::two_run: os << "gamma(" << k1 << "," << k2 << ")"; break;
      case FamilyKind::two_run_capped:
        os << "gamma(" << k1 << "," << k1 << "," << s << ")";
        break;
      case FamilyKind::tau_1432: return "1432";
      case FamilyKind::tau_142536: return "142536";
      case FamilyKind::tau_162534: return "162534";
      case FamilyKind::pair_14253_15243: return "14253-15243";
    }
    return os.str();
  }

  std::string key() const { return name(); }

  /// The pattern set, normalized.
  PatternSet pattern_set() const {
    switch (kind) {
      case FamilyKind::pair_1324_123:
        return PatternSet::normalize_raw({{1, 3, 2, 4}, {1, 2, 3}});
      case FamilyKind::family_1324p: {
        std::vector<int> swapped(p);
        std::iota(swapped.begin(), swapped.end(), 1);
        std::swap(swapped[1], swapped[2]);
        std::vector<int> identity(p - 1);
        std::iota(identity.begin(), identity.end(), 1);
        return PatternSet::normalize_raw({swapped, identity});
      }
      case FamilyKind::two_run:
        return PatternSet::normalize(two_run_patterns(k1, k2));
      case FamilyKind::two_run_capped: {
        auto pats = two_run_patterns(k1, k1);
        std::vector<int> identity(s + 1);
        std::iota(identity.begin(), identity.end(), 1);
        pats.emplace_back(identity);
        return PatternSet::normalize(std::move(pats));
      }
      case FamilyKind::tau_1432:
        return PatternSet::normalize_raw({{1, 4, 3, 2}});
      case FamilyKind::tau_142536:
        return PatternSet::normalize_raw({{1, 4, 2, 5, 3, 6}});
      case FamilyKind::tau_162534:
        return PatternSet::normalize_raw({{1, 6, 2, 5, 3, 4}});
      case FamilyKind::pair_14253_15243:
        return PatternSet::normalize_raw({{1, 4, 2, 5, 3}, {1, 5, 2, 4, 3}});
    }
    throw std::logic_error("unknown family kind");
  }

  /// Families whose members all have at most one descent; only these admit
  /// the split/merge involution and its fixed-point machinery.
  bool single_descent() const {
    switch (kind) {
      case FamilyKind::pair_1324_123:
      case FamilyKind::family_1324p:
      case FamilyKind::two_run:
      case FamilyKind::two_run_capped:
        return true;
      default:
        return false;
    }
  }

  bool has_closed_form() const {
    return kind == FamilyKind::pair_1324_123 ||
           (kind == FamilyKind::two_run_capped && k1 == 2 && s == 2);
  }

  bool operator==(const FamilySpec&) const = default;

 private:
  // All sigma of length k1+k2 with sigma_1 = 1, sigma_{k1+1} = 2 and two
  // increasing runs; binom(k1+k2-2, k1-1) of them.
  static std::vector<Permutation> two_run_patterns(int k1, int k2) {
    int p = k1 + k2;
    std::vector<Permutation> out;
    std::vector<int> pool(p - 2);
    std::iota(pool.begin(), pool.end(), 3);  // values 3..p
    std::vector<int> mask(p - 2, 0);
    std::fill(mask.begin(), mask.begin() + (k1 - 1), 1);
    std::sort(mask.begin(), mask.end());
    do {
      std::vector<int> first_run{1}, second_run{2};
      for (int i = 0; i < p - 2; ++i)
        (mask[i] ? first_run : second_run).push_back(pool[i]);
      std::vector<int> sigma = first_run;
      sigma.insert(sigma.end(), second_run.begin(), second_run.end());
      out.emplace_back(std::move(sigma));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
  }
};

}  // namespace gammatch
