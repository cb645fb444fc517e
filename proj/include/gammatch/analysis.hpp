#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammatch/families.hpp"
#include "gammatch/poly.hpp"
#include "gammatch/recursion.hpp"

namespace gammatch {

struct LogConcavity {
  bool holds = true;
  std::optional<int> first_violation;  // y-exponent i with a_{i-1} a_{i+1} >= a_i^2
};

/// Strict log-concavity over the contiguous range from the lowest to the
/// highest nonzero exponent; an internal zero coefficient violates it.
/// Polynomials with at most two terms in that range are vacuously log-concave.
inline LogConcavity is_log_concave(const YPoly& p) {
  LogConcavity r;
  const int lo = p.lowest_exponent(), hi = p.degree();
  if (lo < 0 || hi - lo < 2) return r;
  for (int i = lo + 1; i < hi; ++i) {
    if (p.coeff(i - 1) * p.coeff(i + 1) >= p.coeff(i) * p.coeff(i)) {
      r.holds = false;
      r.first_violation = i;
      return r;
    }
  }
  return r;
}

struct Unimodality {
  bool holds = true;
  std::vector<int> argmax_exponents;
};

/// Rise-then-fall over the contiguous support range.
inline Unimodality is_unimodal(const YPoly& p) {
  Unimodality r;
  const int lo = p.lowest_exponent(), hi = p.degree();
  if (lo < 0) return r;  // zero polynomial
  Int best = p.coeff(lo);
  for (int i = lo; i <= hi; ++i) {
    if (p.coeff(i) > best) best = p.coeff(i);
  }
  for (int i = lo; i <= hi; ++i)
    if (p.coeff(i) == best) r.argmax_exponents.push_back(i);
  bool falling = false;
  for (int i = lo; i < hi; ++i) {
    if (p.coeff(i + 1) < p.coeff(i)) falling = true;
    else if (p.coeff(i + 1) > p.coeff(i) && falling) {
      r.holds = false;
      return r;
    }
  }
  return r;
}

struct SurveyRow {
  std::string family;
  int n = 0;
  bool log_concave = false;
  bool unimodal = false;
  std::vector<int> argmax_exponents;
};

/// Coefficient-shape survey of U_{Gamma,n}(-y) over a range of n, by the
/// family recursion. These are finite checks of a conjecture, not theorems.
inline std::vector<SurveyRow> survey(const FamilySpec& spec, int n_min, int n_max) {
  std::vector<SurveyRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    YPoly u = recursion_u(spec, n).negated_variable();
    SurveyRow row;
    row.family = spec.name();
    row.n = n;
    row.log_concave = is_log_concave(u).holds;
    auto um = is_unimodal(u);
    row.unimodal = um.holds;
    row.argmax_exponents = um.argmax_exponents;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gammatch
