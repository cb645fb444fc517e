#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gammatch/brute_force.hpp"
#include "gammatch/egf.hpp"
#include "gammatch/families.hpp"
#include "gammatch/recursion.hpp"
#include "gammatch/tabloids.hpp"

namespace gammatch {

enum class Method { recursion, inversion, fixed_points, closed_form };

inline Method method_from_string(const std::string& s) {
  if (s == "recursion") return Method::recursion;
  if (s == "inversion") return Method::inversion;
  if (s == "fixed-points") return Method::fixed_points;
  if (s == "closed-form") return Method::closed_form;
  throw std::invalid_argument("unknown method: " + s);
}

/// U_{Gamma,n}(y) for n = 0..n_max by the requested route. Throws
/// std::domain_error when the route does not exist for the family.
inline std::vector<YPoly> u_table(const FamilySpec& spec, int n_max,
                                  Method method, bool allow_large = false) {
  std::vector<YPoly> out;
  out.reserve(n_max + 1);
  switch (method) {
    case Method::recursion:
      for (int n = 0; n <= n_max; ++n) out.push_back(recursion_u(spec, n));
      return out;
    case Method::inversion:
      return u_from_inversion(spec.pattern_set(), n_max, allow_large);
    case Method::fixed_points: {
      if (!spec.single_descent())
        throw std::domain_error(
            "fixed-points is unavailable for " + spec.name() +
            ": its patterns have more than one descent");
      auto gamma = spec.pattern_set();
      for (int n = 0; n <= n_max; ++n)
        out.push_back(fixed_point_signed_sum(gamma, n));
      return out;
    }
    case Method::closed_form: {
      if (!spec.has_closed_form())
        throw std::domain_error("no closed form is known for " + spec.name());
      const bool gamma222 = spec.kind == FamilyKind::two_run_capped;
      for (int n = 0; n <= n_max; ++n) {
        ClosedForm which =
            gamma222 ? (n % 2 ? ClosedForm::gamma222_odd : ClosedForm::gamma222_even)
                     : (n % 2 ? ClosedForm::pair1324_123_odd
                              : ClosedForm::pair1324_123_even);
        out.push_back(closed_form_u(which, n));
      }
      return out;
    }
  }
  throw std::logic_error("unknown method");
}

inline YPoly u_single(const FamilySpec& spec, int n, Method method,
                      bool allow_large = false) {
  return u_table(spec, n, method, allow_large).at(n);
}

/// NM_{Gamma,n}(1,y) through the chosen U route (1/U inverted back), or
/// directly from enumeration when the method is inversion.
inline std::vector<YPoly> nm_y_table(const FamilySpec& spec, int n_max,
                                     Method method, bool allow_large = false) {
  if (method == Method::inversion)
    return nm_table_y(spec.pattern_set(), n_max, allow_large);
  EgfSeries<YPoly> u(u_table(spec, n_max, method, allow_large));
  return egf_reciprocal(u, n_max).c;
}

/// NM_{Gamma,n}(x,y): the central identity (1/U)^x, or brute force when the
/// method is inversion.
inline std::vector<XYPoly> nm_xy_table(const FamilySpec& spec, int n_max,
                                       Method method, bool allow_large = false) {
  if (method == Method::inversion) {
    check_enumeration_size(n_max, allow_large);
    std::vector<XYPoly> out;
    for (int n = 0; n <= n_max; ++n)
      out.push_back(nm_polynomial_cached(n, spec.pattern_set(), allow_large));
    return out;
  }
  EgfSeries<YPoly> u(u_table(spec, n_max, method, allow_large));
  EgfSeries<YPoly> recip = egf_reciprocal(u, n_max);
  return egf_formal_x_power(recip, n_max).c;
}

}  // namespace gammatch
