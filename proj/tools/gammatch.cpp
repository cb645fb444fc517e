// gammatch: compute, verify, survey and export the U/NM polynomials of
// consecutive-pattern-avoiding permutation families.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gammatch/compute.hpp"
#include "gammatch/serialize.hpp"
#include "gammatch/verify.hpp"

using namespace gammatch;

namespace {

#ifndef GAMMATCH_DEFAULT_FIXTURE_DIR
#define GAMMATCH_DEFAULT_FIXTURE_DIR "fixtures"
#endif

struct FamilyArgs {
  std::string family;
  int k1 = 0, k2 = 0, p = 0, s = 0;
};

FamilySpec parse_family(const FamilyArgs& a) {
  const std::string& f = a.family;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok)
      throw CLI::ValidationError("--family " + f + " requires " + what);
  };
  if (f == "1324-123") return FamilySpec::pair_1324_123();
  if (f == "1324p") {
    need(a.p >= 5, "--p >= 5");
    return FamilySpec::gamma_p(a.p);
  }
  if (f == "gamma-k1k2") {
    need(a.k1 >= 2 && a.k2 >= 2, "--k1 >= 2 and --k2 >= 2");
    return FamilySpec::two_run(a.k1, a.k2);
  }
  if (f == "gamma-k1k1s") {
    need(a.k1 >= 2 && a.s >= a.k1, "--k1 >= 2 and --s >= k1");
    return FamilySpec::two_run_capped(a.k1, a.s);
  }
  if (f == "gamma-222") return FamilySpec::two_run_capped(2, 2);
  if (f == "gamma-223") return FamilySpec::two_run_capped(2, 3);
  if (f == "1432") return FamilySpec::tau1432();
  if (f == "142536") return FamilySpec::tau142536();
  if (f == "162534") return FamilySpec::tau162534();
  if (f == "14253-15243") return FamilySpec::pair_14253_15243();
  throw CLI::ValidationError(
      "unknown family '" + f +
      "' (known: 1324-123, 1324p, gamma-k1k2, gamma-k1k1s, gamma-222, "
      "gamma-223, 1432, 142536, 162534, 14253-15243)");
}

void print_csv_poly(const XYPoly& p) {
  std::cout << "x,y,c\n";
  for (auto& [m, c] : p.terms())
    std::cout << m.first << "," << m.second << "," << c.str() << "\n";
}

int cmd_compute(const FamilyArgs& fa, int n, const std::string& what,
                const std::string& format, const std::string& method_name,
                bool raw, bool allow_large) {
  FamilySpec spec = parse_family(fa);
  Method method = method_from_string(method_name);

  if (what == "u") {
    YPoly u = u_single(spec, n, method, allow_large);
    YPoly shown = raw ? u : u.negated_variable();
    if (format == "json") {
      json j = poly_to_json(shown);
      j["family"] = spec.name();
      j["n"] = n;
      j["form"] = raw ? "U(y)" : "U(-y)";
      std::cout << j.dump() << "\n";
    } else if (format == "csv") {
      print_csv_poly(XYPoly::from_y(shown));
    } else {
      std::cout << "U_" << n << (raw ? "(y) = " : "(-y) = ")
                << shown.to_string() << (raw ? "" : "  (in -y)") << "\n";
    }
    return 0;
  }
  if (what == "nm") {
    YPoly nm = nm_y_table(spec, n, method, allow_large).at(n);
    if (format == "json") {
      json j = poly_to_json(nm);
      j["family"] = spec.name();
      j["n"] = n;
      std::cout << j.dump() << "\n";
    } else if (format == "csv") {
      print_csv_poly(XYPoly::from_y(nm));
    } else {
      std::cout << "NM_" << n << "(1,y) = " << nm.to_string() << "\n";
    }
    return 0;
  }
  if (what == "nm-xy") {
    XYPoly nm = nm_xy_table(spec, n, method, allow_large).at(n);
    if (format == "json") {
      json j = poly_to_json(nm);
      j["family"] = spec.name();
      j["n"] = n;
      std::cout << j.dump() << "\n";
    } else if (format == "csv") {
      print_csv_poly(nm);
    } else {
      std::cout << "NM_" << n << "(x,y) = " << nm.to_string() << "\n";
    }
    return 0;
  }
  throw CLI::ValidationError("--what must be u, nm or nm-xy");
}

int report_suite(const std::string& title, const std::vector<CheckResult>& checks) {
  auto rep = run_suite(checks);
  if (rep.failures == 0) {
    std::cout << "PASS  " << title << " [" << checks.size() << " checks]\n";
    return 0;
  }
  std::cout << "FAIL  " << title << " [" << rep.failures << " of "
            << checks.size() << " checks failed]\n";
  for (auto& c : checks)
    if (!c.pass) std::cerr << "      " << c.name << ": " << c.detail << "\n";
  return 1;
}

int cmd_verify(const std::string& suite, int n_max, const std::string& fixtures) {
  int failures = 0;
  bool ran = false;
  if (suite == "tables" || suite == "all") {
    failures += report_suite("tables", verify_tables(fixtures));
    ran = true;
  }
  if (suite == "triangle" || suite == "all") {
    failures += report_suite("triangle", verify_triangle(std::min(n_max, 9)));
    failures += report_suite("central identity",
                             verify_central_identity(std::min(n_max, 8)));
    failures += report_suite("two-descent recursions",
                             verify_two_descent(std::min(n_max, 9)));
    ran = true;
  }
  if (suite == "involution" || suite == "all") {
    failures += report_suite("involution", verify_involution());
    ran = true;
  }
  if (suite == "bijections" || suite == "all") {
    failures += report_suite("bijections", verify_bijections());
    ran = true;
  }
  if (suite == "closed-forms" || suite == "all") {
    failures += report_suite("closed forms", verify_closed_forms());
    ran = true;
  }
  if (suite == "analysis" || suite == "all") {
    failures += report_suite("analysis", verify_analysis());
    ran = true;
  }
  if (!ran)
    throw CLI::ValidationError(
        "--suite must be one of tables, triangle, involution, bijections, "
        "closed-forms, analysis, all");
  return failures ? 1 : 0;
}

int cmd_survey(const FamilyArgs& fa, int n_max, const std::string& format) {
  FamilySpec spec = parse_family(fa);
  auto rows = survey(spec, 1, n_max);
  // These are finite checks of a conjecture, never theorems.
  std::cerr << "note: log-concavity/unimodality rows are finite checks of a "
               "conjecture up to n = "
            << n_max << ", not theorems\n";
  if (format == "csv")
    std::cout << survey_to_csv(rows);
  else
    std::cout << survey_to_json(rows).dump(1) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact generating-function polynomials for consecutive-pattern-avoiding "
      "permutations"};
  app.require_subcommand(1);

  FamilyArgs fa;
  int n = 0, n_max = 9;
  std::string what = "u", format = "text", method = "recursion";
  std::string suite, survey_format = "json";
  bool raw = false, allow_large = false;
  std::string fixtures = GAMMATCH_DEFAULT_FIXTURE_DIR;
  if (const char* env = std::getenv("GAMMATCH_FIXTURES")) fixtures = env;

  auto add_family_opts = [&](CLI::App* cmd) {
    cmd->add_option("--family", fa.family, "family id")->required();
    cmd->add_option("--k1", fa.k1, "first run length");
    cmd->add_option("--k2", fa.k2, "second run length");
    cmd->add_option("--p", fa.p, "pattern length for 1324p");
    cmd->add_option("--s", fa.s, "identity cap for gamma-k1k1s");
  };

  auto* compute = app.add_subcommand("compute", "print U or NM polynomials");
  add_family_opts(compute);
  compute->add_option("--n", n, "index n")->required()
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--what", what, "u | nm | nm-xy");
  compute->add_option("--format", format, "text | json | csv");
  compute->add_option("--method", method,
                      "recursion | inversion | fixed-points | closed-form");
  compute->add_flag("--raw", raw, "print U(y) with signs instead of U(-y)");
  compute->add_flag("--allow-large", allow_large,
                    "lift the n <= 13 enumeration cap");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "tables | triangle | involution | bijections | "
                     "closed-forms | analysis | all")
      ->required();
  verify->add_option("--n-max", n_max, "bound for the oracle comparisons");
  verify->add_option("--fixtures", fixtures, "fixture directory");

  auto* surv = app.add_subcommand("survey", "coefficient-shape survey");
  add_family_opts(surv);
  surv->add_option("--n-max", n_max, "largest n")->required();
  surv->add_option("--format", survey_format, "json | csv");

  try {
    app.parse(argc, argv);
    if (compute->parsed())
      return cmd_compute(fa, n, what, format, method, raw, allow_large);
    if (verify->parsed()) return cmd_verify(suite, n_max, fixtures);
    if (surv->parsed()) return cmd_survey(fa, n_max, survey_format);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
