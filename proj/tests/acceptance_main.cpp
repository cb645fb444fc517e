// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "gammatch/verify.hpp"

using namespace gammatch;

int main() {
  const std::string fixtures = GAMMATCH_FIXTURE_DIR;

  struct Criterion {
    const char* title;
    std::function<std::vector<CheckResult>()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1. table reproduction (recursions vs published rows)",
       [&] { return verify_tables(fixtures); }},
      {"2. consistency triangle (inversion = recursion = theta = fixed points, n <= 9)",
       [] { return verify_triangle(9); }},
      {"3. central identity ((1/U)^x = NM(x,y), n <= 8)",
       [] { return verify_central_identity(8); }},
      {"4. involution suite (object space, n <= 7 or 8)",
       [] { return verify_involution(); }},
      {"5. bijection suite (theta, beta, censuses, chain matches, ballot forms)",
       [] { return verify_bijections(); }},
      {"6. closed forms (double factorials, lowest coefficients)",
       [] { return verify_closed_forms(); }},
      {"7. two-descent recursions vs inversion (n <= 9) and Catalan determinants",
       [] { return verify_two_descent(9); }},
      {"8. analysis reproduction (unimodality and log-concavity survey)",
       [] { return verify_analysis(); }},
  };

  bool all_pass = true;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    auto checks = c.run();
    auto report = run_suite(checks);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (report.failures == 0) {
      std::printf("PASS  %s [%zu checks, %lld ms]\n", c.title, checks.size(),
                  static_cast<long long>(ms));
    } else {
      all_pass = false;
      std::printf("FAIL  %s [%d of %zu checks failed]\n", c.title,
                  report.failures, checks.size());
      for (auto& chk : checks)
        if (!chk.pass)
          std::fprintf(stderr, "      %s: %s\n", chk.name.c_str(),
                       chk.detail.c_str());
    }
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
