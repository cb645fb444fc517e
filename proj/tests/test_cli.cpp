#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "gammatch/serialize.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(GAMMATCH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("compute prints the published polynomial", "[cli]") {
  auto r = run_cli("compute --family gamma-k1k2 --k1 2 --k2 2 --n 5 --what u");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("y + 9y^2 + 11y^3 + 4y^4 + y^5") != std::string::npos);

  r = run_cli("compute --family 1324-123 --n 1 --what u --raw");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("-y") != std::string::npos);

  r = run_cli("compute --family gamma-222 --n 6 --method closed-form");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("15y^3 + 15y^4 + 5y^5 + y^6") != std::string::npos);
}

TEST_CASE("json output round-trips", "[cli]") {
  auto r = run_cli("compute --family gamma-223 --n 7 --what u --format json");
  REQUIRE(r.exit_code == 0);
  auto j = gammatch::json::parse(r.output);
  auto p = gammatch::poly_from_json(j);
  CHECK(gammatch::poly_to_json(p) == gammatch::poly_to_json(
      gammatch::XYPoly::from_y(gammatch::recursion_u(
          gammatch::FamilySpec::two_run_capped(2, 3), 7).negated_variable())));
}

TEST_CASE("methods agree through the cli", "[cli]") {
  auto rec = run_cli("compute --family 1324-123 --n 6 --what nm-xy --format json");
  auto inv = run_cli("compute --family 1324-123 --n 6 --what nm-xy "
                     "--format json --method inversion");
  REQUIRE(rec.exit_code == 0);
  REQUIRE(inv.exit_code == 0);
  CHECK(gammatch::poly_from_json(gammatch::json::parse(rec.output)) ==
        gammatch::poly_from_json(gammatch::json::parse(inv.output)));
}

TEST_CASE("csv output", "[cli]") {
  auto r = run_cli("compute --family 1324-123 --n 4 --what nm-xy --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("x,y,c") != std::string::npos);
  // sigma = 4321 survives and contributes x^4 y^4
  CHECK(r.output.find("4,4,1") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run_cli("compute --family nonsense --n 3").exit_code == 2);
  CHECK(run_cli("compute --family 1324-123").exit_code == 2);  // missing --n
  // fixed points need single-descent patterns
  CHECK(run_cli("compute --family 1432 --n 4 --method fixed-points").exit_code == 3);
  // closed form exists only for two of the families
  CHECK(run_cli("compute --family gamma-k1k2 --k1 2 --k2 3 --n 4 "
                "--method closed-form").exit_code == 3);
  // enumeration cap
  CHECK(run_cli("compute --family 1324-123 --n 14 --method inversion").exit_code == 2);
}

TEST_CASE("verify tables suite passes", "[cli]") {
  auto r = run_cli(std::string("verify --suite tables --fixtures ") +
                   GAMMATCH_FIXTURE_DIR);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("survey emits rows", "[cli]") {
  auto r = run_cli("survey --family gamma-k1k2 --k1 6 --k2 4 --n-max 11 "
                   "--format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("family,n,log_concave,unimodal") != std::string::npos);
  CHECK(r.output.find("gamma(6,4),10,false,false") != std::string::npos);
  CHECK(r.output.find("gamma(6,4),11,false,false") != std::string::npos);
}
