#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gammatch/analysis.hpp"
#include "gammatch/families.hpp"
#include "gammatch/poly.hpp"

namespace gammatch {

using nlohmann::json;

/// {"terms":[{"x":i,"y":j,"c":"<decimal>"}]} sorted by (x, y); coefficients
/// as decimal strings so arbitrary precision survives the trip.
inline json poly_to_json(const XYPoly& p) {
  json terms = json::array();
  for (auto& [m, c] : p.terms())
    terms.push_back({{"x", m.first}, {"y", m.second}, {"c", c.str()}});
  return json{{"terms", terms}};
}

inline json poly_to_json(const YPoly& p) {
  return poly_to_json(XYPoly::from_y(p));
}

inline XYPoly poly_from_json(const json& j) {
  XYPoly p;
  for (auto& t : j.at("terms")) {
    int x = t.value("x", 0);
    int y = t.at("y").get<int>();
    Int c(t.at("c").get<std::string>());
    p.add_term(x, y, c);
  }
  return p;
}

inline YPoly ypoly_from_json(const json& j) {
  XYPoly p = poly_from_json(j);
  if (p.x_degree() > 0)
    throw std::invalid_argument("expected a polynomial in y only");
  return p.substitute_x(1);
}

inline json survey_to_json(const std::vector<SurveyRow>& rows) {
  json out = json::array();
  for (auto& r : rows)
    out.push_back({{"family", r.family},
                   {"n", r.n},
                   {"log_concave", r.log_concave},
                   {"unimodal", r.unimodal},
                   {"argmax_exponents", r.argmax_exponents}});
  return out;
}

inline std::string survey_to_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os << "family,n,log_concave,unimodal,argmax_exponents\n";
  for (auto& r : rows) {
    os << r.family << "," << r.n << "," << (r.log_concave ? "true" : "false")
       << "," << (r.unimodal ? "true" : "false") << ",";
    for (std::size_t i = 0; i < r.argmax_exponents.size(); ++i)
      os << (i ? ";" : "") << r.argmax_exponents[i];
    os << "\n";
  }
  return os.str();
}

/// A table of expected U_{Gamma,n}(-y) rows transcribed from published data.
struct TableFixture {
  std::string id;
  FamilySpec spec;
  std::vector<std::pair<int, YPoly>> rows;  // (n, U_n(-y))
};

inline FamilySpec family_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "1324-123") return FamilySpec::pair_1324_123();
  if (kind == "1324p") return FamilySpec::gamma_p(j.at("p").get<int>());
  if (kind == "two-run")
    return FamilySpec::two_run(j.at("k1").get<int>(), j.at("k2").get<int>());
  if (kind == "two-run-capped")
    return FamilySpec::two_run_capped(j.at("k1").get<int>(), j.at("s").get<int>());
  if (kind == "1432") return FamilySpec::tau1432();
  if (kind == "142536") return FamilySpec::tau142536();
  if (kind == "162534") return FamilySpec::tau162534();
  if (kind == "14253-15243") return FamilySpec::pair_14253_15243();
  throw std::invalid_argument("unknown family kind: " + kind);
}

inline TableFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture " + path);
  json j = json::parse(in);
  TableFixture fx;
  fx.id = j.at("id").get<std::string>();
  fx.spec = family_from_json(j.at("family"));
  for (auto& row : j.at("rows")) {
    int n = row.at("n").get<int>();
    YPoly p;
    for (auto& term : row.at("neg_y")) {
      int e = term.at(0).get<int>();
      Int c(term.at(1).get<std::string>());
      p += YPoly::monomial(e, c);
    }
    fx.rows.emplace_back(n, std::move(p));
  }
  return fx;
}

inline std::vector<std::string> fixture_files() {
  return {"table_gamma_2_2.json", "table_gamma_6_4.json",
          "table_gamma_2_2_2.json", "table_gamma_2_2_3.json",
          "table_1324_123.json"};
}

}  // namespace gammatch
