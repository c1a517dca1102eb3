#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cdirac/errors.hpp"
#include "cdirac/report.hpp"
#include "cdirac/verify.hpp"

using namespace cdirac;
using nlohmann::json;

TEST(Normalizability, Examples) {
  const Grid line(-10.0, 10.0, 401);
  const Field gauss = sample(line, [](double x) { return cplx(std::exp(-x * x)); });
  EXPECT_EQ(classify_normalizability(gauss, line, DomainKind::whole_line),
            Normalizability::decaying);
  const Field grow = sample(line, [](double x) { return cplx(std::cosh(2.0 * x)); });
  EXPECT_EQ(classify_normalizability(grow, line, DomainKind::whole_line),
            Normalizability::growing);
  EXPECT_NE(classify_normalizability(grow, line, DomainKind::finite),
            Normalizability::growing);
  const Field wave = sample(line, [](double x) { return std::polar(1.0, 3.0 * x); });
  EXPECT_EQ(classify_normalizability(wave, line, DomainKind::whole_line),
            Normalizability::oscillatory);
  EXPECT_EQ(to_string(Normalizability::finite_domain), "finite-domain");
}

TEST(Registry, AllCasesPresent) {
  std::set<std::string> ids;
  for (const auto& c : case_registry()) ids.insert(c.id);
  for (const char* id : {"rosen-morse", "example1", "example2", "example3", "example4",
                         "lorentz-scarf1", "lorentz-scarf2", "lorentz-morse",
                         "lorentz-poschl-teller"})
    EXPECT_TRUE(ids.count(id)) << id;
  EXPECT_EQ(ids.size(), case_registry().size());
}

TEST(Registry, UnknownCaseSuggestsNearest) {
  EXPECT_EQ(suggest_case("rosen-mors"), "rosen-morse");
  try {
    find_case("exampel3");
    FAIL();
  } catch (const UnknownCaseError& e) {
    EXPECT_EQ(e.suggestion(), "example3");
    EXPECT_TRUE(is_configuration_error(e));
  }
}

TEST(Params, RejectedOverrides) {
  EXPECT_THROW(resolve_params("example1", {{"V0", 1.0}}), std::invalid_argument);
  EXPECT_THROW(resolve_params("rosen-morse", {{"V0", NAN}}), std::invalid_argument);
  EXPECT_THROW(resolve_params("rosen-morse", {{"nmax", 2.5}}), std::invalid_argument);
  const ParamMap p = resolve_params("rosen-morse", {{"V0", 3.0}});
  EXPECT_DOUBLE_EQ(p.at("V0"), 3.0);
  EXPECT_DOUBLE_EQ(p.at("ky"), 1.0);
}

TEST(Params, LorentzDefaultLevelCountFollowsA) {
  EXPECT_DOUBLE_EQ(resolve_params("lorentz-morse", {{"A", 2.0}}).at("nmax"), 2.0);
}

TEST(AnalyticLevels, Scarf2Ladder) {
  const auto lv = analytic_levels("lorentz-scarf2", resolve_params("lorentz-scarf2", {}));
  ASSERT_EQ(lv.size(), 4u);
  EXPECT_DOUBLE_EQ(lv[2].eps_analytic, 8.0);
  EXPECT_TRUE(lv[3].threshold);
}

TEST(VerifyCase, ZeroModeCasesPass) {
  for (const char* id : {"example1", "example3"}) {
    const auto r = verify_case(id, {});
    EXPECT_TRUE(r.pass) << id << "\n" << to_json(r).dump(2);
  }
}

TEST(VerifyCase, Deterministic) {
  const auto a = to_json(verify_case("lorentz-scarf2", {}));
  const auto b = to_json(verify_case("lorentz-scarf2", {}));
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.contains("wall_time_s"));
}

TEST(VerifyCase, GridOverride) {
  GridSettings g;
  g.n = 2001;
  const auto r = verify_case("example1", {}, {}, g);
  EXPECT_EQ(r.grid.n, 2001u);
}

TEST(Tolerances, SchemaIsStrict) {
  const Tolerances t = tolerances_from_json(json{{"residual", 1e-4}});
  EXPECT_DOUBLE_EQ(t.residual, 1e-4);
  EXPECT_DOUBLE_EQ(t.imag, Tolerances{}.imag);
  EXPECT_THROW(tolerances_from_json(json{{"residul", 1e-4}}), ToleranceSchemaError);
  EXPECT_THROW(tolerances_from_json(json{{"imag", -1.0}}), ToleranceSchemaError);
  EXPECT_THROW(tolerances_from_json(json{{"imag", "small"}}), ToleranceSchemaError);
  EXPECT_EQ(tolerances_from_json(to_json(Tolerances{})).eigen_rel, Tolerances{}.eigen_rel);
}

TEST(Report, JsonRoundTrip) {
  VerificationReport r;
  r.case_id = "example2";
  r.params = {{"mu", 3.0}};
  r.grid = {-1.0, 1.0, 17};
  LevelRecord l;
  l.n = 1;
  l.eps_analytic = 5.0;
  l.eps_oracle = 5.0000001;
  l.abs_delta = 1e-7;
  l.note = "x";
  r.levels.push_back(l);
  r.checks.push_back({"c", 1e-9, 1e-8, true, "<"});
  r.normalizability.push_back({"psi_minus", "decaying"});
  r.wall_time = 2.0;
  const json j = to_json(r);
  EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
  EXPECT_EQ(to_json(report_from_json(j)), j);
  EXPECT_TRUE(to_json(r, true).contains("wall_time_s"));
}

TEST(Report, CsvLayout) {
  VerificationReport r;
  r.case_id = "rosen-morse";
  LevelRecord l;
  l.n = 2;
  l.ky = 1.0;
  l.eps_analytic = 4.0;
  r.levels.push_back(l);
  const std::string csv = levels_csv({r});
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "case,n,ky,eps_analytic,eps_oracle,abs_delta,residual1,residual2,pass");
  EXPECT_EQ(row.rfind("rosen-morse,2,", 0), 0u);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 8);
}
