#include <cstring>
#include <numbers>

#include <gtest/gtest.h>

#include "json.hpp"
#include "pisurf/commands.hpp"

using namespace pisurf;
using namespace pisurf::cli;

namespace {

cli::LoxodromeOptions worked_loxodrome() {
  cli::LoxodromeOptions o;
  o.spec = {LoxodromeKind::SS, std::numbers::pi / 4, 1, 1, {1, 2}};
  o.profile = "exp(u)";
  return o;
}

}  // namespace

TEST(Csv, HeaderAndRoundTrip) {
  const SampleTable t = cmd_loxodrome(worked_loxodrome()).table;
  const std::string csv = to_csv(t);
  EXPECT_EQ(csv.rfind("t,u,v,x,y,z\n", 0), 0u);
  const auto rows = parse_csv(csv);
  ASSERT_EQ(rows.size(), t.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // 17 significant digits reproduce every double exactly.
    EXPECT_EQ(std::memcmp(&rows[i], &t.rows[i], sizeof(SampleRow)), 0) << i;
  }
}

TEST(Csv, RejectsForeignHeader) {
  EXPECT_THROW(parse_csv("a,b\n1,2\n"), ConstructionError);
  EXPECT_THROW(parse_csv("t,u,v,x,y,z\n1,2,3\n"), ConstructionError);
}

TEST(Json, CarriesMetadataAndColumns) {
  const auto j = nlohmann::json::parse(to_json(cmd_loxodrome(worked_loxodrome()).table));
  EXPECT_EQ(j["meta"]["command"], "loxodrome");
  EXPECT_EQ(j["meta"]["kind"], "ss");
  EXPECT_EQ(j["meta"]["surface"], "spacelike-meridian");
  EXPECT_EQ(j["meta"]["tool_version"], kToolVersion);
  EXPECT_EQ(j["meta"]["columns"], nlohmann::json({"t", "u", "v", "x", "y", "z"}));
  ASSERT_EQ(j["rows"].size(), 500u);
  EXPECT_EQ(j["rows"][0].size(), 6u);
  EXPECT_EQ(j["rows"][0][0], 1.0);
}

TEST(SampleSurface, GridOrderAndSingleRow) {
  SurfaceOptions o;
  o.nu = 3;
  o.nv = 2;
  const SampleTable t = cmd_surface(o);
  ASSERT_EQ(t.rows.size(), 6u);
  EXPECT_EQ(t.rows[1].u, t.rows[0].u);
  EXPECT_NE(t.rows[1].v, t.rows[0].v);
  EXPECT_EQ(t.rows[5].t, 5.0);
  o.nu = o.nv = 1;
  EXPECT_EQ(cmd_surface(o).rows.size(), 1u);
  o.nu = 0;
  EXPECT_THROW(cmd_surface(o), ConstructionError);
}

TEST(Report, EmptyReportDoesNotPass) {
  EXPECT_FALSE(VerificationReport{}.passed());
}

TEST(Report, Bounds) {
  ResidualStats s;
  s.add(-0.5);
  s.add(0.25);
  EXPECT_EQ(s.max(), 0.5);
  EXPECT_EQ(s.mean(), 0.375);
  VerificationReport r;
  r.add("small", s, 1.0);
  r.add("large", s, 0.1, Bound::AtLeast);
  EXPECT_TRUE(r.passed());
  r.add("too_small", s, 0.1);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.to_text().find("FAIL"), std::string::npos);
  EXPECT_EQ(r.to_csv().rfind("check,max_residual,mean_residual,tolerance,bound,pass\n", 0), 0u);
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["checks"].size(), 3u);
}

TEST(Report, NonFiniteResidualFails) {
  ResidualStats s;
  s.add(NAN);
  VerificationReport r;
  r.add("nan", s, 1.0);
  EXPECT_FALSE(r.passed());
}

TEST(Commands, ParseConstant) {
  EXPECT_DOUBLE_EQ(parse_constant("pi/4"), std::numbers::pi / 4);
  EXPECT_EQ(parse_constant("2^3"), 8.0);
  EXPECT_THROW(parse_constant("u/4"), ConstructionError);
  EXPECT_THROW(parse_constant("pi/"), SyntaxError);
}

TEST(Commands, LoxodromeVerifyPasses) {
  cli::LoxodromeOptions o = worked_loxodrome();
  o.verify = true;
  const CurveResult r = cmd_loxodrome(o);
  ASSERT_TRUE(r.report.has_value());
  EXPECT_TRUE(r.report->passed());
  EXPECT_EQ(r.exit_code(), kOk);
}

TEST(Commands, ZeroAngleLoxodromeIsTheMeridian) {
  cli::LoxodromeOptions o = worked_loxodrome();
  o.spec.angle = 0;
  o.verify = true;
  const CurveResult r = cmd_loxodrome(o);
  EXPECT_TRUE(r.report->passed());
  for (const auto& row : r.table.rows) EXPECT_EQ(row.v, 0.0);
}

TEST(Commands, TimelikeLoxodromeNeedsPositiveAngle) {
  cli::LoxodromeOptions o = worked_loxodrome();
  o.spec.kind = LoxodromeKind::TS;
  o.spec.angle = 0;
  EXPECT_THROW(cmd_loxodrome(o), ConstructionError);
}

TEST(Commands, GeodesicModesVerify) {
  for (auto mode : {GeodesicMode::ClosedForm, GeodesicMode::Meridian, GeodesicMode::Integrate}) {
    GeodesicOptions o;
    o.mode = mode;
    o.verify = true;
    const CurveResult r = cmd_geodesic(o);
    ASSERT_TRUE(r.report.has_value());
    EXPECT_TRUE(r.report->passed()) << to_string(mode) << "\n" << r.report->to_text();
    EXPECT_EQ(r.table.rows.size(), 500u);
  }
}

TEST(Commands, ParallelVerifyFails) {
  GeodesicOptions o;
  o.mode = GeodesicMode::Parallel;
  o.verify = true;
  const CurveResult r = cmd_geodesic(o);
  EXPECT_FALSE(r.report->passed());
  EXPECT_EQ(r.exit_code(), kVerificationFailure);
}

TEST(Commands, IntegrateFromExplicitState) {
  GeodesicOptions o;
  o.mode = GeodesicMode::Integrate;
  o.state = GeodesicState{2.0, 0.0, 1.0, 0.0};
  o.t_range = {0, 1};
  const SampleTable t = cmd_geodesic(o).table;
  EXPECT_NEAR(t.rows.back().u, 3.0, 1e-12);
  EXPECT_EQ(t.meta["seeded_from_closed_form"], false);
}

TEST(Commands, RenderIsDeterministic) {
  GeodesicOptions o;
  EXPECT_EQ(render(cmd_geodesic(o).table, OutputFormat::Json),
            render(cmd_geodesic(o).table, OutputFormat::Json));
  EXPECT_EQ(render(cmd_verify("core"), OutputFormat::Csv),
            render(cmd_verify("core"), OutputFormat::Csv));
}

TEST(Commands, VerifySuites) {
  for (const char* s : {"core", "loxodrome", "geodesic"}) {
    const VerificationReport r = cmd_verify(s);
    EXPECT_TRUE(r.passed()) << s << "\n" << r.to_text();
  }
  EXPECT_THROW(cmd_verify("nope"), ConstructionError);
}

TEST(Commands, VerifyAllPassesForOtherSeeds) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const VerificationReport r = cmd_verify("all", seed);
    EXPECT_TRUE(r.passed()) << seed << "\n" << r.to_text();
  }
}
