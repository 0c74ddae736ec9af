#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "pisurf/loxodrome.hpp"
#include "pisurf/verify.hpp"

using namespace pisurf;

namespace {

constexpr double kPi4 = std::numbers::pi / 4;

Loxodrome make(LoxodromeKind k, double angle, Interval dom = {1, 2}, int su = 1, int sv = 1,
               const char* profile = "exp(u)") {
  return Loxodrome({k, angle, su, sv, dom}, parse(profile));
}

}  // namespace

TEST(Loxodrome, CoordinatesOfTheWorkedExample) {
  const auto [u, v] = make(LoxodromeKind::SS, kPi4).coordinates(1.0);
  EXPECT_NEAR(u, std::cosh(kPi4), 1e-15);
  EXPECT_NEAR(u, 1.324609, 1e-6);
  EXPECT_EQ(v, 0.0);
}

TEST(Loxodrome, ZeroAngleIsTheMeridian) {
  const auto [u, v] = make(LoxodromeKind::SS, 0.0).coordinates(2.0);
  EXPECT_EQ(u, 2.0);
  EXPECT_EQ(v, 0.0);
  const auto [ut, vt] = make(LoxodromeKind::TT, 0.0).coordinates(1.0);
  EXPECT_EQ(ut, -1.0);
  EXPECT_EQ(vt, 0.0);
}

TEST(Loxodrome, FamilyFormulas) {
  const double a = 0.6, t = 1.7;
  struct Row {
    LoxodromeKind k;
    double u, v;
  } rows[] = {
      {LoxodromeKind::SS, t * std::cosh(a), std::tanh(a) * std::log(t)},
      {LoxodromeKind::TS, t * std::sinh(a), std::log(t) / std::tanh(a)},
      {LoxodromeKind::ST, t * std::sinh(a), std::log(t) / std::tanh(a)},
      {LoxodromeKind::TT, -t * std::cosh(a), std::tanh(a) * std::log(t)},
  };
  for (const auto& r : rows) {
    const auto [u, v] = make(r.k, a).coordinates(t);
    EXPECT_NEAR(u, r.u, 1e-14) << to_string(r.k);
    EXPECT_NEAR(v, r.v, 1e-14) << to_string(r.k);
  }
}

TEST(Loxodrome, SignsSelectBranches) {
  const double a = 0.6, t = -1.7;
  const auto [u, v] = make(LoxodromeKind::SS, a, {-2, -1}, -1, -1).coordinates(t);
  EXPECT_NEAR(u, -t * std::cosh(a), 1e-14);
  EXPECT_NEAR(v, -std::tanh(a) * std::log(-t), 1e-14);
}

TEST(Loxodrome, TTIgnoresSignU) {
  const Loxodrome l = make(LoxodromeKind::TT, 0.5, {1, 2}, +1);
  EXPECT_EQ(l.sign_u(), -1);
}

TEST(Loxodrome, Embed) {
  const PiVec3 p = make(LoxodromeKind::SS, kPi4).embed(1.0);
  const double c = std::cosh(kPi4);
  EXPECT_NEAR(p.x(), c, 1e-15);
  EXPECT_EQ(p.y(), 0.0);
  EXPECT_NEAR(p.z(), std::exp(c), 1e-14);
}

TEST(Loxodrome, UnitSpeedEveryFamily) {
  for (auto k : {LoxodromeKind::SS, LoxodromeKind::TS, LoxodromeKind::ST, LoxodromeKind::TT}) {
    const Loxodrome l = make(k, 1.0, {0.5, 3});
    for (double t : linspace(l.t_domain(), 50)) {
      const PiVec3 g = l.velocity(t);
      EXPECT_NEAR(scalar_product(g, g), l.speed_sign(), 1e-12) << to_string(k) << " t=" << t;
      EXPECT_EQ(causal_character(g), curve_character(k));
    }
  }
}

TEST(Loxodrome, VelocityMatchesFiniteDifference) {
  const Loxodrome l = make(LoxodromeKind::ST, 0.7, {1, 2}, -1, 1, "cos(u)");
  const double t = 1.4, h = 1e-6;
  const PiVec3 fd = (1 / (2 * h)) * (l.embed(t + h) - l.embed(t - h));
  const PiVec3 g = l.velocity(t);
  EXPECT_NEAR(fd.x(), g.x(), 1e-8);
  EXPECT_NEAR(fd.y(), g.y(), 1e-8);
  EXPECT_NEAR(fd.z(), g.z(), 1e-8);
}

TEST(Loxodrome, ZeroAngleVelocityIsMeridianTangent) {
  const Loxodrome l = make(LoxodromeKind::SS, 0.0, {1, 2}, -1);
  const PiVec3 g = l.velocity(1.5);
  const PiVec3 m = l.meridian_tangent(1.5);
  EXPECT_NEAR(g.x(), -m.x(), 1e-15);
  EXPECT_NEAR(g.y(), -m.y(), 1e-15);
  EXPECT_NEAR(g.z(), -m.z(), 1e-15);
}

TEST(Loxodrome, MeasuredAngleIsConstant) {
  const Loxodrome ex = make(LoxodromeKind::SS, kPi4);
  for (double t : {1.1, 1.5, 1.9}) EXPECT_NEAR(ex.measure_meridian_angle(t), kPi4, 1e-9);
  EXPECT_EQ(make(LoxodromeKind::SS, 0.0).measure_meridian_angle(1.5), 0.0);
  const Loxodrome tt = make(LoxodromeKind::TT, 1.0, {0.5, 4});
  for (double t : linspace(tt.t_domain(), 100)) EXPECT_NEAR(tt.measure_meridian_angle(t), 1.0, 1e-9);
  const Loxodrome ts = make(LoxodromeKind::TS, 0.3, {-3, -0.5});
  for (double t : linspace(ts.t_domain(), 100)) EXPECT_NEAR(ts.measure_meridian_angle(t), 0.3, 1e-9);
}

TEST(Loxodrome, ProductWithMeridianIsURate) {
  const double a = 0.9, t = 1.3;
  const Loxodrome r1 = make(LoxodromeKind::SS, a);
  EXPECT_NEAR(scalar_product(r1.velocity(t), r1.meridian_tangent(t)), std::cosh(a), 1e-13);
  const Loxodrome r2 = make(LoxodromeKind::ST, a);
  EXPECT_NEAR(scalar_product(r2.velocity(t), r2.meridian_tangent(t)), -std::sinh(a), 1e-13);
}

TEST(Loxodrome, CoordinatesDoNotDependOnProfile) {
  const Loxodrome a = make(LoxodromeKind::TS, 0.4, {1, 2}, 1, 1, "exp(u)");
  const Loxodrome b = make(LoxodromeKind::TS, 0.4, {1, 2}, 1, 1, "u^2");
  EXPECT_EQ(a.coordinates(1.3), b.coordinates(1.3));
  EXPECT_NE(a.embed(1.3).z(), b.embed(1.3).z());
}

TEST(Loxodrome, ConstructionErrors) {
  EXPECT_THROW(make(LoxodromeKind::TS, 0.0), ConstructionError);
  EXPECT_THROW(make(LoxodromeKind::ST, 0.0), ConstructionError);
  EXPECT_THROW(make(LoxodromeKind::SS, -0.1), ConstructionError);
  EXPECT_THROW(make(LoxodromeKind::SS, NAN), ConstructionError);
  EXPECT_THROW(make(LoxodromeKind::SS, 0.5, {-1, 1}), ConstructionError);
  EXPECT_THROW(make(LoxodromeKind::SS, 0.5, {0, 1}), ConstructionError);
  EXPECT_THROW(make(LoxodromeKind::SS, 0.5, {2, 1}), ConstructionError);
  EXPECT_THROW(make(LoxodromeKind::SS, 0.5, {1, 2}, 2), ConstructionError);
  EXPECT_THROW(make(LoxodromeKind::SS, 0.5, {1, 2}, 1, 0), ConstructionError);
}

TEST(Loxodrome, KindBookkeeping) {
  EXPECT_EQ(meridian_kind(LoxodromeKind::SS), MeridianKind::SpacelikeMeridian);
  EXPECT_EQ(meridian_kind(LoxodromeKind::TS), MeridianKind::SpacelikeMeridian);
  EXPECT_EQ(meridian_kind(LoxodromeKind::ST), MeridianKind::TimelikeMeridian);
  EXPECT_EQ(meridian_kind(LoxodromeKind::TT), MeridianKind::TimelikeMeridian);
  EXPECT_EQ(curve_character(LoxodromeKind::TS), CausalCharacter::Timelike);
  EXPECT_EQ(curve_character(LoxodromeKind::ST), CausalCharacter::Spacelike);
}

TEST(Loxodrome, CurveJetMatchesClosedForm) {
  const Loxodrome l = make(LoxodromeKind::SS, 0.5);
  const CurveJet j = l.curve().jet(1.5);
  EXPECT_NEAR(j.u.d1, std::cosh(0.5), 1e-15);
  EXPECT_EQ(j.u.d2, 0.0);
  EXPECT_NEAR(j.v.d1, std::tanh(0.5) / 1.5, 1e-15);
  EXPECT_NEAR(j.v.d2, -std::tanh(0.5) / (1.5 * 1.5), 1e-15);
}

TEST(Loxodrome, VerifyReportPasses) {
  EXPECT_TRUE(verify::verify_loxodrome(make(LoxodromeKind::SS, kPi4)).passed());
  EXPECT_TRUE(verify::verify_loxodrome(make(LoxodromeKind::SS, 0.0)).passed());
}
