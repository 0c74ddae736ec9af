#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "pisurf/geodesic.hpp"
#include "pisurf/loxodrome.hpp"
#include "pisurf/verify.hpp"

using namespace pisurf;

namespace {

const ExprAst kCos = parse("cos(u)");
constexpr auto kR1 = MeridianKind::SpacelikeMeridian;
constexpr auto kR2 = MeridianKind::TimelikeMeridian;

GeodesicClosedForm example(GeodesicParams p = verify::example_geodesic_params()) {
  return GeodesicClosedForm(kR2, kCos, p, {0.0, 2.0});
}

}  // namespace

TEST(ClosedForm, WorkedExampleValues) {
  const auto [u0, v0] = example().coordinates(0.0);
  EXPECT_NEAR(u0, -std::sqrt(3.0) / 2, 1e-15);
  EXPECT_NEAR(v0, 0.5 * std::log(1.0 / 3), 1e-15);
  EXPECT_NEAR(u0, -0.866025, 1e-6);
  EXPECT_NEAR(v0, -0.549306, 1e-6);
  const auto [u1, v1] = example().coordinates(0.5);
  EXPECT_NEAR(u1, -std::sqrt(15.0) / 2, 1e-14);
  EXPECT_NEAR(v1, 0.5 * std::log(3.0 / 5), 1e-15);
}

TEST(ClosedForm, C5ShiftsV) {
  GeodesicParams p = verify::example_geodesic_params();
  p.c5 = 0.75;
  for (double t : {0.0, 0.9, 2.0}) {
    EXPECT_EQ(example(p).coordinates(t).first, example().coordinates(t).first);
    EXPECT_NEAR(example(p).coordinates(t).second, example().coordinates(t).second + 0.75, 1e-15);
  }
}

TEST(ClosedForm, SignUFlipsU) {
  GeodesicParams p = verify::example_geodesic_params();
  p.sign_u = 1;
  EXPECT_EQ(example(p).coordinates(1.0).first, -example().coordinates(1.0).first);
}

TEST(ClosedForm, SatisfiesGeodesicEquations) {
  const ParamCurve c = example().curve();
  for (double t : linspace({0.1, 1.9}, 200)) {
    const ElResidual r = el_residual(kR2, c, t);
    EXPECT_LE(std::abs(r.r1), 1e-10) << t;
    EXPECT_LE(std::abs(r.r2), 1e-10) << t;
    EXPECT_NEAR(clairaut_constant(c, t), 1.0, 1e-12);
  }
}

TEST(ClosedForm, FirstIntegral) {
  // u'^2 = (c1 u^2 + c^2) / u^2
  const ParamCurve c = example().curve();
  for (double t : {0.2, 1.0, 1.8}) {
    const CurveJet j = c.jet(t);
    const double u2 = j.u.value * j.u.value;
    EXPECT_NEAR(j.u.d1 * j.u.d1, (4 * u2 + 1) / u2, 1e-12);
  }
}

TEST(ClosedForm, AlsoAGeodesicOnR1) {
  const GeodesicClosedForm g(kR1, parse("exp(u)"), {0.5, 2, -1, 0.3, 1}, {1.0, 3.0});
  const ParamCurve c = g.curve();
  for (double t : linspace({1.0, 3.0}, 50)) {
    const ElResidual r = el_residual(kR1, c, t);
    EXPECT_LE(std::max(std::abs(r.r1), std::abs(r.r2)), 1e-10);
  }
}

TEST(ClosedForm, ConstructionErrors) {
  auto make = [](GeodesicParams p, Interval d) { return GeodesicClosedForm(kR2, kCos, p, d); };
  EXPECT_THROW(make({0, 4, 2, 0, -1}, {0, 2}), ConstructionError);   // c = 0
  EXPECT_THROW(make({1, -4, 2, 0, -1}, {0, 2}), ConstructionError);  // c1 < 0
  EXPECT_THROW(make({1, 0, 2, 0, -1}, {0, 2}), ConstructionError);   // c1 = 0
  EXPECT_THROW(make({1, 4, 2, 0, 3}, {0, 2}), ConstructionError);    // sign
  // |4t + 2| <= 1 for t in [-0.75, -0.25]
  EXPECT_THROW(make({1, 4, 2, 0, -1}, {-1, 0}), ConstructionError);
  EXPECT_THROW(make({1, 4, 2, 0, -1}, {-0.5, -0.4}), ConstructionError);
  EXPECT_NO_THROW(make({1, 4, 2, 0, -1}, {-2, -0.8}));
}

TEST(ClosedForm, OutsideDomainIsDomainError) {
  EXPECT_THROW(example().coordinates(2.5), DomainError);
}

TEST(ClosedForm, ValidInterval) {
  const GeodesicParams p = verify::example_geodesic_params();
  const Interval right = GeodesicClosedForm::valid_interval(p, 1.0, 0.0);
  EXPECT_EQ(right.lo, -0.25);
  EXPECT_TRUE(std::isinf(right.hi));
  const Interval left = GeodesicClosedForm::valid_interval(p, -3.0, 0.0);
  EXPECT_EQ(left.hi, -0.75);
  EXPECT_TRUE(std::isinf(left.lo));
  EXPECT_THROW(GeodesicClosedForm::valid_interval(p, -0.5), ConstructionError);
}

TEST(ClosedForm, NegativeC1SolvesTheEquationsButReversesTheConstant) {
  // With c1 < 0 (|c1| under the root) the formula still solves the geodesic
  // system, but u^2 v' comes out as -c and u'^2 = (|c1| u^2 + c^2) / u^2.
  const GeodesicParams p{1.0, -4.0, -2.0, 0.0, -1};
  const GeodesicClosedForm g = GeodesicClosedForm::probe(kR2, kCos, p, {0.0, 2.0});
  const ParamCurve c = g.curve();
  for (double t : linspace({0.1, 1.9}, 50)) {
    const ElResidual r = el_residual(kR2, c, t);
    EXPECT_LE(std::max(std::abs(r.r1), std::abs(r.r2)), 1e-10);
    EXPECT_NEAR(clairaut_constant(c, t), -p.c, 1e-12);
    const CurveJet j = c.jet(t);
    const double u2 = j.u.value * j.u.value;
    EXPECT_NEAR(j.u.d1 * j.u.d1, (4 * u2 + 1) / u2, 1e-12);
    EXPECT_GT(std::abs(j.u.d1 * j.u.d1 - (-4 * u2 + 1) / u2), 1.0);
  }
}

TEST(Meridian, IsAGeodesic) {
  const ParamCurve m = meridian_geodesic(2, 5, 0.3, kR2, kCos, {0, 2});
  for (double t : {0.0, 1.0, 2.0}) {
    const auto [u, v] = m.coordinates(t);
    EXPECT_EQ(u, 2 * t + 5);
    EXPECT_EQ(v, 0.3);
    const ElResidual r = el_residual(kR2, m, t);
    EXPECT_EQ(r.r1, 0.0);
    EXPECT_EQ(r.r2, 0.0);
  }
  EXPECT_THROW(meridian_geodesic(0, 5, 0, kR2, kCos, {0, 2}), ConstructionError);
}

TEST(Parallel, IsNotAGeodesic) {
  const ParallelClassification c = classify_parallel(1.0);
  EXPECT_FALSE(c.geodesic);
  EXPECT_EQ(c.explanation.rfind("NotGeodesic", 0), 0u);
  EXPECT_EQ(c.unit_rate_residual.r1, 1.0);
  EXPECT_EQ(c.unit_rate_residual.r2, 0.0);
  EXPECT_EQ(classify_parallel(-2.5).unit_rate_residual.r1, -2.5);
  EXPECT_THROW(classify_parallel(0.0), ConstructionError);
}

TEST(Parallel, ConstantVIsAPointAndSatisfiesBoth) {
  const CurveJet point{Jet2::constant(5.0), Jet2::constant(0.2)};
  const ElResidual r = el_residual(kR1, point);
  EXPECT_EQ(r.r1, 0.0);
  EXPECT_EQ(r.r2, 0.0);
}

TEST(Parallel, CurveResidualEqualsU0) {
  const ParamCurve p = parallel_curve(3.0, kR1, kCos, {0, 1});
  EXPECT_EQ(el_residual(kR1, p, 0.5).r1, 3.0);
}

TEST(ElResidual, LoxodromeIsNotAGeodesic) {
  const double a = std::numbers::pi / 4;
  const Loxodrome l({LoxodromeKind::SS, a}, parse("exp(u)"));
  const ElResidual r = el_residual(kR1, l.curve(), 1.5);
  EXPECT_NEAR(r.r1, std::cosh(a) * std::tanh(a) * std::tanh(a) / 1.5, 1e-14);
  EXPECT_NEAR(r.r2, std::sinh(a) * std::cosh(a), 1e-14);
}

TEST(ElResidual, BothKindsGiveTheSameNormalizedSystem) {
  const ParamCurve c = example().curve();
  for (double t : {0.3, 1.1}) {
    const CurveJet j = c.jet(t);
    const ElResidual a = el_residual(kR1, j), b = el_residual(kR2, j);
    EXPECT_DOUBLE_EQ(a.r1, b.r1);
    EXPECT_DOUBLE_EQ(a.r2, b.r2);
  }
  // Off-geodesic: r1 = u'' + u v'^2, r2 = 2 u u' v' + u^2 v''.
  const CurveJet j{Jet2{2, 3, 5}, Jet2{1, 7, 11}};
  for (auto k : {kR1, kR2}) {
    const ElResidual r = el_residual(k, j);
    EXPECT_DOUBLE_EQ(r.r1, 5 + 2 * 49);
    EXPECT_DOUBLE_EQ(r.r2, 2 * 2 * 3 * 7 + 4 * 11);
  }
}

TEST(Integrator, MatchesClosedForm) {
  const ParamCurve cf = example().curve();
  const GeodesicState s0 = state_of(cf, 0.5);
  const Trajectory tr = integrate_states(s0, {0.5, 1.5}, 1e-3);
  ASSERT_EQ(tr.t.size(), 1001u);
  EXPECT_EQ(tr.t.back(), 1.5);
  const auto [u, v] = example().coordinates(1.5);
  EXPECT_NEAR(tr.states.back().u, u, 1e-6);
  EXPECT_NEAR(tr.states.back().v, v, 1e-6);
}

TEST(Integrator, FourthOrder) {
  const GeodesicState s0 = state_of(example().curve(), 0.5);
  const auto [u, v] = example().coordinates(1.5);
  auto err = [&](double h) {
    const GeodesicState e = integrate_states(s0, {0.5, 1.5}, h).states.back();
    return std::max(std::abs(e.u - u), std::abs(e.v - v));
  };
  EXPECT_GT(err(0.02) / err(0.01), 14.0);
  EXPECT_GT(err(0.01) / err(0.005), 14.0);
}

TEST(Integrator, StraightMeridianWhenVIsConstant) {
  const Trajectory tr = integrate_states({2.0, 0.4, 1.5, 0.0}, {0, 1}, 0.01);
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    EXPECT_NEAR(tr.states[i].u, 2.0 + 1.5 * tr.t[i], 1e-13);
    EXPECT_EQ(tr.states[i].v, 0.4);
  }
}

TEST(Integrator, StepIsShrunkToDivideTheSpan) {
  const Trajectory tr = integrate_states({1, 0, 0, 0}, {0, 1}, 0.3);
  EXPECT_EQ(tr.t.size(), 5u);
  EXPECT_NEAR(tr.t[1], 0.25, 1e-15);
}

TEST(Integrator, AxisCrossing) {
  EXPECT_THROW(integrate_states({1.0, 0, -1.0, 0}, {0, 2}, 1e-3), AxisCrossing);
  EXPECT_THROW(integrate_states({0.0, 0, 1.0, 0}, {0, 1}, 1e-3), AxisCrossing);
}

TEST(Integrator, StepTooLarge) {
  const GeodesicState s0 = state_of(example().curve(), 0.5);
  EXPECT_THROW(integrate_states(s0, {0.5, 1.5}, 0.2), StepTooLarge);
}

TEST(Integrator, InvalidArguments) {
  EXPECT_THROW(integrate_states({1, 0, 0, 0}, {0, 1}, 0.0), ConstructionError);
  EXPECT_THROW(integrate_states({1, 0, 0, 0}, {1, 0}, 0.1), ConstructionError);
}

TEST(Integrator, HermiteCurveInterpolates) {
  const RotationalSurface s(kR2, kCos);
  const GeodesicState s0 = state_of(example().curve(), 0.5);
  const IntegratedGeodesic ig = integrate(s, s0, {0.5, 1.5}, 1e-2);
  for (double t : {0.5, 0.734, 1.0, 1.2345, 1.5}) {
    const auto [u, v] = ig.curve.coordinates(t);
    const auto [uu, vv] = example().coordinates(t);
    EXPECT_NEAR(u, uu, 1e-8) << t;
    EXPECT_NEAR(v, vv, 1e-8) << t;
  }
  EXPECT_NEAR(clairaut_constant(ig.curve, 1.0), 1.0, 1e-5);
}
