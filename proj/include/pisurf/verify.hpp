#pragma once

// Numerical verification suites. Each check re-derives a closed-form claim
// independently (analytic jets, finite differences, RK4) and records the
// worst residual against a fixed tolerance.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "pisurf/geodesic.hpp"
#include "pisurf/loxodrome.hpp"
#include "pisurf/report.hpp"

namespace pisurf {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// mt19937_64 with a fixed double conversion, so draws do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  int sign() { return (engine_() >> 63) ? 1 : -1; }
  std::uint64_t bits() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

/// Relative tolerance scale that never collapses to zero.
inline double rel_scale(double x) { return std::max(1.0, std::abs(x)); }

namespace verify {

// ---------------------------------------------------------------- core

/// Random vector of a random causal class (including exact light-like and
/// isotropic cases).
inline PiVec3 random_vector(Rng& rng) {
  const auto pick = rng.bits() % 4;
  const double z = rng.uniform(-10, 10);
  if (pick == 0) return {0.0, 0.0, z};
  if (pick == 1) {
    const double a = rng.uniform(0.1, 10) * rng.sign();
    return {a, a * rng.sign(), z};
  }
  return {rng.uniform(-10, 10), rng.uniform(-10, 10), z};
}

inline PiMotion random_motion(Rng& rng) {
  return {rng.uniform(-3, 3), rng.uniform(-5, 5), rng.uniform(-5, 5),
          rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
}

/// <Lp, Lq> = <p, q> for the linear part L of random motions, relative to
/// the Euclidean size of the boosted top views; causal character exact.
inline VerificationReport motion_invariance(std::uint64_t seed, int pairs = 1000,
                                            int motions = 100) {
  Rng rng(seed);
  std::vector<PiMotion> ms;
  for (int i = 0; i < motions; ++i) ms.push_back(random_motion(rng).linear_part());
  ResidualStats product;
  bool character_ok = true;
  for (int i = 0; i < pairs; ++i) {
    const PiVec3 p = random_vector(rng);
    const PiVec3 q = random_vector(rng);
    const double before = scalar_product(p, q);
    for (const auto& m : ms) {
      const PiVec3 lp = apply_motion(m, p);
      const PiVec3 lq = apply_motion(m, q);
      const double after = scalar_product(lp, lq);
      const double scale = std::max({std::hypot(lp.x(), lp.y()) * std::hypot(lq.x(), lq.y()),
                                     std::abs(p.z() * q.z()), 1e-300});
      product.add((after - before) / scale);
      character_ok = character_ok && causal_character(lp) == causal_character(p) &&
                     causal_character(lq) == causal_character(q);
    }
  }
  VerificationReport r;
  r.add("core.motion_invariance.scalar_product", product, 1e-12);
  r.add_flag("core.motion_invariance.causal_character", character_ok);
  return r;
}

inline VerificationReport scalar_product_properties(std::uint64_t seed, int n = 1000) {
  Rng rng(seed);
  ResidualStats symmetry;
  ResidualStats mixed;
  for (int i = 0; i < n; ++i) {
    const PiVec3 p = random_vector(rng);
    const PiVec3 q = random_vector(rng);
    symmetry.add(scalar_product(p, q) - scalar_product(q, p));
    if (p.is_isotropic() != q.is_isotropic()) mixed.add(scalar_product(p, q));
  }
  VerificationReport r;
  r.add("core.scalar_product.symmetry", symmetry, 0.0);
  r.add("core.scalar_product.isotropic_mixed_zero", mixed, 0.0);
  return r;
}

inline const std::vector<std::string>& metric_profiles() {
  static const std::vector<std::string> p{"exp(u)", "cos(u)", "u^2", "sinh(u) + 3",
                                          "ln(u^2 + 1) * tanh(u)"};
  return p;
}

/// Fundamental form from the embedding vs. the stated coefficients on a
/// 20 x 20 grid, for every profile and both meridian kinds.
inline VerificationReport metric_reproduction() {
  ResidualStats e, f, g;
  ResidualStats equivariance;
  const auto us = linspace({0.25, 3.0}, 20);
  const auto vs = linspace({-1.5, 1.5}, 20);
  for (const auto& src : metric_profiles()) {
    for (auto kind : {MeridianKind::SpacelikeMeridian, MeridianKind::TimelikeMeridian}) {
      const RotationalSurface s(kind, parse(src));
      for (double u : us) {
        const FundamentalForm want = s.fundamental_form(u);
        for (double v : vs) {
          const FundamentalForm got = s.induced_form(u, v);
          e.add((got.E - want.E) / rel_scale(want.E));
          f.add(got.F - want.F);
          g.add((got.G - want.G) / rel_scale(want.G));
          const PiVec3 a = s.point(u, v + 0.3);
          const PiVec3 b = rotate_z(0.3, s.point(u, v));
          equivariance.add(std::max({std::abs(a.x() - b.x()) / rel_scale(a.x()),
                                     std::abs(a.y() - b.y()) / rel_scale(a.y()),
                                     std::abs(a.z() - b.z())}));
        }
      }
    }
  }
  VerificationReport r;
  r.add("surface.metric.E", e, 1e-12);
  r.add("surface.metric.F", f, 1e-12);
  r.add("surface.metric.G", g, 1e-12);
  r.add("surface.rotation_equivariance", equivariance, 1e-12);
  return r;
}

struct AdCase {
  const char* expr;
  Interval domain;
};

inline const std::vector<AdCase>& ad_cases() {
  static const std::vector<AdCase> c{
      {"sin(u)", {-5, 5}},        {"cos(u)", {-5, 5}},         {"exp(u)", {-3, 3}},
      {"ln(u)", {0.1, 5}},        {"sinh(u)", {-3, 3}},        {"cosh(u)", {-3, 3}},
      {"tanh(u)", {-3, 3}},       {"sqrt(u)", {0.1, 5}},       {"abs(u)", {0.05, 5}},
      {"abs(u)", {-5, -0.05}},    {"-u", {-5, 5}},             {"u^3", {-3, 3}},
      {"u^2.5", {0.1, 4}},        {"2^u", {-3, 3}},            {"u^u", {0.2, 3}},
      {"1/u", {0.2, 5}},          {"u*sin(u) - cos(u)/3", {-4, 4}},
      {"exp(-u^2) + sqrt(1 + u^2)", {-3, 3}},
  };
  return c;
}

/// Dual-number derivatives vs. central differences (step 1e-5).
inline VerificationReport ad_correctness(std::uint64_t seed, int points = 100) {
  Rng rng(seed);
  ResidualStats first, second;
  const double h = 1e-5;
  for (const auto& c : ad_cases()) {
    const ExprAst ast = parse(c.expr);
    for (int i = 0; i < points; ++i) {
      const double u = rng.uniform(c.domain.lo + 2 * h, c.domain.hi - 2 * h);
      const Jet2 j = eval_jet2(ast, u);
      const double fp = evaluate(ast, u + h);
      const double fm = evaluate(ast, u - h);
      const double d1 = (fp - fm) / (2 * h);
      const double d2 = (fp - 2 * j.value + fm) / (h * h);
      first.add((j.d1 - d1) / (1.0 + std::abs(j.d1)));
      second.add((j.d2 - d2) / (1.0 + std::abs(j.d2)));
    }
  }
  VerificationReport r;
  r.add("expr.ad.first_derivative", first, 1e-6);
  r.add("expr.ad.second_derivative", second, 1e-4);
  return r;
}

inline VerificationReport core_suite(std::uint64_t seed) {
  VerificationReport r;
  r.append(scalar_product_properties(seed));
  r.append(motion_invariance(seed + 1));
  r.append(metric_reproduction());
  r.append(ad_correctness(seed + 2));
  return r;
}

// ------------------------------------------------------------ loxodrome

struct LoxodromeChecks {
  ResidualStats unit_speed;
  ResidualStats unit_speed_fd;
  ResidualStats angle;
  ResidualStats meridian_product;
};

/// Accumulates unit-speed, finite-difference, constant-angle and
/// <g', R_u> = +-u' residuals along `samples` points of the t-domain.
inline void check_loxodrome(const Loxodrome& l, std::size_t samples, LoxodromeChecks& out) {
  const double h = 1e-6;
  const double sign = l.speed_sign();
  const double meridian_square =
      l.surface().kind() == MeridianKind::SpacelikeMeridian ? 1.0 : -1.0;
  const ParamCurve curve = l.curve();
  for (double t : linspace(l.t_domain(), samples)) {
    const PiVec3 vel = l.velocity(t);
    out.unit_speed.add(scalar_product(vel, vel) - sign);
    const PiVec3 fd = (1.0 / (2.0 * h)) * (l.embed(t + h) - l.embed(t - h));
    out.unit_speed_fd.add(scalar_product(fd, fd) - sign);
    out.angle.add(l.measure_meridian_angle(t) - l.angle());
    const double du = curve.jet(t).u.d1;
    out.meridian_product.add(scalar_product(vel, l.meridian_tangent(t)) - meridian_square * du);
  }
}

inline void report_loxodrome(VerificationReport& r, const std::string& prefix,
                             const LoxodromeChecks& c) {
  r.add(prefix + ".unit_speed", c.unit_speed, 1e-9);
  r.add(prefix + ".unit_speed_fd", c.unit_speed_fd, 1e-5);
  r.add(prefix + ".constant_angle", c.angle, 1e-9);
  r.add(prefix + ".meridian_product", c.meridian_product, 1e-10);
}

/// Checks a single loxodrome along its own t-domain.
inline VerificationReport verify_loxodrome(const Loxodrome& l, std::size_t samples = 1000) {
  LoxodromeChecks c;
  check_loxodrome(l, samples, c);
  VerificationReport r;
  report_loxodrome(r, "loxodrome." + to_string(l.kind()), c);
  return r;
}

/// Random angle and t-domain for a family; t-domains may be negative.
inline LoxodromeSpec random_loxodrome(LoxodromeKind kind, Rng& rng, int sign_u, int sign_v) {
  LoxodromeSpec s;
  s.kind = kind;
  s.angle = rng.uniform(0.05, 2.0);
  s.sign_u = sign_u;
  s.sign_v = sign_v;
  // The embedding grows like e^|v|, and with v = rate ln|t| a small angle on a
  // TS/ST curve (rate = coth) reaches |v| ~ 30 on modest t ranges, where the
  // Minkowski-type product of the velocity cancels away every digit. Draw the
  // t range in log space so that |v| <= 4 whatever the angle.
  const bool coth_rate = kind == LoxodromeKind::TS || kind == LoxodromeKind::ST;
  const double rate = coth_rate ? 1.0 / std::tanh(s.angle) : std::tanh(s.angle);
  const double m = std::min(1.2, 4.0 / rate);
  const double log_lo = rng.uniform(-m, 0.5 * m);
  const double log_hi = std::min(m, log_lo + rng.uniform(0.25, 1.0) * m);
  const double lo = std::exp(log_lo), hi = std::exp(log_hi);
  s.t_domain = rng.sign() > 0 ? Interval{lo, hi} : Interval{-hi, -lo};
  return s;
}

inline VerificationReport loxodrome_suite(std::uint64_t seed, int draws = 10,
                                          std::size_t samples = 1000) {
  Rng rng(seed);
  const ExprAst profile = parse("exp(u/4) + cos(u)");
  VerificationReport r;
  for (auto kind : {LoxodromeKind::SS, LoxodromeKind::TS, LoxodromeKind::ST, LoxodromeKind::TT}) {
    LoxodromeChecks c;
    for (int su : {1, -1}) {
      if (kind == LoxodromeKind::TT && su == 1) continue;
      for (int sv : {1, -1}) {
        for (int d = 0; d < draws; ++d)
          check_loxodrome(Loxodrome(random_loxodrome(kind, rng, su, sv), profile), samples, c);
      }
    }
    report_loxodrome(r, "loxodrome." + to_string(kind), c);
  }
  // Worked example: theta = pi/4 on f = e^u, t in (1, 2).
  LoxodromeChecks example;
  check_loxodrome(Loxodrome({LoxodromeKind::SS, std::numbers::pi / 4}, parse("exp(u)")), samples,
                  example);
  report_loxodrome(r, "loxodrome.example_pi_over_4", example);
  return r;
}

// ------------------------------------------------------------- geodesic

struct GeodesicChecks {
  ResidualStats r1, r2;
  ResidualStats clairaut;
  ResidualStats first_integral;
};

/// EL residuals, u^2 v' = c (relative) and u'^2 = (c1 u^2 + c^2)/u^2
/// (relative) along a closed-form geodesic.
inline void check_closed_form(const GeodesicClosedForm& g, Interval range, std::size_t samples,
                              GeodesicChecks& out) {
  const ParamCurve curve = g.curve();
  const auto& p = g.params();
  for (double t : linspace(range, samples)) {
    const CurveJet j = curve.jet(t);
    const ElResidual res = el_residual(g.kind(), j);
    out.r1.add(res.r1);
    out.r2.add(res.r2);
    const double u2 = j.u.value * j.u.value;
    out.clairaut.add((u2 * j.v.d1 - p.c) / std::abs(p.c));
    const double rhs = (p.c1 * u2 + p.c * p.c) / u2;
    out.first_integral.add((j.u.d1 * j.u.d1 - rhs) / rel_scale(rhs));
  }
}

inline void report_closed_form(VerificationReport& r, const std::string& prefix,
                               const GeodesicChecks& c) {
  r.add(prefix + ".el_r1", c.r1, 1e-6);
  r.add(prefix + ".el_r2", c.r2, 1e-6);
  r.add(prefix + ".clairaut_relative", c.clairaut, 1e-8);
  r.add(prefix + ".first_integral_relative", c.first_integral, 1e-8);
}

inline GeodesicParams example_geodesic_params() { return {1.0, 4.0, 2.0, 0.0, -1}; }
inline constexpr double kExampleMeridianA = 2.0;
inline constexpr double kExampleMeridianB = 5.0;

/// Random admissible constants with a unit-length t-window that starts a
/// guard band away from the sqrt singularity.
inline GeodesicClosedForm random_closed_form(Rng& rng, const ExprAst& profile,
                                             MeridianKind kind) {
  GeodesicParams p;
  p.c = rng.uniform(0.2, 2.0) * rng.sign();
  p.c1 = rng.uniform(0.5, 5.0);
  p.c2 = rng.uniform(-3.0, 3.0);
  p.c5 = rng.uniform(-1.0, 1.0);
  p.sign_u = rng.sign();
  const double seed = rng.sign() > 0 ? (std::abs(p.c) - p.c2) / p.c1 + 1.0
                                     : (-std::abs(p.c) - p.c2) / p.c1 - 1.0;
  const Interval valid = GeodesicClosedForm::valid_interval(p, seed);
  const Interval window = std::isfinite(valid.lo) ? Interval{valid.lo, valid.lo + 1.0}
                                                  : Interval{valid.hi - 1.0, valid.hi};
  return GeodesicClosedForm(kind, profile, p, window);
}

/// Base step of the RK4 step-halving test (compared against half of it).
inline constexpr double kHalvingStep = 1e-2;

struct OracleComparison {
  double error_coarse = 0.0;  ///< max(|du|, |dv|) at the end, at `step`
  double error_fine = 0.0;    ///< same at step / 2
  double drift_per_time = 0.0;
};

/// Seeds RK4 from the closed form at span.lo and compares at span.hi.
inline OracleComparison compare_with_integrator(const GeodesicClosedForm& g, Interval span,
                                                double step) {
  const ParamCurve cf = g.curve();
  const GeodesicState s0 = state_of(cf, span.lo);
  const auto [u1, v1] = g.coordinates(span.hi);
  OracleComparison out;
  for (int pass = 0; pass < 2; ++pass) {
    const Trajectory traj = integrate_states(s0, span, pass == 0 ? step : step / 2);
    const GeodesicState& end = traj.states.back();
    const double err = std::max(std::abs(end.u - u1), std::abs(end.v - v1));
    if (pass == 0) {
      out.error_coarse = err;
      const double l0 = traj.clairaut(0);
      double drift = 0.0;
      for (std::size_t i = 1; i < traj.states.size(); ++i)
        drift = std::max(drift, std::abs(traj.clairaut(i) - l0) / std::abs(l0));
      out.drift_per_time = drift / span.length();
    } else {
      out.error_fine = err;
    }
  }
  return out;
}

/// Verification of an arbitrary geodesic candidate: EL residuals and the
/// spread of u^2 v' along `samples` points of `range`.
inline VerificationReport verify_geodesic_curve(MeridianKind kind, const ParamCurve& curve,
                                                Interval range, std::size_t samples,
                                                const std::string& prefix) {
  ResidualStats r1, r2, spread;
  const auto ts = linspace(range, samples);
  const double l0 = clairaut_constant(curve, ts.front());
  for (double t : ts) {
    const ElResidual res = el_residual(kind, curve, t);
    r1.add(res.r1);
    r2.add(res.r2);
    spread.add((clairaut_constant(curve, t) - l0) / (l0 != 0.0 ? std::abs(l0) : 1.0));
  }
  VerificationReport r;
  r.add(prefix + ".el_r1", r1, 1e-6);
  r.add(prefix + ".el_r2", r2, 1e-6);
  r.add(prefix + ".clairaut_spread", spread, 1e-8);
  return r;
}

inline VerificationReport geodesic_suite(std::uint64_t seed, int draws = 20,
                                         std::size_t samples = 1000) {
  Rng rng(seed);
  VerificationReport r;
  const ExprAst cos_profile = parse("cos(u)");

  // Worked example on the time-like-meridian surface of f = cos u.
  const GeodesicClosedForm example(MeridianKind::TimelikeMeridian, cos_profile,
                                   example_geodesic_params(), {0.0, 2.0});
  GeodesicChecks ex;
  check_closed_form(example, {0.0, 2.0}, samples, ex);
  report_closed_form(r, "geodesic.example", ex);

  GeodesicChecks rnd;
  for (int i = 0; i < draws; ++i) {
    const auto kind = i % 2 ? MeridianKind::TimelikeMeridian : MeridianKind::SpacelikeMeridian;
    const GeodesicClosedForm g = random_closed_form(rng, cos_profile, kind);
    check_closed_form(g, g.t_domain(), samples, rnd);
  }
  report_closed_form(r, "geodesic.random", rnd);

  // Meridians u = a t + b are geodesics.
  const ParamCurve meridian = meridian_geodesic(kExampleMeridianA, kExampleMeridianB, 0.0,
                                                MeridianKind::TimelikeMeridian, cos_profile,
                                                {0.0, 2.0});
  r.append(verify_geodesic_curve(MeridianKind::TimelikeMeridian, meridian, {0.0, 2.0}, samples,
                                 "geodesic.meridian"));

  // RK4 against the closed form, and its conservation of u^2 v'.
  // Accuracy is judged at the CLI default step. At 1e-3 the error is already
  // ~1e-14, i.e. rounding, so the order is measured where truncation dominates.
  const OracleComparison cmp = compare_with_integrator(example, {0.5, 1.5}, 1e-3);
  const OracleComparison order = compare_with_integrator(example, {0.5, 1.5}, kHalvingStep);
  ResidualStats coarse, ratio, drift;
  coarse.add(cmp.error_coarse);
  ratio.add(order.error_coarse / order.error_fine);
  drift.add(cmp.drift_per_time);
  r.add("geodesic.rk4.matches_closed_form", coarse, 1e-6);
  r.add("geodesic.rk4.halving_gain", ratio, 12.0, Bound::AtLeast);
  r.add("geodesic.rk4.clairaut_drift_per_time", drift, 1e-8);

  // Loxodromes are not geodesics.
  const Loxodrome lox({LoxodromeKind::SS, std::numbers::pi / 4}, parse("exp(u)"));
  const ParamCurve lc = lox.curve();
  ResidualStats lox_res;
  double worst = 0.0;
  for (double t : linspace({1.1, 1.9}, samples)) {
    const ElResidual e = el_residual(MeridianKind::SpacelikeMeridian, lc, t);
    worst = std::max({worst, std::abs(e.r1), std::abs(e.r2)});
  }
  lox_res.add(worst);
  r.add("geodesic.loxodrome_not_geodesic", lox_res, 0.1, Bound::AtLeast);

  // Parallels: the unit-rate parallel has r1 = u0.
  ResidualStats parallel;
  bool never_geodesic = true;
  for (int i = 0; i < 10; ++i) {
    const double u0 = rng.uniform(0.1, 5.0) * rng.sign();
    const auto cls = classify_parallel(u0);
    never_geodesic = never_geodesic && !cls.geodesic;
    parallel.add(cls.unit_rate_residual.r1 - u0);
    parallel.add(cls.unit_rate_residual.r2);
  }
  r.add_flag("geodesic.parallels_not_geodesic", never_geodesic);
  r.add("geodesic.parallels_residual_equals_u0", parallel, 0.0);

  // Geodesic (u, v) and residuals do not see the profile or the kind.
  bool profile_independent = true;
  bool kind_independent = true;
  const auto base = GeodesicClosedForm(MeridianKind::TimelikeMeridian, parse("exp(u)"),
                                       example_geodesic_params(), {0.0, 2.0});
  for (const char* src : {"cos(u)", "u^2"}) {
    for (auto kind : {MeridianKind::SpacelikeMeridian, MeridianKind::TimelikeMeridian}) {
      const GeodesicClosedForm other(kind, parse(src), example_geodesic_params(), {0.0, 2.0});
      for (double t : linspace({0.0, 2.0}, 101)) {
        const auto a = base.coordinates(t);
        const auto b = other.coordinates(t);
        profile_independent = profile_independent && a == b;
        const ElResidual ea = el_residual(MeridianKind::TimelikeMeridian, base.curve(), t);
        const ElResidual eb = el_residual(kind, other.curve(), t);
        kind_independent = kind_independent && ea.r1 == eb.r1 && ea.r2 == eb.r2;
      }
    }
  }
  r.add_flag("geodesic.profile_independence", profile_independent);
  r.add_flag("geodesic.kind_independence", kind_independent);
  return r;
}

}  // namespace verify

/// Runs a named suite: "all", "core", "loxodrome" or "geodesic".
inline VerificationReport run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed) {
  VerificationReport r;
  const bool all = name == "all";
  if (!all && name != "core" && name != "loxodrome" && name != "geodesic")
    throw ConstructionError("unknown suite '" + name + "'");
  if (all || name == "core") r.append(verify::core_suite(seed));
  if (all || name == "loxodrome") r.append(verify::loxodrome_suite(seed + 10));
  if (all || name == "geodesic") r.append(verify::geodesic_suite(seed + 20));
  return r;
}

}  // namespace pisurf
