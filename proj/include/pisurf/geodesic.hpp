#pragma once

// Geodesics of rotational surfaces. Both meridian kinds share the
// Euler-Lagrange system
//
//   u'' + u v'^2 = 0,     d/dt (u^2 v') = 0,
//
// whose general solution (c != 0, c1 > 0) is
//
//   u(t) = sign_u sqrt((c1 t + c3)(c1 t + c4) / c1)
//   v(t) = 1/2 ln|(c1 t + c3) / (c1 t + c4)| + c5,    c3 = c2 - c, c4 = c2 + c,
//
// with u^2 v' = c along it.

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pisurf/curve.hpp"

namespace pisurf {

struct ElResidual {
  double r1 = 0.0;  ///< u'' + u v'^2
  double r2 = 0.0;  ///< d/dt (u^2 v')
};

/// Residual of the geodesic equations, written generically from the
/// coefficients of ds^2 = E du^2 + G(u) dv^2 (E constant) so that each
/// meridian kind goes through its own metric; both reduce to the same
/// normalized pair.
inline ElResidual el_residual(MeridianKind kind, const CurveJet& j) {
  const double u = j.u.value;
  const double du = j.u.d1;
  const double ddu = j.u.d2;
  const double dv = j.v.d1;
  const double ddv = j.v.d2;
  const FundamentalForm ff = fundamental_form(kind, u);
  const double g_u = metric_g_derivative(kind, u);
  return {ddu - g_u * dv * dv / (2.0 * ff.E), (g_u * du * dv + ff.G * ddv) / (-ff.E)};
}

inline ElResidual el_residual(MeridianKind kind, const ParamCurve& curve, double t) {
  return el_residual(kind, curve.jet(t));
}

/// u^2 v', the first integral coming from the rotational symmetry.
inline double clairaut_constant(const ParamCurve& curve, double t) {
  const CurveJet j = curve.jet(t);
  return j.u.value * j.u.value * j.v.d1;
}

struct GeodesicParams {
  double c = 1.0;
  double c1 = 1.0;
  double c2 = 0.0;
  double c5 = 0.0;
  int sign_u = -1;  ///< branch of u: -1 or +1
};

class GeodesicClosedForm {
public:
  static constexpr double kGuard = 1e-6;

  GeodesicClosedForm(MeridianKind kind, ExprAst profile, const GeodesicParams& p,
                     Interval t_domain)
      : GeodesicClosedForm(kind, std::move(profile), p, t_domain, true) {}

  /// Same formula without the c1 > 0 restriction, for exploring the c1 < 0
  /// regime; sqrt(|c1|) replaces sqrt(c1).
  static GeodesicClosedForm probe(MeridianKind kind, ExprAst profile, const GeodesicParams& p,
                                  Interval t_domain) {
    return GeodesicClosedForm(kind, std::move(profile), p, t_domain, false);
  }

  /// Maximal interval around `seed` on which (c1 t + c2)^2 > c^2, shrunk by
  /// the guard band at finite ends. Throws if `seed` itself is outside.
  static Interval valid_interval(const GeodesicParams& p, double seed, double guard = kGuard) {
    if (p.c1 == 0.0) throw ConstructionError("geodesic: c1 must be nonzero");
    const double w = p.c1 * seed + p.c2;
    const double ac = std::abs(p.c);
    if (!(w * w > p.c * p.c))
      throw ConstructionError("geodesic: seed t = " + std::to_string(seed) +
                              " is outside the domain (c1 t + c2)^2 > c^2");
    // Boundary where c1 t + c2 = +-|c|, on the same side as the seed.
    const double edge = ((w > 0.0 ? ac : -ac) - p.c2) / p.c1;
    const double inf = std::numeric_limits<double>::infinity();
    const bool grows_away = (w > 0.0) == (p.c1 > 0.0);  // |w| increases with t
    return grows_away ? Interval{edge + guard, inf} : Interval{-inf, edge - guard};
  }

  MeridianKind kind() const noexcept { return surface_.kind(); }
  const RotationalSurface& surface() const noexcept { return surface_; }
  const GeodesicParams& params() const noexcept { return p_; }
  const Interval& t_domain() const noexcept { return t_domain_; }
  double c3() const noexcept { return p_.c2 - p_.c; }
  double c4() const noexcept { return p_.c2 + p_.c; }

  template <class T>
  std::pair<T, T> coordinates_of(const T& t) const {
    using std::abs;
    using std::log;
    using std::sqrt;
    const T a = p_.c1 * t + c3();
    const T b = p_.c1 * t + c4();
    const T u = (p_.sign_u / std::sqrt(std::abs(p_.c1))) * sqrt(a * b);
    const T v = 0.5 * log(abs(a / b)) + p_.c5;
    return {u, v};
  }

  std::pair<double, double> coordinates(double t) const {
    require_valid(t);
    return coordinates_of(t);
  }

  PiVec3 embed(double t) const {
    const auto [u, v] = coordinates(t);
    return surface_.point(u, v);
  }

  ParamCurve curve() const {
    GeodesicClosedForm self = *this;
    return ParamCurve::analytic(surface_, t_domain_, [self](const Jet2& t) {
      self.require_valid(t.value);
      const auto [u, v] = self.coordinates_of(t);
      return CurveJet{u, v};
    });
  }

private:
  GeodesicClosedForm(MeridianKind kind, ExprAst profile, const GeodesicParams& p,
                     Interval t_domain, bool strict)
      : surface_(kind, std::move(profile)), p_(p), t_domain_(t_domain) {
    if (!std::isfinite(p.c) || !std::isfinite(p.c1) || !std::isfinite(p.c2) ||
        !std::isfinite(p.c5))
      throw ConstructionError("geodesic: constants must be finite");
    if (p.c == 0.0) throw ConstructionError("geodesic: c must be nonzero");
    if (strict && !(p.c1 > 0.0)) throw ConstructionError("geodesic: c1 must be > 0");
    if (p.c1 == 0.0) throw ConstructionError("geodesic: c1 must be nonzero");
    if (p.sign_u != 1 && p.sign_u != -1) throw ConstructionError("geodesic: sign_u must be +-1");
    if (!(t_domain.lo < t_domain.hi))
      throw ConstructionError("geodesic: t-domain must satisfy lo < hi");
    // |c1 t + c2| <= |c| exactly on [bad_lo, bad_hi]; the domain must avoid it.
    const double e1 = (-std::abs(p.c) - p.c2) / p.c1;
    const double e2 = (std::abs(p.c) - p.c2) / p.c1;
    const double bad_lo = std::min(e1, e2);
    const double bad_hi = std::max(e1, e2);
    if (!(t_domain.hi < bad_lo || t_domain.lo > bad_hi))
      throw ConstructionError("geodesic: (c1 t + c2)^2 > c^2 fails on " + to_string(t_domain));
  }

  void require_valid(double t) const {
    if (!t_domain_.contains(t))
      throw DomainError("geodesic: t = " + std::to_string(t) + " outside " + to_string(t_domain_));
    const double a = p_.c1 * t + c3();
    const double b = p_.c1 * t + c4();
    if (b == 0.0 || !(a * b > 0.0))
      throw DomainError("geodesic: (c1 t + c2)^2 <= c^2 at t = " + std::to_string(t));
  }

  RotationalSurface surface_;
  GeodesicParams p_;
  Interval t_domain_;
};

/// Meridian u = a t + b, v = v0. Satisfies the geodesic equations identically.
inline ParamCurve meridian_geodesic(double a, double b, double v0, MeridianKind kind,
                                    ExprAst profile, Interval t_domain) {
  if (a == 0.0 || !std::isfinite(a)) throw ConstructionError("meridian geodesic: a must be nonzero");
  if (!std::isfinite(b) || !std::isfinite(v0))
    throw ConstructionError("meridian geodesic: b and v0 must be finite");
  return ParamCurve::analytic(RotationalSurface(kind, std::move(profile)), t_domain,
                              [a, b, v0](const Jet2& t) {
                                return CurveJet{a * t + b, Jet2::constant(v0)};
                              });
}

/// Unit-rate parallel u = u0, v = t.
inline ParamCurve parallel_curve(double u0, MeridianKind kind, ExprAst profile, Interval t_domain) {
  return ParamCurve::analytic(RotationalSurface(kind, std::move(profile)), t_domain,
                              [u0](const Jet2& t) { return CurveJet{Jet2::constant(u0), t}; });
}

struct ParallelClassification {
  bool geodesic = false;
  std::string explanation;
  ElResidual unit_rate_residual;  ///< residual of u = u0, v = t
};

/// A parallel u = u0 solves the geodesic equations only if v' vanishes,
/// i.e. the "curve" is a single point. No non-degenerate parallel qualifies.
inline ParallelClassification classify_parallel(double u0) {
  if (u0 == 0.0 || !std::isfinite(u0))
    throw ConstructionError("classify_parallel: u0 must be finite and nonzero");
  const CurveJet j{Jet2::constant(u0), Jet2::variable(0.0)};
  ParallelClassification out;
  out.geodesic = false;
  out.unit_rate_residual = el_residual(MeridianKind::SpacelikeMeridian, j);
  out.explanation =
      "NotGeodesic: on u = " + std::to_string(u0) +
      " the first geodesic equation reduces to u0 v'^2 = 0, so v' must vanish identically and "
      "the parallel degenerates to a point. Read pointwise (v'(t0) = 0 at a single t0), the "
      "condition only makes the equations hold at that instant.";
  return out;
}

/// Phase-space point of the geodesic system.
struct GeodesicState {
  double u = 0.0;
  double v = 0.0;
  double du = 0.0;
  double dv = 0.0;
};

inline GeodesicState state_of(const ParamCurve& curve, double t) {
  const CurveJet j = curve.jet(t);
  return {j.u.value, j.v.value, j.u.d1, j.v.d1};
}

struct Trajectory {
  std::vector<double> t;
  std::vector<GeodesicState> states;

  double clairaut(std::size_t i) const { return states[i].u * states[i].u * states[i].dv; }
};

namespace detail {

inline GeodesicState geodesic_rhs(const GeodesicState& s) {
  return {s.du, s.dv, -s.u * s.dv * s.dv, -2.0 * s.du * s.dv / s.u};
}

inline GeodesicState axpy(const GeodesicState& s, double h, const GeodesicState& k) {
  return {s.u + h * k.u, s.v + h * k.v, s.du + h * k.du, s.dv + h * k.dv};
}

}  // namespace detail

/// Fixed-step classical RK4 over `span`. The step is shrunk to divide the
/// span evenly. Throws AxisCrossing when |u| < 1e-9 at any stage and
/// StepTooLarge when u^2 v' drifts by more than 1e-6 relative.
inline Trajectory integrate_states(const GeodesicState& s0, Interval span, double step) {
  static constexpr double kAxis = 1e-9;
  static constexpr double kDrift = 1e-6;
  if (!(step > 0.0)) throw ConstructionError("integrate: step must be > 0");
  if (!(span.lo < span.hi) || !std::isfinite(span.lo) || !std::isfinite(span.hi))
    throw ConstructionError("integrate: span must be finite with lo < hi");
  if (std::abs(s0.u) < kAxis) throw AxisCrossing("integrate: initial state on the axis u = 0");

  const auto n = static_cast<std::size_t>(std::ceil(span.length() / step - 1e-9));
  const double h = span.length() / static_cast<double>(n);

  Trajectory out;
  out.t.reserve(n + 1);
  out.states.reserve(n + 1);
  out.t.push_back(span.lo);
  out.states.push_back(s0);

  const double l0 = s0.u * s0.u * s0.dv;
  const auto check_axis = [&](const GeodesicState& s, double t) {
    if (!(std::abs(s.u) >= kAxis))
      throw AxisCrossing("integrate: |u| < 1e-9 near t = " + std::to_string(t));
  };

  GeodesicState s = s0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double t0 = span.lo + h * static_cast<double>(i - 1);
    const GeodesicState k1 = detail::geodesic_rhs(s);
    const GeodesicState y2 = detail::axpy(s, 0.5 * h, k1);
    check_axis(y2, t0);
    const GeodesicState k2 = detail::geodesic_rhs(y2);
    const GeodesicState y3 = detail::axpy(s, 0.5 * h, k2);
    check_axis(y3, t0);
    const GeodesicState k3 = detail::geodesic_rhs(y3);
    const GeodesicState y4 = detail::axpy(s, h, k3);
    check_axis(y4, t0);
    const GeodesicState k4 = detail::geodesic_rhs(y4);
    s = {s.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
         s.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v),
         s.du + h / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du),
         s.dv + h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv)};
    const double t1 = i == n ? span.hi : span.lo + h * static_cast<double>(i);
    check_axis(s, t1);
    const double l = s.u * s.u * s.dv;
    const double scale = l0 != 0.0 ? std::abs(l0) : 1.0;
    if (!(std::abs(l - l0) <= kDrift * scale))
      throw StepTooLarge("integrate: u^2 v' drifted by " + std::to_string(std::abs(l - l0) / scale) +
                         " relative at t = " + std::to_string(t1) + "; reduce the step");
    out.t.push_back(t1);
    out.states.push_back(s);
  }
  return out;
}

/// Cubic Hermite interpolation of (u, v) between RK4 nodes, using the
/// stored velocities. C^1 across nodes.
inline ParamCurve trajectory_curve(const RotationalSurface& surface,
                                   std::shared_ptr<const Trajectory> traj) {
  const Interval domain{traj->t.front(), traj->t.back()};
  return ParamCurve::sampled(surface, domain, [traj](double t) -> std::pair<double, double> {
    const auto& ts = traj->t;
    const std::size_t n = ts.size();
    if (n == 1) return {traj->states[0].u, traj->states[0].v};
    const double h = (ts.back() - ts.front()) / static_cast<double>(n - 1);
    auto i = static_cast<std::size_t>(std::clamp((t - ts.front()) / h, 0.0,
                                                 static_cast<double>(n - 2)));
    i = std::min(i, n - 2);
    const double dt = ts[i + 1] - ts[i];
    const double s = (t - ts[i]) / dt;
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s * s * (3.0 - 2.0 * s);
    const double h11 = s * s * (s - 1.0);
    const auto& a = traj->states[i];
    const auto& b = traj->states[i + 1];
    return {h00 * a.u + h10 * dt * a.du + h01 * b.u + h11 * dt * b.du,
            h00 * a.v + h10 * dt * a.dv + h01 * b.v + h11 * dt * b.dv};
  });
}

struct IntegratedGeodesic {
  std::shared_ptr<const Trajectory> trajectory;
  ParamCurve curve;
};

/// Integrates the geodesic system on `surface` from `s0` at t = span.lo.
inline IntegratedGeodesic integrate(const RotationalSurface& surface, const GeodesicState& s0,
                                    Interval span, double step) {
  auto traj = std::make_shared<const Trajectory>(integrate_states(s0, span, step));
  return {traj, trajectory_curve(surface, traj)};
}

}  // namespace pisurf
