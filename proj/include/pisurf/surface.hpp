#pragma once

// Rotational surfaces of pseudo-isotropic space: the orbit of a profile
// curve under hyperbolic rotation about the z-axis.
//
//   space-like meridian  R1(u, v) = (u cosh v, u sinh v, f(u))
//   time-like meridian   R2(u, v) = (u sinh v, u cosh v, f(u))

#include <cmath>
#include <string>
#include <utility>

#include "pisurf/expr.hpp"
#include "pisurf/vec.hpp"

namespace pisurf {

enum class MeridianKind { SpacelikeMeridian, TimelikeMeridian };

inline std::string to_string(MeridianKind k) {
  return k == MeridianKind::SpacelikeMeridian ? "spacelike-meridian" : "timelike-meridian";
}

/// Coefficients of ds^2 = E du^2 + 2F du dv + G dv^2.
struct FundamentalForm {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;

  friend bool operator==(const FundamentalForm&, const FundamentalForm&) = default;
};

/// The profile never enters the induced metric.
inline FundamentalForm fundamental_form(MeridianKind kind, double u) {
  if (kind == MeridianKind::SpacelikeMeridian) return {1.0, 0.0, -u * u};
  return {-1.0, 0.0, u * u};
}

/// dG/du; E and F are constant.
inline double metric_g_derivative(MeridianKind kind, double u) {
  return kind == MeridianKind::SpacelikeMeridian ? -2.0 * u : 2.0 * u;
}

struct SurfacePartials {
  PiVec3 du;
  PiVec3 dv;
};

class RotationalSurface {
public:
  RotationalSurface(MeridianKind kind, ExprAst profile)
      : kind_(kind), profile_(std::move(profile)) {
    if (profile_.empty()) throw ConstructionError("RotationalSurface: empty profile");
  }

  MeridianKind kind() const noexcept { return kind_; }
  const ExprAst& profile() const noexcept { return profile_; }

  PiVec3 point(double u, double v) const {
    const double f = evaluate(profile_, u);
    if (kind_ == MeridianKind::SpacelikeMeridian)
      return {u * std::cosh(v), u * std::sinh(v), f};
    return {u * std::sinh(v), u * std::cosh(v), f};
  }

  /// The profile curve itself, i.e. the v = 0 meridian.
  PiVec3 profile_point(double u) const { return point(u, 0.0); }

  SurfacePartials partials(double u, double v) const {
    const double df = eval_jet2(profile_, u).d1;
    const double ch = std::cosh(v);
    const double sh = std::sinh(v);
    if (kind_ == MeridianKind::SpacelikeMeridian)
      return {{ch, sh, df}, {u * sh, u * ch, 0.0}};
    return {{sh, ch, df}, {u * ch, u * sh, 0.0}};
  }

  /// Tangent of the meridian v = const at (u, v); space-like with square +1
  /// on R1, time-like with square -1 on R2.
  PiVec3 meridian_tangent(double u, double v) const { return partials(u, v).du; }

  FundamentalForm fundamental_form(double u) const { return pisurf::fundamental_form(kind_, u); }

  /// First fundamental form recomputed from the embedding's partials.
  FundamentalForm induced_form(double u, double v) const {
    const auto [ru, rv] = partials(u, v);
    return {scalar_product(ru, ru), scalar_product(ru, rv), scalar_product(rv, rv)};
  }

private:
  MeridianKind kind_;
  ExprAst profile_;
};

}  // namespace pisurf
