#pragma once

// Loxodromes: curves on a rotational surface meeting every meridian at a
// constant pseudo-isotropic angle. Four closed-form families, named by
// (curve character, meridian character):
//
//   SS  space-like on R1   u = su t cosh a,  v = sv tanh a ln|t|
//   TS  time-like  on R1   u = su t sinh a,  v = sv coth a ln|t|
//   ST  space-like on R2   u = su t sinh a,  v = sv coth a ln|t|
//   TT  time-like  on R2   u = -t cosh a,    v = sv tanh a ln|t|
//
// All four are unit speed: <g', g'> = +1 for SS/ST and -1 for TS/TT.

#include <cmath>
#include <string>
#include <utility>

#include "pisurf/curve.hpp"
#include "pisurf/vec.hpp"

namespace pisurf {

enum class LoxodromeKind { SS, TS, ST, TT };

inline std::string to_string(LoxodromeKind k) {
  switch (k) {
    case LoxodromeKind::SS: return "ss";
    case LoxodromeKind::TS: return "ts";
    case LoxodromeKind::ST: return "st";
    case LoxodromeKind::TT: return "tt";
  }
  return "?";
}

inline MeridianKind meridian_kind(LoxodromeKind k) {
  return (k == LoxodromeKind::SS || k == LoxodromeKind::TS) ? MeridianKind::SpacelikeMeridian
                                                            : MeridianKind::TimelikeMeridian;
}

/// Causal character of the loxodrome's velocity.
inline CausalCharacter curve_character(LoxodromeKind k) {
  return (k == LoxodromeKind::SS || k == LoxodromeKind::ST) ? CausalCharacter::Spacelike
                                                            : CausalCharacter::Timelike;
}

struct LoxodromeSpec {
  LoxodromeKind kind = LoxodromeKind::SS;
  double angle = 0.0;
  int sign_u = +1;  ///< ignored for TT, whose u-branch is fixed to -1
  int sign_v = +1;
  Interval t_domain{1.0, 2.0};
};

class Loxodrome {
public:
  Loxodrome(const LoxodromeSpec& spec, ExprAst profile)
      : kind_(spec.kind), angle_(spec.angle),
        sign_u_(spec.kind == LoxodromeKind::TT ? -1 : spec.sign_u), sign_v_(spec.sign_v),
        t_domain_(spec.t_domain), surface_(meridian_kind(spec.kind), std::move(profile)) {
    if (!std::isfinite(angle_)) throw ConstructionError("loxodrome: angle must be finite");
    const bool needs_positive = kind_ == LoxodromeKind::TS || kind_ == LoxodromeKind::ST;
    if (needs_positive && !(angle_ > 0.0))
      throw ConstructionError("loxodrome " + to_string(kind_) +
                              ": angle must be > 0 (coth is singular at 0)");
    if (angle_ < 0.0) throw ConstructionError("loxodrome: angle must be >= 0");
    if ((sign_u_ != 1 && sign_u_ != -1) || (sign_v_ != 1 && sign_v_ != -1))
      throw ConstructionError("loxodrome: signs must be +1 or -1");
    if (!(t_domain_.lo < t_domain_.hi) || !std::isfinite(t_domain_.lo) ||
        !std::isfinite(t_domain_.hi))
      throw ConstructionError("loxodrome: t-domain must be a finite interval with lo < hi");
    if (t_domain_.contains_zero())
      throw ConstructionError("loxodrome: t-domain " + to_string(t_domain_) + " contains 0");

    if (kind_ == LoxodromeKind::SS || kind_ == LoxodromeKind::TT) {
      u_rate_ = std::cosh(angle_);
      v_rate_ = std::tanh(angle_);
    } else {
      u_rate_ = std::sinh(angle_);
      v_rate_ = 1.0 / std::tanh(angle_);
    }
  }

  LoxodromeKind kind() const noexcept { return kind_; }
  double angle() const noexcept { return angle_; }
  int sign_u() const noexcept { return sign_u_; }
  int sign_v() const noexcept { return sign_v_; }
  const Interval& t_domain() const noexcept { return t_domain_; }
  const RotationalSurface& surface() const noexcept { return surface_; }

  /// (u(t), v(t)) for double or Jet2 arguments.
  template <class T>
  std::pair<T, T> coordinates_of(const T& t) const {
    using std::abs;
    using std::log;
    return {sign_u_ * u_rate_ * t, sign_v_ * v_rate_ * log(abs(t))};
  }

  std::pair<double, double> coordinates(double t) const {
    require_nonzero(t);
    return coordinates_of(t);
  }

  PiVec3 embed(double t) const {
    const auto [u, v] = coordinates(t);
    return surface_.point(u, v);
  }

  /// Closed-form velocity u' R_u + v' R_v.
  PiVec3 velocity(double t) const {
    const auto [u, v] = coordinates(t);
    const double du = sign_u_ * u_rate_;
    const double dv = sign_v_ * v_rate_ / t;
    const auto [ru, rv] = surface_.partials(u, v);
    return du * ru + dv * rv;
  }

  PiVec3 meridian_tangent(double t) const {
    const auto [u, v] = coordinates(t);
    return surface_.meridian_tangent(u, v);
  }

  /// Angle between the velocity and the meridian through the foot point,
  /// measured with the angle formula matching the pair's causal characters.
  double measure_meridian_angle(double t) const {
    const PiVec3 vel = velocity(t);
    const PiVec3 mer = meridian_tangent(t);
    switch (kind_) {
      case LoxodromeKind::SS: return angle_ss(vel, mer);
      case LoxodromeKind::TT: return angle_tt(vel, mer);
      default: return angle_st(vel, mer);
    }
  }

  /// +1 or -1, the expected value of <g', g'>.
  double speed_sign() const { return curve_character(kind_) == CausalCharacter::Spacelike ? 1.0 : -1.0; }

  ParamCurve curve() const {
    Loxodrome self = *this;
    return ParamCurve::analytic(surface_, t_domain_, [self](const Jet2& t) {
      if (t.value == 0.0) throw DomainError("loxodrome: t = 0");
      const auto [u, v] = self.coordinates_of(t);
      return CurveJet{u, v};
    });
  }

private:
  static void require_nonzero(double t) {
    if (t == 0.0) throw DomainError("loxodrome: ln|t| is singular at t = 0");
  }

  LoxodromeKind kind_;
  double angle_;
  int sign_u_;
  int sign_v_;
  Interval t_domain_;
  RotationalSurface surface_;
  double u_rate_ = 0.0;
  double v_rate_ = 0.0;
};

}  // namespace pisurf
