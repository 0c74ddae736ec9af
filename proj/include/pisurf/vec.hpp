#pragma once

// Vectors of pseudo-isotropic space: the degenerate scalar product, causal
// classes, norms, hyperbolic angles and the motion group.
//
// The scalar product is branch-defined. On the top view (x, y) it is the
// Lorentzian product x1*x2 - y1*y2; only when both vectors are isotropic,
// i.e. parallel to the z-axis, does the secondary product z1*z2 apply.

#include <cmath>
#include <ostream>
#include <string>

#include "pisurf/error.hpp"

namespace pisurf {

class PiVec3 {
public:
  constexpr PiVec3() = default;
  PiVec3(double x, double y, double z) : x_(x), y_(y), z_(z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
      throw ConstructionError("PiVec3: non-finite component");
  }

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }
  constexpr double z() const noexcept { return z_; }

  /// Exact test on stored values; near-zero components are not snapped.
  constexpr bool is_isotropic() const noexcept { return x_ == 0.0 && y_ == 0.0; }

  friend PiVec3 operator+(const PiVec3& a, const PiVec3& b) {
    return {a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_};
  }
  friend PiVec3 operator-(const PiVec3& a, const PiVec3& b) {
    return {a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_};
  }
  friend PiVec3 operator*(double s, const PiVec3& a) { return {s * a.x_, s * a.y_, s * a.z_}; }
  friend PiVec3 operator*(const PiVec3& a, double s) { return s * a; }

  friend constexpr bool operator==(const PiVec3&, const PiVec3&) = default;

  friend std::ostream& operator<<(std::ostream& os, const PiVec3& p) {
    return os << '(' << p.x_ << ", " << p.y_ << ", " << p.z_ << ')';
  }

private:
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

enum class CausalCharacter { Isotropic, Spacelike, Timelike, Lightlike };

inline std::string to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Isotropic: return "isotropic";
    case CausalCharacter::Spacelike: return "space-like";
    case CausalCharacter::Timelike: return "time-like";
    case CausalCharacter::Lightlike: return "light-like";
  }
  return "?";
}

inline bool is_isotropic(const PiVec3& p) noexcept { return p.is_isotropic(); }

/// Pseudo-isotropic scalar product. If exactly one argument is isotropic the
/// top-view branch applies and the result is 0.
inline double scalar_product(const PiVec3& p, const PiVec3& q) noexcept {
  if (p.is_isotropic() && q.is_isotropic()) return p.z() * q.z();
  return p.x() * q.x() - p.y() * q.y();
}

/// The zero vector is isotropic.
inline CausalCharacter causal_character(const PiVec3& p) noexcept {
  if (p.is_isotropic()) return CausalCharacter::Isotropic;
  const double s = scalar_product(p, p);
  if (s > 0.0) return CausalCharacter::Spacelike;
  if (s < 0.0) return CausalCharacter::Timelike;
  return CausalCharacter::Lightlike;
}

/// sqrt|<p,p>| for non-isotropic p, |z| for isotropic p.
inline double norm(const PiVec3& p) noexcept {
  if (p.is_isotropic()) return std::abs(p.z());
  return std::sqrt(std::abs(scalar_product(p, p)));
}

inline PiVec3 top_view(const PiVec3& p) { return {p.x(), p.y(), 0.0}; }

namespace detail {

/// Ratios this far below 1 are rounding noise at the degenerate boundary.
inline constexpr double kArcoshClamp = 1e-12;

inline void require(const PiVec3& p, CausalCharacter want, const char* op, const char* which) {
  const auto got = causal_character(p);
  if (got != want)
    throw ArgumentCausalMismatch(std::string(op) + ": " + which + " argument is " +
                                 to_string(got) + ", expected " + to_string(want));
}

inline double normalized_product(const PiVec3& p, const PiVec3& q) {
  return std::abs(scalar_product(p, q)) / (norm(p) * norm(q));
}

/// |p1 q2 - p2 q1|, the top-view determinant. For vectors of equal causal
/// character <p,q>^2 - <p,p><q,q> equals its square.
inline double top_view_det(const PiVec3& p, const PiVec3& q) {
  return std::abs(p.x() * q.y() - p.y() * q.x());
}

/// arcosh(r) for r = |<p,q>|/(|p||q|), evaluated as asinh(det/(|p||q|)),
/// which is the same angle but stays well conditioned as r -> 1.
template <class Violation>
double hyperbolic_angle(const PiVec3& p, const PiVec3& q, const char* op) {
  const double r = normalized_product(p, q);
  if (r < 1.0 - kArcoshClamp)
    throw Violation(std::string(op) + ": normalized product " + std::to_string(r) + " < 1");
  if (r < 1.0) return 0.0;
  return std::asinh(top_view_det(p, q) / (norm(p) * norm(q)));
}

}  // namespace detail

/// Hyperbolic angle between two space-like vectors spanning a time-like plane.
inline double angle_ss(const PiVec3& p, const PiVec3& q) {
  detail::require(p, CausalCharacter::Spacelike, "angle_ss", "first");
  detail::require(q, CausalCharacter::Spacelike, "angle_ss", "second");
  return detail::hyperbolic_angle<SpanNotTimelike>(p, q, "angle_ss");
}

/// Angle between a space-like and a time-like vector, in either order.
inline double angle_st(const PiVec3& p, const PiVec3& q) {
  const auto cp = causal_character(p);
  const auto cq = causal_character(q);
  const bool ok = (cp == CausalCharacter::Spacelike && cq == CausalCharacter::Timelike) ||
                  (cp == CausalCharacter::Timelike && cq == CausalCharacter::Spacelike);
  if (!ok)
    throw ArgumentCausalMismatch("angle_st: arguments are " + to_string(cp) + " and " +
                                 to_string(cq) + ", expected one space-like and one time-like");
  return std::asinh(detail::normalized_product(p, q));
}

/// Angle between two time-like vectors. The absolute value of the product is
/// used, so vectors in opposite cones give the same angle as in one cone.
inline double angle_tt(const PiVec3& p, const PiVec3& q) {
  detail::require(p, CausalCharacter::Timelike, "angle_tt", "first");
  detail::require(q, CausalCharacter::Timelike, "angle_tt", "second");
  return detail::hyperbolic_angle<ReverseTriangleViolation>(p, q, "angle_tt");
}

/// Pseudo-isotropic motion: a hyperbolic rotation of the top view by `v`, a
/// shear z += c1*x + c2*y, then a translation by (a, b, c).
struct PiMotion {
  double v = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  static PiMotion rotation(double v) { return PiMotion{v}; }

  PiMotion linear_part() const { return PiMotion{v, c1, c2}; }
};

inline PiVec3 apply_motion(const PiMotion& m, const PiVec3& p) {
  const double ch = std::cosh(m.v);
  const double sh = std::sinh(m.v);
  return {ch * p.x() + sh * p.y() + m.a,
          sh * p.x() + ch * p.y() + m.b,
          m.c1 * p.x() + m.c2 * p.y() + p.z() + m.c};
}

/// Hyperbolic rotation about the z-axis.
inline PiVec3 rotate_z(double v, const PiVec3& p) { return apply_motion(PiMotion::rotation(v), p); }

}  // namespace pisurf
