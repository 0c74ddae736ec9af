#pragma once

// Second-order forward-mode dual numbers. A Jet2 carries (f, f', f'') of a
// function of one variable at a point; arithmetic and the elementary
// functions propagate all three through the product and chain rules.

#include <cmath>
#include <ostream>

namespace pisurf {

struct Jet2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  constexpr Jet2() = default;
  constexpr Jet2(double v, double first = 0.0, double second = 0.0)
      : value(v), d1(first), d2(second) {}

  /// The independent variable at x.
  static constexpr Jet2 variable(double x) { return {x, 1.0, 0.0}; }
  static constexpr Jet2 constant(double x) { return {x, 0.0, 0.0}; }

  bool finite() const {
    return std::isfinite(value) && std::isfinite(d1) && std::isfinite(d2);
  }

  friend std::ostream& operator<<(std::ostream& os, const Jet2& j) {
    return os << '[' << j.value << ", " << j.d1 << ", " << j.d2 << ']';
  }
};

/// g(a) given g(a.value), g'(a.value), g''(a.value).
constexpr Jet2 chain(const Jet2& a, double g0, double g1, double g2) {
  return {g0, g1 * a.d1, g2 * a.d1 * a.d1 + g1 * a.d2};
}

constexpr Jet2 operator+(const Jet2& a) { return a; }
constexpr Jet2 operator-(const Jet2& a) { return {-a.value, -a.d1, -a.d2}; }

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
}
constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
}
constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
}
constexpr Jet2 operator/(const Jet2& a, const Jet2& b) {
  // a * (1/b), with (1/b)' = -b'/b^2 and (1/b)'' = 2b'^2/b^3 - b''/b^2.
  const double inv = 1.0 / b.value;
  const Jet2 recip = chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
  return a * recip;
}

constexpr Jet2 operator+(const Jet2& a, double s) { return {a.value + s, a.d1, a.d2}; }
constexpr Jet2 operator+(double s, const Jet2& a) { return a + s; }
constexpr Jet2 operator-(const Jet2& a, double s) { return {a.value - s, a.d1, a.d2}; }
constexpr Jet2 operator-(double s, const Jet2& a) { return {s - a.value, -a.d1, -a.d2}; }
constexpr Jet2 operator*(const Jet2& a, double s) { return {a.value * s, a.d1 * s, a.d2 * s}; }
constexpr Jet2 operator*(double s, const Jet2& a) { return a * s; }
constexpr Jet2 operator/(const Jet2& a, double s) { return {a.value / s, a.d1 / s, a.d2 / s}; }
constexpr Jet2 operator/(double s, const Jet2& a) { return Jet2::constant(s) / a; }

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value);
  return chain(a, s, std::cos(a.value), -s);
}
inline Jet2 cos(const Jet2& a) {
  const double c = std::cos(a.value);
  return chain(a, c, -std::sin(a.value), -c);
}
inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value);
  return chain(a, e, e, e);
}
inline Jet2 log(const Jet2& a) {
  const double inv = 1.0 / a.value;
  return chain(a, std::log(a.value), inv, -inv * inv);
}
inline Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.value);
  return chain(a, s, std::cosh(a.value), s);
}
inline Jet2 cosh(const Jet2& a) {
  const double c = std::cosh(a.value);
  return chain(a, c, std::sinh(a.value), c);
}
inline Jet2 tanh(const Jet2& a) {
  const double t = std::tanh(a.value);
  const double sech2 = 1.0 - t * t;
  return chain(a, t, sech2, -2.0 * t * sech2);
}
inline Jet2 sqrt(const Jet2& a) {
  const double r = std::sqrt(a.value);
  return chain(a, r, 0.5 / r, -0.25 / (r * a.value));
}
/// d|x|/dx is taken as sign(x), with sign(0) = 0.
inline Jet2 abs(const Jet2& a) {
  const double s = a.value > 0.0 ? 1.0 : (a.value < 0.0 ? -1.0 : 0.0);
  return {std::abs(a.value), s * a.d1, s * a.d2};
}
/// a^k for a constant exponent k.
inline Jet2 pow(const Jet2& a, double k) {
  if (k == 0.0) return Jet2::constant(1.0);
  const double x = a.value;
  const double g1 = k == 1.0 ? 1.0 : k * std::pow(x, k - 1.0);
  const double g2 = (k == 1.0) ? 0.0 : (k == 2.0 ? 2.0 : k * (k - 1.0) * std::pow(x, k - 2.0));
  return chain(a, std::pow(x, k), g1, g2);
}

}  // namespace pisurf
