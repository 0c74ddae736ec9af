#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pisurf/jet.hpp"
#include "pisurf/surface.hpp"

namespace pisurf {

/// Closed parameter interval [lo, hi]. Endpoints may be infinite.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double t) const noexcept { return t >= lo && t <= hi; }
  bool contains_zero() const noexcept { return contains(0.0); }
  double length() const noexcept { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::string to_string(const Interval& i) {
  return "[" + std::to_string(i.lo) + ", " + std::to_string(i.hi) + "]";
}

/// n uniformly spaced points including both endpoints; n = 1 gives {lo}.
inline std::vector<double> linspace(const Interval& range, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(range.lo);
    return out;
  }
  const double h = range.length() / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i + 1 == n ? range.hi : range.lo + h * static_cast<double>(i));
  return out;
}

/// (u, v) with their first and second t-derivatives.
struct CurveJet {
  Jet2 u;
  Jet2 v;
};

/// A curve t -> (u(t), v(t)) in the parameter domain of a rotational
/// surface. Analytic curves are evaluated on Jet2 arguments and give exact
/// derivatives; sampled curves only return values and are differentiated
/// with fourth-order central stencils.
class ParamCurve {
public:
  using JetFn = std::function<CurveJet(const Jet2& t)>;
  using ValueFn = std::function<std::pair<double, double>(double t)>;

  static constexpr double kStencilStep = 1e-4;

  static ParamCurve analytic(RotationalSurface surface, Interval domain, JetFn fn) {
    return ParamCurve(std::move(surface), domain, std::move(fn), nullptr);
  }
  static ParamCurve sampled(RotationalSurface surface, Interval domain, ValueFn fn) {
    return ParamCurve(std::move(surface), domain, nullptr, std::move(fn));
  }

  bool is_analytic() const noexcept { return static_cast<bool>(jet_fn_); }
  const RotationalSurface& surface() const noexcept { return surface_; }
  const Interval& domain() const noexcept { return domain_; }

  std::pair<double, double> coordinates(double t) const {
    require_in_domain(t);
    if (jet_fn_) {
      const CurveJet j = jet_fn_(Jet2::constant(t));
      return {j.u.value, j.v.value};
    }
    return value_fn_(t);
  }

  CurveJet jet(double t) const {
    require_in_domain(t);
    if (jet_fn_) return jet_fn_(Jet2::variable(t));
    const double h = kStencilStep;
    if (!domain_.contains(t - 2.0 * h) || !domain_.contains(t + 2.0 * h))
      throw DomainError("ParamCurve: stencil at t = " + std::to_string(t) +
                        " leaves the domain " + to_string(domain_));
    const auto m2 = value_fn_(t - 2.0 * h);
    const auto m1 = value_fn_(t - h);
    const auto c0 = value_fn_(t);
    const auto p1 = value_fn_(t + h);
    const auto p2 = value_fn_(t + 2.0 * h);
    const auto d = [h](double fm2, double fm1, double f0, double fp1, double fp2) {
      return Jet2{f0, (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h),
                  (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h)};
    };
    return {d(m2.first, m1.first, c0.first, p1.first, p2.first),
            d(m2.second, m1.second, c0.second, p1.second, p2.second)};
  }

  PiVec3 embed(double t) const {
    const auto [u, v] = coordinates(t);
    return surface_.point(u, v);
  }

private:
  ParamCurve(RotationalSurface surface, Interval domain, JetFn jet_fn, ValueFn value_fn)
      : surface_(std::move(surface)), domain_(domain), jet_fn_(std::move(jet_fn)),
        value_fn_(std::move(value_fn)) {}

  void require_in_domain(double t) const {
    if (!domain_.contains(t))
      throw DomainError("ParamCurve: t = " + std::to_string(t) + " outside " + to_string(domain_));
  }

  RotationalSurface surface_;
  Interval domain_;
  JetFn jet_fn_;
  ValueFn value_fn_;
};

}  // namespace pisurf
