#pragma once

// The four CLI subcommands as plain functions: options in, tables and
// reports out. The executable only parses flags and writes the results.

#include <cstdint>
#include <optional>
#include <string>

#include "pisurf/verify.hpp"

namespace pisurf::cli {

enum class OutputFormat { Csv, Json };

enum ExitCode : int { kOk = 0, kConstructionError = 2, kVerificationFailure = 3 };

inline std::string render(const SampleTable& table, OutputFormat f) {
  return f == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

inline std::string render(const VerificationReport& r, OutputFormat f) {
  return f == OutputFormat::Csv ? r.to_csv() : r.to_json();
}

struct CurveResult {
  SampleTable table;
  std::optional<VerificationReport> report;

  int exit_code() const {
    return report && !report->passed() ? kVerificationFailure : kOk;
  }
};

/// Parses a numeric flag that may be a constant expression such as "pi/4".
inline double parse_constant(const std::string& text) {
  const ExprAst e = parse(text);
  if (has_variable(e)) throw ConstructionError("'" + text + "' must not depend on u");
  return evaluate(e, 0.0);
}

// -------------------------------------------------------------- surface

struct SurfaceOptions {
  MeridianKind kind = MeridianKind::SpacelikeMeridian;
  std::string profile = "exp(u)";
  Interval u_range{1.0, 2.0};
  Interval v_range{-1.0, 1.0};
  std::size_t nu = 50;
  std::size_t nv = 50;
};

inline SampleTable cmd_surface(const SurfaceOptions& o) {
  const RotationalSurface s(o.kind, parse(o.profile));
  SampleTable table = sample_surface(s, o.u_range, o.v_range, o.nu, o.nv);
  table.meta["tool_version"] = kToolVersion;
  table.meta["command"] = "surface";
  table.meta["kind"] = to_string(o.kind);
  table.meta["profile"] = o.profile;
  table.meta["u_range"] = {o.u_range.lo, o.u_range.hi};
  table.meta["v_range"] = {o.v_range.lo, o.v_range.hi};
  table.meta["grid"] = {o.nu, o.nv};
  table.meta["t_column"] = "flat sample index (row-major over u, then v)";
  return table;
}

// ------------------------------------------------------------ loxodrome

struct LoxodromeOptions {
  LoxodromeSpec spec;
  std::string profile = "exp(u)";
  std::size_t samples = 500;
  bool verify = false;
};

inline CurveResult cmd_loxodrome(const LoxodromeOptions& o) {
  const Loxodrome l(o.spec, parse(o.profile));
  CurveResult out;
  out.table = sample_curve(l.curve(), l.t_domain(), o.samples);
  auto& m = out.table.meta;
  m["tool_version"] = kToolVersion;
  m["command"] = "loxodrome";
  m["kind"] = to_string(l.kind());
  m["surface"] = to_string(l.surface().kind());
  m["angle"] = l.angle();
  m["sign_u"] = l.sign_u();
  m["sign_v"] = l.sign_v();
  m["profile"] = o.profile;
  m["t_range"] = {l.t_domain().lo, l.t_domain().hi};
  m["samples"] = o.samples;
  if (o.verify) out.report = verify::verify_loxodrome(l, std::max<std::size_t>(o.samples, 2));
  return out;
}

// ------------------------------------------------------------- geodesic

enum class GeodesicMode { ClosedForm, Meridian, Parallel, Integrate };

inline std::string to_string(GeodesicMode m) {
  switch (m) {
    case GeodesicMode::ClosedForm: return "closed-form";
    case GeodesicMode::Meridian: return "meridian";
    case GeodesicMode::Parallel: return "parallel";
    case GeodesicMode::Integrate: return "integrate";
  }
  return "?";
}

struct GeodesicOptions {
  GeodesicMode mode = GeodesicMode::ClosedForm;
  MeridianKind kind = MeridianKind::TimelikeMeridian;
  std::string profile = "cos(u)";
  GeodesicParams params = verify::example_geodesic_params();
  double a = verify::kExampleMeridianA;
  double b = verify::kExampleMeridianB;
  double v0 = 0.0;
  double u0 = 1.0;
  /// Integrate mode: explicit initial state; when absent the state is read
  /// off the closed form (params) at t_range.lo.
  std::optional<GeodesicState> state;
  double step = 1e-3;
  Interval t_range{0.0, 2.0};
  std::size_t samples = 500;
  bool verify = false;
};

inline CurveResult cmd_geodesic(const GeodesicOptions& o) {
  CurveResult out;
  auto& m = out.table.meta;
  m["tool_version"] = kToolVersion;
  m["command"] = "geodesic";
  m["mode"] = to_string(o.mode);
  m["kind"] = to_string(o.kind);
  m["profile"] = o.profile;
  m["t_range"] = {o.t_range.lo, o.t_range.hi};
  m["samples"] = o.samples;
  const ExprAst profile = parse(o.profile);
  const auto& p = o.params;

  switch (o.mode) {
    case GeodesicMode::ClosedForm: {
      const GeodesicClosedForm g(o.kind, profile, p, o.t_range);
      m["c"] = p.c;
      m["c1"] = p.c1;
      m["c2"] = p.c2;
      m["c5"] = p.c5;
      m["sign_u"] = p.sign_u;
      SampleTable t = sample_curve(g.curve(), o.t_range, o.samples);
      t.meta = m;
      out.table = std::move(t);
      if (o.verify) {
        verify::GeodesicChecks c;
        check_closed_form(g, o.t_range, std::max<std::size_t>(o.samples, 2), c);
        VerificationReport r;
        verify::report_closed_form(r, "geodesic.closed_form", c);
        out.report = r;
      }
      return out;
    }
    case GeodesicMode::Meridian:
    case GeodesicMode::Parallel: {
      const bool meridian = o.mode == GeodesicMode::Meridian;
      const ParamCurve curve = meridian ? meridian_geodesic(o.a, o.b, o.v0, o.kind, profile, o.t_range)
                                        : parallel_curve(o.u0, o.kind, profile, o.t_range);
      if (meridian) {
        m["a"] = o.a;
        m["b"] = o.b;
        m["v0"] = o.v0;
      } else {
        m["u0"] = o.u0;
      }
      SampleTable t = sample_curve(curve, o.t_range, o.samples);
      t.meta = m;
      out.table = std::move(t);
      if (o.verify)
        out.report = verify::verify_geodesic_curve(o.kind, curve, o.t_range,
                                                   std::max<std::size_t>(o.samples, 2),
                                                   "geodesic." + to_string(o.mode));
      return out;
    }
    case GeodesicMode::Integrate: {
      const RotationalSurface surface(o.kind, profile);
      std::optional<GeodesicClosedForm> reference;
      GeodesicState s0;
      if (o.state) {
        s0 = *o.state;
      } else {
        reference.emplace(o.kind, profile, p, o.t_range);
        s0 = state_of(reference->curve(), o.t_range.lo);
      }
      const IntegratedGeodesic ig = integrate(surface, s0, o.t_range, o.step);
      m["step"] = o.step;
      m["initial_state"] = {s0.u, s0.v, s0.du, s0.dv};
      m["seeded_from_closed_form"] = !o.state.has_value();
      SampleTable t = sample_curve(ig.curve, o.t_range, o.samples);
      t.meta = m;
      out.table = std::move(t);
      if (o.verify) {
        VerificationReport r;
        ResidualStats drift;
        const auto& traj = *ig.trajectory;
        const double l0 = traj.clairaut(0);
        for (std::size_t i = 0; i < traj.states.size(); ++i)
          drift.add((traj.clairaut(i) - l0) / (l0 != 0.0 ? std::abs(l0) : 1.0) /
                    o.t_range.length());
        r.add("geodesic.integrate.clairaut_drift_per_time", drift, 1e-8);
        if (reference) {
          ResidualStats diff;
          for (std::size_t i = 0; i < traj.states.size(); ++i) {
            const auto [u, v] = reference->coordinates(traj.t[i]);
            diff.add(std::max(std::abs(traj.states[i].u - u), std::abs(traj.states[i].v - v)));
          }
          r.add("geodesic.integrate.matches_closed_form", diff, 1e-6);
        }
        out.report = r;
      }
      return out;
    }
  }
  return out;
}

// --------------------------------------------------------------- verify

inline VerificationReport cmd_verify(const std::string& suite, std::uint64_t seed = kDefaultSeed) {
  return run_suite(suite, seed);
}

}  // namespace pisurf::cli
