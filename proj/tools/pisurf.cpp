// pisurf: sample rotational surfaces, loxodromes and geodesics of
// pseudo-isotropic space, and run the verification suites.
//
// Exit codes: 0 success, 2 construction or parse error, 3 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "pisurf/pisurf.hpp"

namespace {

using namespace pisurf;
using namespace pisurf::cli;

struct Common {
  std::string format = "csv";
  std::string out;
  std::string report;
  std::uint64_t seed = kDefaultSeed;

  OutputFormat output_format() const {
    return format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConstructionError("cannot open '" + path + "' for writing");
  f << text;
}

int finish_curve(const CurveResult& r, const Common& c) {
  emit(render(r.table, c.output_format()), c.out);
  if (r.report) {
    std::cerr << r.report->to_text();
    if (!c.report.empty()) emit(render(*r.report, c.output_format()), c.report);
  }
  return r.exit_code();
}

Interval to_interval(const std::pair<double, double>& p) { return {p.first, p.second}; }

const std::map<std::string, MeridianKind> kMeridianKinds{
    {"spacelike-meridian", MeridianKind::SpacelikeMeridian},
    {"timelike-meridian", MeridianKind::TimelikeMeridian},
    {"r1", MeridianKind::SpacelikeMeridian},
    {"r2", MeridianKind::TimelikeMeridian},
};

const std::map<std::string, LoxodromeKind> kLoxodromeKinds{
    {"ss", LoxodromeKind::SS}, {"ts", LoxodromeKind::TS},
    {"st", LoxodromeKind::ST}, {"tt", LoxodromeKind::TT},
};

const std::map<std::string, GeodesicMode> kGeodesicModes{
    {"closed-form", GeodesicMode::ClosedForm},
    {"meridian", GeodesicMode::Meridian},
    {"parallel", GeodesicMode::Parallel},
    {"integrate", GeodesicMode::Integrate},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loxodromes and geodesics on rotational surfaces of pseudo-isotropic space"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", common.out, "Write the table or report to FILE instead of stdout");
  app.add_option("--report", common.report, "Also write the --verify report to FILE");
  app.add_option("--seed", common.seed, "Seed for randomized suites")->capture_default_str();

  // surface
  SurfaceOptions so;
  std::pair<double, double> s_u{so.u_range.lo, so.u_range.hi};
  std::pair<double, double> s_v{so.v_range.lo, so.v_range.hi};
  std::pair<std::size_t, std::size_t> s_grid{so.nu, so.nv};
  auto* surface = app.add_subcommand("surface", "Sample a rotational surface on a (u, v) grid");
  surface->add_option("--kind", so.kind, "Meridian kind")
      ->transform(CLI::CheckedTransformer(kMeridianKinds))
      ->option_text("spacelike-meridian|timelike-meridian (or r1|r2)")
      ->required();
  surface->add_option("--profile", so.profile, "Profile f(u)")->capture_default_str();
  surface->add_option("--u-range", s_u, "u interval LO HI")->capture_default_str();
  surface->add_option("--v-range", s_v, "v interval LO HI")->capture_default_str();
  surface->add_option("--grid", s_grid, "Grid size NU NV")->capture_default_str();

  // loxodrome
  LoxodromeOptions lo;
  std::string l_kind = "ss";
  std::string l_angle;
  std::optional<int> l_sign_u;
  std::pair<double, double> l_t{lo.spec.t_domain.lo, lo.spec.t_domain.hi};
  auto* lox = app.add_subcommand("loxodrome", "Sample a loxodrome (constant meridian angle)");
  lox->add_option("--kind", l_kind, "ss | ts | st | tt (curve / meridian character)")
      ->check(CLI::IsMember({"ss", "ts", "st", "tt"}))
      ->capture_default_str();
  lox->add_option("--angle", l_angle, "Meridian angle; constant expression such as pi/4")
      ->required();
  lox->add_option("--sign-u", l_sign_u, "Branch of u (+1 or -1); not available for tt")
      ->check(CLI::IsMember({1, -1}));
  lox->add_option("--sign-v", lo.spec.sign_v, "Branch of v (+1 or -1)")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  lox->add_option("--profile", lo.profile, "Profile f(u)")->capture_default_str();
  lox->add_option("--t-range", l_t, "t interval LO HI, must not contain 0")->capture_default_str();
  lox->add_option("--samples", lo.samples, "Number of samples")->capture_default_str();
  lox->add_flag("--verify", lo.verify, "Check unit speed and constant angle");

  // geodesic
  GeodesicOptions go;
  std::pair<double, double> g_t{go.t_range.lo, go.t_range.hi};
  std::vector<double> g_state;
  auto* geo = app.add_subcommand("geodesic", "Sample a geodesic");
  geo->add_option("--mode", go.mode, "Which geodesic candidate to sample")
      ->transform(CLI::CheckedTransformer(kGeodesicModes))
      ->option_text("closed-form|meridian|parallel|integrate [closed-form]");
  geo->add_option("--kind", go.kind, "Meridian kind")
      ->transform(CLI::CheckedTransformer(kMeridianKinds))
      ->option_text("spacelike-meridian|timelike-meridian [timelike-meridian]");
  geo->add_option("--profile", go.profile, "Profile f(u)")->capture_default_str();
  geo->add_option("--c", go.params.c, "Closed form: c (nonzero)")->capture_default_str();
  geo->add_option("--c1", go.params.c1, "Closed form: c1 (> 0)")->capture_default_str();
  geo->add_option("--c2", go.params.c2, "Closed form: c2")->capture_default_str();
  geo->add_option("--c5", go.params.c5, "Closed form: c5")->capture_default_str();
  geo->add_option("--sign-u", go.params.sign_u, "Closed form: branch of u (+1 or -1)")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  geo->add_option("--a", go.a, "Meridian: u = a t + b")->capture_default_str();
  geo->add_option("--b", go.b, "Meridian: u = a t + b")->capture_default_str();
  geo->add_option("--v0", go.v0, "Meridian: v")->capture_default_str();
  geo->add_option("--u0", go.u0, "Parallel: u")->capture_default_str();
  geo->add_option("--state", g_state,
                  "Integrate: initial U V DU DV (default: closed form at t-range start)")
      ->expected(4);
  geo->add_option("--step", go.step, "Integrate: RK4 step")->capture_default_str();
  geo->add_option("--t-range", g_t, "t interval LO HI")->capture_default_str();
  geo->add_option("--samples", go.samples, "Number of samples")->capture_default_str();
  geo->add_flag("--verify", go.verify, "Check geodesic equations and conserved quantity");

  // verify
  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("suite", suite, "all | core | loxodrome | geodesic")
      ->check(CLI::IsMember({"all", "core", "loxodrome", "geodesic"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConstructionError;
  }

  try {
    if (*surface) {
      so.u_range = to_interval(s_u);
      so.v_range = to_interval(s_v);
      so.nu = s_grid.first;
      so.nv = s_grid.second;
      if (so.u_range.contains_zero())
        std::cerr << "warning: u-range contains 0, where the metric degenerates\n";
      emit(render(cmd_surface(so), common.output_format()), common.out);
      return kOk;
    }
    if (*lox) {
      lo.spec.kind = kLoxodromeKinds.at(l_kind);
      lo.spec.angle = parse_constant(l_angle);
      lo.spec.t_domain = to_interval(l_t);
      if (l_sign_u) {
        if (lo.spec.kind == LoxodromeKind::TT)
          throw ConstructionError("--sign-u is not available for tt (u = -t cosh angle)");
        lo.spec.sign_u = *l_sign_u;
      }
      return finish_curve(cmd_loxodrome(lo), common);
    }
    if (*geo) {
      go.t_range = to_interval(g_t);
      if (!g_state.empty()) go.state = GeodesicState{g_state[0], g_state[1], g_state[2], g_state[3]};
      return finish_curve(cmd_geodesic(go), common);
    }
    if (*ver) {
      const VerificationReport r = cmd_verify(suite, common.seed);
      emit(render(r, common.output_format()), common.out);
      std::cerr << r.to_text();
      return r.passed() ? kOk : kVerificationFailure;
    }
  } catch (const StepTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConstructionError;
  }
  return kOk;
}
