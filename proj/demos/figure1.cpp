// Data for the space-like loxodrome at angle pi/4 on the surface with
// space-like meridian and profile e^u, together with the surface patch and
// the meridian v = 0. Writes three CSV files into the given directory.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "pisurf/pisurf.hpp"

using namespace pisurf;

static void write(const std::string& path, const SampleTable& t) {
  std::ofstream(path, std::ios::binary) << to_csv(t);
  std::cout << path << ": " << t.rows.size() << " rows\n";
}

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : ".";
  const ExprAst profile = parse("exp(u)");
  const auto kind = MeridianKind::SpacelikeMeridian;

  const Loxodrome lox({LoxodromeKind::SS, std::numbers::pi / 4, 1, 1, {1.0, 2.0}}, profile);
  write(dir + "/figure1_loxodrome.csv", sample_curve(lox.curve(), lox.t_domain(), 500));

  // Meridian v = 0 through the same u-range as the loxodrome.
  const auto [u_lo, v_lo] = lox.coordinates(1.0);
  const auto [u_hi, v_hi] = lox.coordinates(2.0);
  const ParamCurve meridian = meridian_geodesic(1.0, 0.0, 0.0, kind, profile, {u_lo, u_hi});
  write(dir + "/figure1_meridian.csv", sample_curve(meridian, {u_lo, u_hi}, 200));

  const RotationalSurface surface(kind, profile);
  write(dir + "/figure1_surface.csv", sample_surface(surface, {1.0, u_hi}, {-0.5, 1.0}, 50, 50));

  const VerificationReport r = verify::verify_loxodrome(lox);
  std::cout << r.to_text();
  return r.passed() ? 0 : 3;
}
