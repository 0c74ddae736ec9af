// Data for the three geodesic cases on the surface with time-like meridian
// and profile cos u: the closed-form geodesic (c = 1, c1 = 4, c2 = 2, c5 = 0),
// the meridian u = 2t + 5, and a parallel (not a geodesic), t in [0, 2].

#include <fstream>
#include <iostream>
#include <string>

#include "pisurf/pisurf.hpp"

using namespace pisurf;

static void write(const std::string& path, const SampleTable& t) {
  std::ofstream(path, std::ios::binary) << to_csv(t);
  std::cout << path << ": " << t.rows.size() << " rows\n";
}

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : ".";
  const ExprAst profile = parse("cos(u)");
  const auto kind = MeridianKind::TimelikeMeridian;
  const Interval t{0.0, 2.0};

  const GeodesicClosedForm g(kind, profile, verify::example_geodesic_params(), t);
  write(dir + "/figure2_geodesic.csv", sample_curve(g.curve(), t, 500));

  const ParamCurve meridian = meridian_geodesic(verify::kExampleMeridianA,
                                                verify::kExampleMeridianB, 0.0, kind, profile, t);
  write(dir + "/figure2_meridian.csv", sample_curve(meridian, t, 500));

  write(dir + "/figure2_parallel.csv", sample_curve(parallel_curve(1.0, kind, profile, {-1, 1}),
                                                    {-1, 1}, 200));

  // The geodesic runs on the u < 0 half (sign_u = -1), the meridian on u in [5, 9].
  const RotationalSurface surface(kind, profile);
  write(dir + "/figure2_surface.csv", sample_surface(surface, {-5.0, 9.0}, {-1.0, 1.0}, 50, 50));

  const ParallelClassification p = classify_parallel(1.0);
  std::cout << p.explanation << '\n';

  VerificationReport r = verify::verify_geodesic_curve(kind, g.curve(), {0.1, 1.9}, 500, "closed_form");
  r.append(verify::verify_geodesic_curve(kind, meridian, t, 500, "meridian"));
  std::cout << r.to_text();
  return r.passed() ? 0 : 3;
}
