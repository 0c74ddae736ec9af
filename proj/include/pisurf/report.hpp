#pragma once

// Sample tables (t, u, v, x, y, z) and verification reports, with their CSV
// and JSON encodings.

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pisurf/curve.hpp"

namespace pisurf {

inline constexpr const char* kToolVersion = "0.1.0";

struct SampleRow {
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct SampleTable {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<SampleRow> rows;
};

/// Samples `curve` at `n` uniformly spaced parameters of `range`.
inline SampleTable sample_curve(const ParamCurve& curve, Interval range, std::size_t n) {
  if (n == 0) throw ConstructionError("sample_curve: at least one sample required");
  SampleTable table;
  table.rows.reserve(n);
  for (double t : linspace(range, n)) {
    const auto [u, v] = curve.coordinates(t);
    const PiVec3 p = curve.surface().point(u, v);
    table.rows.push_back({t, u, v, p.x(), p.y(), p.z()});
  }
  return table;
}

/// Row-major grid over (u, v); the t column holds the flat sample index.
inline SampleTable sample_surface(const RotationalSurface& s, Interval u_range, Interval v_range,
                                  std::size_t nu, std::size_t nv) {
  if (nu == 0 || nv == 0) throw ConstructionError("sample_surface: empty grid");
  SampleTable table;
  table.rows.reserve(nu * nv);
  std::size_t index = 0;
  for (double u : linspace(u_range, nu)) {
    for (double v : linspace(v_range, nv)) {
      const PiVec3 p = s.point(u, v);
      table.rows.push_back({static_cast<double>(index++), u, v, p.x(), p.y(), p.z()});
    }
  }
  return table;
}

namespace detail {

inline std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

/// Header `t,u,v,x,y,z`, 17 significant digits, '.' decimal separator.
/// Metadata is only carried by the JSON encoding.
inline std::string to_csv(const SampleTable& table) {
  std::string out = "t,u,v,x,y,z\n";
  for (const auto& r : table.rows) {
    out += detail::g17(r.t) + ',' + detail::g17(r.u) + ',' + detail::g17(r.v) + ',' +
           detail::g17(r.x) + ',' + detail::g17(r.y) + ',' + detail::g17(r.z) + '\n';
  }
  return out;
}

inline std::string to_json(const SampleTable& table) {
  nlohmann::ordered_json j;
  j["meta"] = table.meta;
  j["meta"]["columns"] = {"t", "u", "v", "x", "y", "z"};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) rows.push_back({r.t, r.u, r.v, r.x, r.y, r.z});
  j["rows"] = std::move(rows);
  return j.dump(1) + "\n";
}

/// Parses the CSV written by to_csv.
inline std::vector<SampleRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "t,u,v,x,y,z")
    throw ConstructionError("parse_csv: missing header");
  std::vector<SampleRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SampleRow r;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &r.t, &r.u, &r.v, &r.x, &r.y,
                    &r.z) != 6)
      throw ConstructionError("parse_csv: malformed row '" + line + "'");
    rows.push_back(r);
  }
  return rows;
}

/// Which side of the tolerance a check must land on.
enum class Bound { AtMost, AtLeast };

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::AtMost;
  bool pass = false;
};

/// Running max / mean of |residual|.
class ResidualStats {
public:
  void add(double r) {
    const double a = std::abs(r);
    if (!std::isfinite(a)) finite_ = false;
    if (!(a <= max_)) max_ = a;
    sum_ += a;
    ++count_;
  }
  double max() const { return count_ ? max_ : 0.0; }
  double mean() const { return count_ ? sum_ / static_cast<double>(count_) : 0.0; }
  std::size_t count() const { return count_; }
  bool finite() const { return finite_; }

private:
  double max_ = 0.0;
  double sum_ = 0.0;
  std::size_t count_ = 0;
  bool finite_ = true;
};

class VerificationReport {
public:
  void add(const std::string& name, const ResidualStats& stats, double tolerance,
           Bound bound = Bound::AtMost) {
    CheckResult c{name, stats.max(), stats.mean(), tolerance, bound, false};
    const bool nonempty = stats.count() > 0 && stats.finite();
    c.pass = nonempty && (bound == Bound::AtMost ? c.max_residual <= tolerance
                                                 : c.max_residual > tolerance);
    checks_.push_back(std::move(c));
  }

  /// A check whose outcome is a single boolean rather than a residual.
  void add_flag(const std::string& name, bool ok) {
    checks_.push_back({name, ok ? 0.0 : 1.0, ok ? 0.0 : 1.0, 0.0, Bound::AtMost, ok});
  }

  void append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }

  /// True iff every check passes (and there is at least one).
  bool passed() const {
    if (checks_.empty()) return false;
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["pass"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
      arr.push_back({{"check", c.name},
                     {"max_residual", c.max_residual},
                     {"mean_residual", c.mean_residual},
                     {"tolerance", c.tolerance},
                     {"bound", c.bound == Bound::AtMost ? "at_most" : "above"},
                     {"pass", c.pass}});
    }
    j["checks"] = std::move(arr);
    return j.dump(1) + "\n";
  }

  std::string to_csv() const {
    std::string out = "check,max_residual,mean_residual,tolerance,bound,pass\n";
    for (const auto& c : checks_) {
      out += c.name + ',' + detail::g17(c.max_residual) + ',' + detail::g17(c.mean_residual) +
             ',' + detail::g17(c.tolerance) + ',' + (c.bound == Bound::AtMost ? "at_most" : "above") +
             ',' + (c.pass ? "pass" : "FAIL") + '\n';
    }
    return out;
  }

  std::string to_text() const {
    std::string out;
    char buf[256];
    for (const auto& c : checks_) {
      std::snprintf(buf, sizeof buf, "%-4s %-44s max=%.3e mean=%.3e %s %.1e\n",
                    c.pass ? "ok" : "FAIL", c.name.c_str(), c.max_residual, c.mean_residual,
                    c.bound == Bound::AtMost ? "<=" : ">", c.tolerance);
      out += buf;
    }
    out += passed() ? "verdict: pass\n" : "verdict: FAIL\n";
    return out;
  }

private:
  std::vector<CheckResult> checks_;
};

}  // namespace pisurf
