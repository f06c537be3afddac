// Acceptance gate: one PASS/FAIL line per criterion, details indented below.
// Expected values come from the long-double formula oracle and the analytic
// crossing count, never from the library under test.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <sommerfeld/cli.hpp>
#include <sommerfeld/elements.hpp>
#include <sommerfeld/errors.hpp>
#include <sommerfeld/geometry.hpp>
#include <sommerfeld/io.hpp>
#include <sommerfeld/model.hpp>
#include <sommerfeld/reference_tables.hpp>

#include "formula_oracle.hpp"

using namespace sommerfeld;

namespace {

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      detail(what);
    }
  }
  void detail(const std::string& line) { details_.push_back(line); }
  [[nodiscard]] bool passed() const { return pass_; }
  [[nodiscard]] const std::vector<std::string>& details() const { return details_; }

 private:
  bool pass_ = true;
  std::vector<std::string> details_;
};

std::string num(double v, int digits = 9) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

bool within_rel(double got, long double want, double tol) {
  return oracle::rel_err(got, want) <= tol;
}

long double expected(const oracle::Values& o, Field f) {
  switch (f) {
    case Field::Omega: return o.omega;
    case Field::Epsilon: return o.epsilon;
    case Field::AOverA0: return o.a_over_a0;
    case Field::RMin: return o.r_min;
    case Field::RMax: return o.r_max;
    case Field::DeltaTheta: return o.delta_theta;
    case Field::VGround: return o.v_ground;
    case Field::EnergyRatio: return o.energy_ratio;
    case Field::WindingRaw: return o.winding_raw;
  }
  return 0;
}

// ---------------------------------------------------------------------------

void golden_tables(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto tolerances = default_tolerances();
  const auto columns = reference_columns();
  c.check(columns.size() == 45, "expected 45 columns, found " + std::to_string(columns.size()));

  int cells = 0;
  int failing = 0;
  int failing_agree_digits = 0;
  std::map<std::string, int> failing_by_field;
  for (const auto& col : columns) {
    const auto o = oracle::evaluate(col.z);
    for (const Field f : kAllFields) {
      if (col.known_erratum(f)) continue;
      ++cells;
      const auto& printed = col.cell(f);
      const Tolerance tol = tolerances.at(f);
      const double abs_err = std::fabs(printed.value - static_cast<double>(expected(o, f)));
      const double err = tol.kind == ToleranceKind::Absolute
                             ? abs_err
                             : abs_err / std::fabs(static_cast<double>(expected(o, f)));
      if (err > tol.value) {
        ++failing;
        ++failing_by_field[std::string(field_name(f))];
        const bool agrees = abs_err <= printed.half_unit() * (1 + 1e-9);
        if (agrees) ++failing_agree_digits;
        if (f != Field::WindingRaw || !agrees) {
          c.detail("Z=" + std::to_string(col.z) + " " + std::string(field_name(f)) + ": printed " +
                   printed.literal + ", oracle " + num(static_cast<double>(expected(o, f))) +
                   (agrees ? " (agrees to printed digits)" : " (beyond printed digits)"));
        }
      }
    }
  }
  c.check(failing == 0, std::to_string(failing) + " of " + std::to_string(cells) +
                            " non-erratum cells outside tolerance, " +
                            std::to_string(failing_agree_digits) +
                            " of them agreeing with the oracle to every printed digit");
  for (const auto& [field, n] : failing_by_field) {
    c.detail("  " + field + ": " + std::to_string(n) + " cells");
  }

  for (const auto& d : validate_all()) {
    const auto o = oracle::evaluate(d.z);
    const auto want = expected(o, d.field);
    c.check(within_rel(d.recomputed, want, 1e-9),
            "library recomputation Z=" + std::to_string(d.z) + " " +
                std::string(field_name(d.field)) + " differs from the oracle");
  }

  struct Anchor {
    int z;
    Field field;
    double printed;
  };
  const std::vector<Anchor> anchors{
      {92, Field::Omega, 0.741135},       {92, Field::Epsilon, 0.904882},
      {92, Field::AOverA0, 0.0353163},    {92, Field::RMin, 0.00335921},
      {92, Field::RMax, 0.0672735},       {92, Field::DeltaTheta, 2.19461},
      {92, Field::EnergyRatio, 0.933042}, {92, Field::WindingRaw, 0.699},
      {118, Field::Omega, 0.508457},      {118, Field::WindingRaw, 1.933},
      {137, Field::Omega, 0.0229203},     {137, Field::Epsilon, 0.999749},
      {137, Field::DeltaTheta, 267.849},  {137, Field::EnergyRatio, 0.715164},
      {137, Field::WindingRaw, 85.259},
  };
  for (const auto& a : anchors) {
    const double got = field_value(orbit_parameters(IonSpec{a.z, {1, 1}}), a.field);
    const double rel = std::fabs(got - a.printed) / std::fabs(a.printed);
    c.check(rel <= 5e-5, "anchor Z=" + std::to_string(a.z) + " " +
                             std::string(field_name(a.field)) + ": computed " + num(got) +
                             " vs " + num(a.printed, 9) + ", rel " + num(rel, 3));
  }

  const double elapsed = seconds_since(t0);
  c.check(elapsed < 1.0, "runtime " + num(elapsed, 3) + " s");
}

void errata_detection(Criterion& c) {
  std::string report;
  const int code = run_cli({"validate"}, &report);
  c.check(code == 0, "validate exit code " + std::to_string(code) + ", expected 0");

  std::set<std::pair<int, Field>> expected_known{{103, Field::Epsilon}};
  for (const Field f : kAllFields) {
    if (f != Field::WindingRaw) expected_known.insert({120, f});
  }
  std::set<std::pair<int, Field>> known;
  int fresh = 0;
  for (const auto& d : validate_all()) {
    if (d.verdict == Verdict::KnownErratum) known.insert({d.z, d.field});
    if (d.verdict == Verdict::NewDiscrepancy) ++fresh;
  }
  c.check(known == expected_known, "KnownErratum set differs from {Z=103 epsilon, Z=120 x8}");
  c.check(fresh == 0, std::to_string(fresh) + " NewDiscrepancy entries");
  c.check(report.find("Z=103 Lr^{102+} (table 3) epsilon") != std::string::npos,
          "report lacks the Z=103 epsilon erratum");

  const auto p = orbit_parameters(IonSpec{120, {1, 1}});
  const auto o = oracle::evaluate(120);
  c.check(within_rel(p.omega, o.omega, 1e-12) && within_rel(p.epsilon, o.epsilon, 1e-12) &&
              within_rel(p.energy_ratio, o.energy_ratio, 1e-12) &&
              within_rel(p.ground_speed, o.v_ground, 1e-12),
          "Z=120 recomputation differs from the oracle");
  c.check(std::fabs(p.omega - 0.482888) <= 5e-5 * 0.482888, "Z=120 omega " + num(p.omega));
  c.check(std::fabs(p.epsilon - 0.945494) <= 5e-5 * 0.945494, "Z=120 epsilon " + num(p.epsilon));
  c.check(std::fabs(p.energy_ratio - 0.861056) <= 5e-5 * 0.861056,
          "Z=120 E/mc^2 " + num(p.energy_ratio));
  c.check(std::fabs(p.ground_speed - 0.876) <= 5e-4, "Z=120 v/c " + num(p.ground_speed));
  const double printed_winding = find_column(120)->cell(Field::WindingRaw).value;
  const double rel = std::fabs(printed_winding - static_cast<double>(o.winding_raw)) /
                     static_cast<double>(o.winding_raw);
  c.check(rel <= 5e-5, "Z=120 printed winding 2.142 vs oracle " +
                           num(static_cast<double>(o.winding_raw)) + ", rel " + num(rel, 3) +
                           " > 5e-05");
}

void identities(Criterion& c) {
  for (int z = 92; z <= 137; ++z) {
    const auto p = orbit_parameters(IonSpec{z, {1, 1}});
    const auto tag = "Z=" + std::to_string(z) + " ";
    c.check(std::fabs(p.r_min - p.a_over_a0 * (1 - p.epsilon)) <= 1e-12 * p.r_min,
            tag + "r_min != a(1-eps)");
    c.check(std::fabs(p.r_max - p.a_over_a0 * (1 + p.epsilon)) <= 1e-12 * p.r_max,
            tag + "r_max != a(1+eps)");
    c.check(std::fabs(p.winding_raw - p.delta_theta / M_PI) <= 1e-12 * p.winding_raw,
            tag + "winding_raw != delta_theta/pi");
    const auto g = orbit_parameters(IonSpec{z, {0, 1}});
    c.check(std::fabs(g.energy_ratio - g.omega) <= 1e-10 * g.omega, tag + "ground E != omega");
    c.check(std::fabs(z * g.a_over_a0 - g.omega) <= 1e-10 * g.omega, tag + "ground Z a != omega");
  }
}

void geometric_winding(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::map<int, int> figure_values{{92, 1}, {118, 2}, {126, 3}};
  for (const int z : {92, 100, 110, 117, 118, 126, 129, 131}) {
    const auto p = orbit_parameters(IonSpec{z, {1, 1}});
    const auto r4096 = count_self_intersections(sample_trajectory(p, 1, 4096));
    const auto r8192 = count_self_intersections(sample_trajectory(p, 1, 8192));
    const int analytic = oracle::loops_per_period(oracle::evaluate(z).omega);
    const auto tag = "Z=" + std::to_string(z) + ": ";
    c.check(r4096.loops == r8192.loops, tag + "count changes under doubling (" +
                                            std::to_string(r4096.loops) + " -> " +
                                            std::to_string(r8192.loops) + ")");
    c.check(r4096.loops == analytic, tag + "polyline count " + std::to_string(r4096.loops) +
                                         " differs from analytic " + std::to_string(analytic));
    c.check(r4096.winding_from_geometry == p.winding,
            tag + "loops+1 = " + std::to_string(r4096.winding_from_geometry) +
                " but rounded winding = " + std::to_string(p.winding) + " (raw " +
                num(p.winding_raw, 5) + ")");
    if (const auto it = figure_values.find(z); it != figure_values.end()) {
      c.check(r4096.winding_from_geometry == it->second,
              tag + "loops+1 = " + std::to_string(r4096.winding_from_geometry) + ", expected " +
                  std::to_string(it->second));
    }
  }
  const double elapsed = seconds_since(t0);
  c.check(elapsed < 10.0, "runtime " + num(elapsed, 3) + " s");
  c.detail("runtime " + num(elapsed, 3) + " s");
}

void classification(Criterion& c) {
  const auto tiers = field_strength_tiers();
  c.check(tiers.size() == 5, "expected five tiers");
  std::map<int, int> hits;
  for (const auto& t : tiers) {
    for (int z = t.z_min; z <= t.z_max; ++z) ++hits[z];
  }
  for (int z = 92; z <= 137; ++z) {
    c.check(hits[z] == 1, "Z=" + std::to_string(z) + " covered " + std::to_string(hits[z]) + "x");
  }
  c.check(hits.size() == 46, "tiers extend outside [92, 137]");
  const std::vector<std::pair<int, std::string>> probes{
      {116, "Strong"},           {117, "Super-Strong"},      {125, "Super-Strong"},
      {126, "Ultra-Strong"},     {128, "Ultra-Strong"},      {129, "Super-Ultra Strong"},
      {130, "Super-Ultra Strong"}, {131, "Ultra-Ultra Strong"},
  };
  for (const auto& [z, label] : probes) {
    c.check(classify(z).label == label, "Z=" + std::to_string(z) + " classed " +
                                            std::string(classify(z).label) + ", expected " + label);
  }
}

void boundary(Criterion& c) {
  try {
    const auto p = orbit_parameters(IonSpec{137, {1, 1}});
    c.check(std::isfinite(p.omega) && p.omega > 0, "Z=137 omega not positive");
  } catch (const std::exception& e) {
    c.check(false, std::string("Z=137 threw: ") + e.what());
  }
  bool domain = false;
  try {
    orbit_parameters(IonSpec{138, {1, 1}});
  } catch (const DomainError&) {
    domain = true;
  }
  c.check(domain, "Z=138 did not raise a domain error");
  c.check(run_cli({"params", "--z", "137"}) == 0, "CLI Z=137 failed");
  const int code = run_cli({"params", "--z", "138"});
  c.check(code == 2, "CLI Z=138 exit code " + std::to_string(code) + ", expected 2");
}

double parse_number(std::string_view s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("bad number '" + std::string(s) + "'");
  }
  return v;
}

void output_fidelity(Criterion& c) {
  // CSV round trip.
  const auto p = orbit_parameters(IonSpec{118, {1, 1}});
  const auto poly = sample_trajectory(p, 2, 1024);
  std::ostringstream csv;
  write_trajectory_csv(poly, csv);
  {
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    c.check(line == "theta,r,x,y", "CSV header '" + line + "'");
    std::size_t i = 0;
    double worst = 0;
    while (std::getline(in, line)) {
      const auto& pt = poly.points()[i++];
      std::vector<double> cells;
      std::size_t start = 0;
      for (std::size_t pos; (pos = line.find(',', start)) != std::string::npos; start = pos + 1) {
        cells.push_back(parse_number(std::string_view(line).substr(start, pos - start)));
      }
      cells.push_back(parse_number(std::string_view(line).substr(start)));
      const double want[4] = {pt.theta, pt.r, pt.x, pt.y};
      for (int k = 0; k < 4; ++k) {
        if (want[k] != 0) worst = std::max(worst, std::fabs(cells[k] - want[k]) / std::fabs(want[k]));
      }
    }
    c.check(i == poly.points().size(), "CSV row count");
    c.check(worst <= 5e-9, "CSV round-trip rel error " + num(worst, 3));
  }

  // SVG: well-formed XML, path extent recovers r_max.
  for (const int z : {92, 118, 126, 137}) {
    const auto q = orbit_parameters(IonSpec{z, {1, 1}});
    std::ostringstream svg;
    render_svg(sample_trajectory(q, default_render_revolutions(q), 1024), {}, svg);
    const auto tag = "Z=" + std::to_string(z) + " SVG: ";
    try {
      boost::property_tree::ptree tree;
      std::istringstream in(svg.str());
      boost::property_tree::read_xml(in, tree);
      std::string d;
      for (const auto& [name, node] : tree.get_child("svg")) {
        if (name == "path" && node.get<std::string>("<xmlattr>.id", "") == "orbit") {
          d = node.get<std::string>("<xmlattr>.d");
        }
      }
      c.check(!d.empty(), tag + "no orbit path");
      double extent = 0;
      std::istringstream ds(d);
      std::string token;
      while (ds >> token) {
        const auto comma = token.find(',');
        const double x = parse_number(std::string_view(token).substr(1, comma - 1));
        const double y = parse_number(std::string_view(token).substr(comma + 1));
        extent = std::max(extent, std::hypot(x, y));
      }
      const long double want = oracle::evaluate(z).r_max;
      c.check(within_rel(extent, want, 1e-6),
              tag + "path extent " + num(extent) + " vs r_max " + num(static_cast<double>(want)));
    } catch (const std::exception& e) {
      c.check(false, tag + e.what());
    }
  }

  // Byte determinism across repeated runs of every output path.
  const std::vector<std::vector<std::string>> commands{
      {"params", "--z", "118"},
      {"params", "--z", "118", "--json"},
      {"table", "--format", "csv"},
      {"table", "--format", "json"},
      {"table"},
      {"orbit", "--z", "126", "--revolutions", "3"},
      {"render", "--z", "131"},
      {"classify", "--z", "129"},
      {"validate"},
  };
  for (const auto& cmd : commands) {
    std::string a, b;
    run_cli(cmd, &a);
    run_cli(cmd, &b);
    std::string joined;
    for (const auto& s : cmd) joined += s + ' ';
    c.check(!a.empty() && a == b, "non-deterministic output: " + joined);
  }
}

void monotonicity(Criterion& c) {
  auto prev = orbit_parameters(IonSpec{92, {1, 1}});
  for (int z = 93; z <= 137; ++z) {
    const auto p = orbit_parameters(IonSpec{z, {1, 1}});
    const auto tag = "Z=" + std::to_string(z - 1) + "->" + std::to_string(z) + ": ";
    c.check(p.omega < prev.omega, tag + "omega not decreasing");
    c.check(p.energy_ratio < prev.energy_ratio, tag + "E/mc^2 not decreasing");
    c.check(p.epsilon > prev.epsilon, tag + "epsilon not increasing");
    c.check(p.delta_theta > prev.delta_theta, tag + "delta_theta not increasing");
    c.check(p.winding_raw > prev.winding_raw, tag + "winding_raw not increasing");
    c.check(p.ground_speed > prev.ground_speed, tag + "v/c not increasing");
    prev = p;
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"golden-table reproduction", golden_tables},
      {"errata detection", errata_detection},
      {"identity suite", identities},
      {"geometric winding oracle", geometric_winding},
      {"classification partition", classification},
      {"boundary behavior", boundary},
      {"output fidelity", output_fidelity},
      {"monotonicity sweep", monotonicity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("unexpected exception: ") + e.what());
    }
    std::printf("%s %zu %s\n", c.passed() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    for (const auto& line : c.details()) std::printf("    %s\n", line.c_str());
    if (!c.passed()) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
