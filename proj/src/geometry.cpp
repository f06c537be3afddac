#include <sommerfeld/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <utility>

#include <sommerfeld/errors.hpp>

namespace sommerfeld {

namespace {

constexpr double kEndpointSlack = 1e-9;

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }

// Sign of the turn a -> b -> c.
int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool boxes_disjoint(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  return std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
         std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y);
}

bool near_endpoint(double t) { return t < kEndpointSlack || t > 1.0 - kEndpointSlack; }

std::vector<Vec2> to_vertices(std::span<const TrajectoryPoint> points) {
  std::vector<Vec2> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p.x, p.y});
  return out;
}

}  // namespace

double radius_at(const OrbitParameters& params, double theta) {
  const double eps = params.epsilon;
  return params.a_over_a0 * (1.0 - eps * eps) / (1.0 + eps * std::cos(params.omega * theta));
}

TrajectoryPolyline sample_trajectory(const OrbitParameters& params, int revolutions,
                                     int samples_per_rev) {
  if (revolutions < 1) {
    throw ArgumentError("revolutions must be >= 1 (got " + std::to_string(revolutions) + ")");
  }
  if (samples_per_rev < kMinSamplesPerRevolution) {
    throw ArgumentError("samples per revolution must be >= 16 (got " +
                        std::to_string(samples_per_rev) + ")");
  }
  const double period = kTwoPi / params.omega;
  const std::size_t n = static_cast<std::size_t>(revolutions) * samples_per_rev;
  std::vector<TrajectoryPoint> points;
  points.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double theta = period * static_cast<double>(k) / samples_per_rev;
    const double r = radius_at(params, theta);
    points.push_back({theta, r, r * std::cos(theta), r * std::sin(theta)});
  }
  return TrajectoryPolyline(params, revolutions, samples_per_rev, std::move(points));
}

int count_polyline_crossings(std::span<const Vec2> v) {
  if (v.size() < 4) return 0;
  const std::size_t segments = v.size() - 1;
  int interior = 0;
  std::set<std::pair<std::size_t, std::size_t>> vertex_hits;

  for (std::size_t i = 0; i + 2 < segments; ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[i + 1];
    for (std::size_t j = i + 2; j < segments; ++j) {
      const Vec2 c = v[j];
      const Vec2 d = v[j + 1];
      if (boxes_disjoint(a, b, c, d)) continue;
      const int o1 = orientation(a, b, c);
      const int o2 = orientation(a, b, d);
      const int o3 = orientation(c, d, a);
      const int o4 = orientation(c, d, b);
      if (o1 * o2 > 0 || o3 * o4 > 0) continue;
      const double denom = cross(b - a, d - c);
      if (denom == 0.0) continue;  // parallel or collinear overlap
      const double t = cross(c - a, d - c) / denom;
      const double u = cross(c - a, b - a) / denom;
      if (near_endpoint(t) || near_endpoint(u)) {
        vertex_hits.emplace(i + (t > 0.5 ? 1 : 0), j + (u > 0.5 ? 1 : 0));
      } else {
        ++interior;
      }
    }
  }
  return interior + static_cast<int>(vertex_hits.size());
}

IntersectionReport count_self_intersections(const TrajectoryPolyline& poly, PeriodLimit limit) {
  if (poly.samples_per_rev() < kMinSamplesForCrossings) {
    throw ResolutionError("crossing detection needs >= 512 samples per revolution (got " +
                          std::to_string(poly.samples_per_rev()) + ")");
  }
  if (poly.params().epsilon == 0.0) {
    throw DegenerateError("circular orbit: self-overlap is not transversal");
  }
  const auto points = poly.points();
  const auto one_period =
      to_vertices(points.first(static_cast<std::size_t>(poly.samples_per_rev()) + 1));

  IntersectionReport report;
  report.loops = count_polyline_crossings(one_period);
  report.count = limit == PeriodLimit::OnePeriod ? report.loops
                                                 : count_polyline_crossings(to_vertices(points));
  report.winding_from_geometry = report.loops + 1;
  return report;
}

}  // namespace sommerfeld
