#pragma once

// Rosette sampling and polyline self-intersection counting.

#include <span>
#include <vector>

#include <sommerfeld/model.hpp>

namespace sommerfeld {

struct TrajectoryPoint {
  double theta = 0.0;  // radians
  double r = 0.0;      // Bohr radii
  double x = 0.0;
  double y = 0.0;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr int kMinSamplesPerRevolution = 16;
inline constexpr int kMinSamplesForCrossings = 512;

/// Samples of the orbit over whole radial periods, uniformly spaced in theta.
/// Immutable once built; only sample_trajectory constructs one.
class TrajectoryPolyline {
 public:
  [[nodiscard]] const OrbitParameters& params() const noexcept { return params_; }
  [[nodiscard]] int revolutions() const noexcept { return revolutions_; }
  [[nodiscard]] int samples_per_rev() const noexcept { return samples_per_rev_; }
  [[nodiscard]] std::span<const TrajectoryPoint> points() const noexcept { return points_; }

 private:
  friend TrajectoryPolyline sample_trajectory(const OrbitParameters&, int, int);

  TrajectoryPolyline(const OrbitParameters& params, int revolutions, int samples_per_rev,
                     std::vector<TrajectoryPoint> points)
      : params_(params),
        revolutions_(revolutions),
        samples_per_rev_(samples_per_rev),
        points_(std::move(points)) {}

  OrbitParameters params_;
  int revolutions_;
  int samples_per_rev_;
  std::vector<TrajectoryPoint> points_;
};

enum class PeriodLimit { OnePeriod, Full };

struct IntersectionReport {
  int count = 0;  // transversal crossings inside the requested window
  int loops = 0;  // crossings within the first radial period
  int winding_from_geometry = 1;  // loops + 1
};

/// r(theta) = a (1 - eps^2) / (1 + eps cos(omega theta)).
double radius_at(const OrbitParameters& params, double theta);

/// revolutions * samples_per_rev + 1 points on theta in [0, revolutions 2 pi / omega].
/// Throws ArgumentError if revolutions < 1 or samples_per_rev < 16.
TrajectoryPolyline sample_trajectory(const OrbitParameters& params, int revolutions,
                                     int samples_per_rev);

/// Counts transversal crossings between non-adjacent segments of an open
/// polyline. Brute force over all segment pairs; crossings that land within
/// 1e-9 (segment parameter) of a vertex are merged by nearest-vertex pair.
int count_polyline_crossings(std::span<const Vec2> vertices);

/// Throws ResolutionError below 512 samples per revolution and
/// DegenerateError for circular orbits.
IntersectionReport count_self_intersections(const TrajectoryPolyline& poly,
                                            PeriodLimit limit = PeriodLimit::OnePeriod);

}  // namespace sommerfeld
