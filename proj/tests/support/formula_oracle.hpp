#pragma once

// Independent long-double evaluation of the orbit formulas, written in
// algebraically different forms from the library (1 - eps^2 = s^2 / N^2,
// E = N / sqrt(N^2 + (alpha Z)^2), ...) so that shared mistakes are unlikely.

#include <cmath>

namespace oracle {

inline constexpr long double kInverseAlpha = 137.035999084L;
inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

struct Values {
  long double omega;
  long double epsilon;
  long double a_over_a0;
  long double r_min;
  long double r_max;
  long double delta_theta;
  long double v_ground;
  long double energy_ratio;
  long double winding_raw;
};

inline Values evaluate(int z, int n_r = 1, int n_theta = 1) {
  const long double az = static_cast<long double>(z) / kInverseAlpha;
  const long double nt = n_theta;
  const long double s = std::sqrt(nt * nt - az * az);
  const long double big_n = n_r + s;
  Values v{};
  v.omega = s / nt;
  v.epsilon = std::sqrt(1.0L - (s * s) / (big_n * big_n));
  v.a_over_a0 = big_n * big_n * std::sqrt(1.0L + (az / big_n) * (az / big_n)) / z;
  v.r_min = v.a_over_a0 * (1.0L - v.epsilon);
  v.r_max = v.a_over_a0 * (1.0L + v.epsilon);
  v.delta_theta = 2.0L * kPi * (nt - s) / s;
  v.v_ground = az;
  v.energy_ratio = big_n / std::sqrt(big_n * big_n + az * az);
  v.winding_raw = 2.0L * (nt - s) / s;
  return v;
}

/// Transversal self-crossings of the rosette within its first radial period.
/// With u = omega theta the radius repeats when theta2 - theta1 = 2 pi k and
/// u2 = -u1 (mod 2 pi); solutions inside one period exist for 1 <= k < 1/omega.
inline int loops_per_period(long double omega) {
  return static_cast<int>(std::ceil(1.0L / omega)) - 1;
}

inline long double rel_err(long double got, long double want) {
  return std::fabs(got - want) / std::fabs(want);
}

}  // namespace oracle
