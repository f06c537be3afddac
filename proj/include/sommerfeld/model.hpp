#pragma once

// Closed-form Bohr-Sommerfeld orbit parameters for a hydrogen-like ion.
//
// For nuclear charge Z and quantum numbers (n_r, n_theta), with
// s = sqrt(n_theta^2 - (alpha Z)^2):
//
//   omega   = s / n_theta
//   epsilon = sqrt(n_r) * sqrt(n_r + 2 s) / (n_r + s)
//   a / a0  = (n_r + s) * sqrt((alpha Z)^2 + (n_r + s)^2) / Z
//   E / mc2 = [1 + (alpha Z)^2 / (n_r + s)^2]^(-1/2)
//
// The orbit is the precessing conic 1/r = (1 + epsilon cos(omega theta)) /
// (a (1 - epsilon^2)); consecutive perihelia are 2 pi / omega apart in theta.

#include <sommerfeld/constants.hpp>

namespace sommerfeld {

struct QuantumNumbers {
  int n_r = 1;      // radial, >= 0 (0 is the circular orbit)
  int n_theta = 1;  // azimuthal, >= 1
};

struct IonSpec {
  int z = 1;
  QuantumNumbers qn{};
};

/// Coupling strength alpha*Z as a continuous quantity. The integer-charge API
/// is a thin wrapper over these; the continuous forms exist for limit studies.
struct Coupling {
  double value = 0.0;

  [[nodiscard]] static Coupling of_charge(int z) noexcept {
    return Coupling{kConstants.alpha * z};
  }
};

struct Winding {
  double raw = 0.0;  // 2 (1/omega - 1)
  int rounded = 0;   // nearest integer, ties away from zero
};

/// Everything derived for one ion and one pair of quantum numbers.
struct OrbitParameters {
  IonSpec ion{};
  double omega = 1.0;
  double epsilon = 0.0;
  double a_over_a0 = 0.0;
  double r_min = 0.0;
  double r_max = 0.0;
  double delta_theta = 0.0;   // radians per radial period
  double energy_ratio = 0.0;  // E / mc^2
  double winding_raw = 0.0;
  int winding = 0;
  double ground_speed = 0.0;  // v/c of the (0, 1) state, alpha Z
};

/// Throws DomainError unless n_r >= 0 and n_theta >= 1.
void validate(const QuantumNumbers& qn);

/// Throws DomainError unless 1 <= z <= 137, the quantum numbers are valid
/// and alpha z < n_theta.
void validate(const IonSpec& ion);

double azimuthal_frequency(int z, int n_theta);
double eccentricity(int z, QuantumNumbers qn);
double semi_major_axis(int z, QuantumNumbers qn);
double energy_ratio(int z, QuantumNumbers qn);

/// Per-revolution shift 2 pi / omega - 2 pi of the perihelion, in radians.
/// Throws DomainError for omega outside (0, 1].
double perihelion_advance(double omega);

/// The raw winding number equals perihelion_advance(omega) / pi.
Winding winding_number(double omega);

/// Ground-state speed v/c = alpha z.
double ground_speed(int z);

OrbitParameters orbit_parameters(const IonSpec& ion);

// Continuous-coupling forms. Preconditions: 0 <= coupling.value < n_theta.
double azimuthal_frequency(Coupling coupling, int n_theta);
double eccentricity(Coupling coupling, QuantumNumbers qn);
double energy_ratio(Coupling coupling, QuantumNumbers qn);

/// a / a0 multiplied by Z; finite as the coupling goes to zero.
double scaled_semi_major_axis(Coupling coupling, QuantumNumbers qn);

}  // namespace sommerfeld
