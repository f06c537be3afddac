#include <sommerfeld/model.hpp>

#include <cmath>
#include <string>

#include <sommerfeld/errors.hpp>

namespace sommerfeld {

namespace {

void check_charge(int z) {
  if (z < kMinCharge || z > kMaxCharge) {
    throw DomainError(DomainError::Reason::ChargeOutOfRange,
                      "nuclear charge z=" + std::to_string(z) + " outside [1, 137]");
  }
}

void check_coupling(Coupling coupling, const QuantumNumbers& qn) {
  validate(qn);
  if (!(coupling.value >= 0.0) || coupling.value >= qn.n_theta) {
    throw DomainError(DomainError::Reason::OrbitCollapse,
                      "alpha*z=" + std::to_string(coupling.value) +
                          " must be below n_theta=" + std::to_string(qn.n_theta));
  }
}

// sqrt(n_theta^2 - (alpha Z)^2)
double radial_root(Coupling coupling, int n_theta) {
  const double n = n_theta;
  return std::sqrt((n - coupling.value) * (n + coupling.value));
}

void check_frequency(double omega) {
  if (!(omega > 0.0 && omega <= 1.0)) {
    throw DomainError(DomainError::Reason::FrequencyOutOfRange,
                      "omega=" + std::to_string(omega) + " outside (0, 1]");
  }
}

}  // namespace

void validate(const QuantumNumbers& qn) {
  if (qn.n_r < 0 || qn.n_theta < 1) {
    throw DomainError(DomainError::Reason::InvalidQuantumNumber,
                      "quantum numbers require n_r >= 0 and n_theta >= 1 (got n_r=" +
                          std::to_string(qn.n_r) + ", n_theta=" + std::to_string(qn.n_theta) +
                          ")");
  }
}

void validate(const IonSpec& ion) {
  check_charge(ion.z);
  check_coupling(Coupling::of_charge(ion.z), ion.qn);
}

double azimuthal_frequency(Coupling coupling, int n_theta) {
  check_coupling(coupling, QuantumNumbers{0, n_theta});
  return radial_root(coupling, n_theta) / n_theta;
}

double eccentricity(Coupling coupling, QuantumNumbers qn) {
  check_coupling(coupling, qn);
  const double s = radial_root(coupling, qn.n_theta);
  const double nr = qn.n_r;
  return std::sqrt(nr) * std::sqrt(nr + 2.0 * s) / (nr + s);
}

double scaled_semi_major_axis(Coupling coupling, QuantumNumbers qn) {
  check_coupling(coupling, qn);
  const double shifted = qn.n_r + radial_root(coupling, qn.n_theta);
  return shifted * std::hypot(coupling.value, shifted);
}

double energy_ratio(Coupling coupling, QuantumNumbers qn) {
  check_coupling(coupling, qn);
  const double shifted = qn.n_r + radial_root(coupling, qn.n_theta);
  const double q = coupling.value / shifted;
  return 1.0 / std::sqrt(1.0 + q * q);
}

double azimuthal_frequency(int z, int n_theta) {
  check_charge(z);
  return azimuthal_frequency(Coupling::of_charge(z), n_theta);
}

double eccentricity(int z, QuantumNumbers qn) {
  check_charge(z);
  return eccentricity(Coupling::of_charge(z), qn);
}

double semi_major_axis(int z, QuantumNumbers qn) {
  check_charge(z);
  return scaled_semi_major_axis(Coupling::of_charge(z), qn) / z;
}

double energy_ratio(int z, QuantumNumbers qn) {
  check_charge(z);
  return energy_ratio(Coupling::of_charge(z), qn);
}

double perihelion_advance(double omega) {
  check_frequency(omega);
  return kTwoPi * (1.0 / omega - 1.0);
}

Winding winding_number(double omega) {
  check_frequency(omega);
  const double raw = 2.0 * (1.0 / omega - 1.0);
  // std::lround rounds halfway cases away from zero.
  return Winding{raw, static_cast<int>(std::lround(raw))};
}

double ground_speed(int z) {
  check_charge(z);
  return kConstants.alpha * z;
}

OrbitParameters orbit_parameters(const IonSpec& ion) {
  validate(ion);
  OrbitParameters p;
  p.ion = ion;
  p.omega = azimuthal_frequency(ion.z, ion.qn.n_theta);
  p.epsilon = eccentricity(ion.z, ion.qn);
  p.a_over_a0 = semi_major_axis(ion.z, ion.qn);
  p.r_min = p.a_over_a0 * (1.0 - p.epsilon);
  p.r_max = p.a_over_a0 * (1.0 + p.epsilon);
  p.delta_theta = perihelion_advance(p.omega);
  p.energy_ratio = energy_ratio(ion.z, ion.qn);
  const Winding w = winding_number(p.omega);
  p.winding_raw = w.raw;
  p.winding = w.rounded;
  p.ground_speed = ground_speed(ion.z);
  return p;
}

}  // namespace sommerfeld
