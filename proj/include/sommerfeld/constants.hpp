#pragma once

// Physical constants in the natural units used throughout the library:
// lengths in Bohr radii, energies in units of mc^2, speeds in units of c.
// Dimensional quantities (e, hbar, m, c, a0) are never stored.

#include <numbers>

namespace sommerfeld {

struct PhysicalConstants {
  double alpha;      // fine-structure constant e^2/(hbar c)
  double inv_alpha;  // 1/alpha
};

// CODATA-2018 1/alpha; alpha is derived from it so the pair are exact
// reciprocals at binary64 precision.
inline constexpr double kInverseFineStructure = 137.035999084;
inline constexpr double kFineStructure = 1.0 / kInverseFineStructure;

inline constexpr PhysicalConstants kConstants{kFineStructure, kInverseFineStructure};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Nuclear charge range admitted by the model (n_theta = 1 collapses above it).
inline constexpr int kMinCharge = 1;
inline constexpr int kMaxCharge = 137;

}  // namespace sommerfeld
