#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sommerfeld {

inline constexpr int kFirstTransuranic = 92;
inline constexpr int kLastTransuranic = 137;

struct ElementInfo {
  int z = 0;
  std::string_view symbol;
  std::string_view name;
  bool hypothetical = false;  // Z >= 119
  std::string_view informal_name;  // e.g. "Feynmanium"; empty if none
  std::span<const std::string_view> aliases;  // misprinted symbols/names seen in print

  /// Hydrogen-like ion label, e.g. "U^{91+}".
  [[nodiscard]] std::string ion_label() const;
};

/// Throws NotFoundError outside Z = 92..137.
const ElementInfo& element_info(int z);

std::span<const ElementInfo> element_registry();

enum class FieldStrength { Strong, SuperStrong, UltraStrong, SuperUltraStrong, UltraUltraStrong };

struct FieldStrengthClass {
  FieldStrength tier;
  std::string_view label;        // "Super-Strong"
  std::string_view description;  // "one loop, double necklace"
  int z_min;
  int z_max;

  /// "Super-Strong (one loop, double necklace)"
  [[nodiscard]] std::string display() const;
};

/// Throws NotFoundError outside Z = 92..137.
const FieldStrengthClass& classify(int z);

std::span<const FieldStrengthClass> field_strength_tiers();

/// A Z whose rounded winding number (n_r = n_theta = 1) disagrees with the
/// loop count implied by its tier's description.
struct TierMismatch {
  int z;
  FieldStrength tier;
  double winding_raw;
  int winding;
};

/// Sweeps Z = 92..137: Strong expects winding <= 1, Super-Strong 2,
/// Ultra-Strong 3, Super-Ultra 4, Ultra-Ultra >= 5.
std::vector<TierMismatch> tier_winding_mismatches();

}  // namespace sommerfeld
