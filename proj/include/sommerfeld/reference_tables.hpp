#pragma once

// Golden orbit-parameter tables for Z = 92..137 (n_r = n_theta = 1) and their
// comparison against recomputed values.
//
// The tables ship as an embedded JSON-lines asset (data/reference_tables.jsonl),
// one record per printed column:
//
//   {"table":1, "z":92, "ion":"U^{91+}",
//    "omega":"0.741135", "epsilon":"...", "a_over_a0":"...", "r_min":"...",
//    "r_max":"...", "delta_theta":"...", "v_ground":"...", "energy_ratio":"...",
//    "winding_raw":"0.699", "rotation":"CCW", "errata":["epsilon", ...]}
//
// Numbers are kept as the printed literal (digit-group spaces removed) so the
// last printed place is known. "errata" lists cells known to be misprinted.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <sommerfeld/model.hpp>

namespace sommerfeld {

enum class Field {
  Omega,
  Epsilon,
  AOverA0,
  RMin,
  RMax,
  DeltaTheta,
  VGround,
  EnergyRatio,
  WindingRaw,
};

inline constexpr std::array kAllFields{
    Field::Omega,      Field::Epsilon, Field::AOverA0,     Field::RMin,       Field::RMax,
    Field::DeltaTheta, Field::VGround, Field::EnergyRatio, Field::WindingRaw,
};

/// Asset key, e.g. "a_over_a0".
std::string_view field_name(Field field);
std::optional<Field> parse_field(std::string_view name);

/// Value taken from the recomputed record that corresponds to a table row.
double field_value(const OrbitParameters& params, Field field);

struct PrintedValue {
  double value = 0.0;
  std::string literal;

  /// Half a unit in the last printed place ("0.699" -> 5e-4).
  [[nodiscard]] double half_unit() const;

  bool operator==(const PrintedValue&) const = default;
};

PrintedValue parse_printed(std::string_view literal);

enum class Rotation { CW, CCW };

struct ReferenceColumn {
  int table_no = 0;
  int z = 0;
  std::string ion_label;
  std::array<PrintedValue, kAllFields.size()> cells{};
  Rotation rotation = Rotation::CCW;  // metadata only, never validated
  std::vector<Field> known_errata;

  [[nodiscard]] const PrintedValue& cell(Field field) const;
  [[nodiscard]] bool known_erratum(Field field) const;
  [[nodiscard]] bool has_known_erratum() const { return !known_errata.empty(); }

  bool operator==(const ReferenceColumn&) const = default;
};

/// One JSON-lines record <-> column. Throws std::invalid_argument on malformed input.
ReferenceColumn parse_column(std::string_view record);
std::string print_column(const ReferenceColumn& column);

/// The embedded columns in ascending Z (45 of them; Z = 132 was never printed).
std::span<const ReferenceColumn> reference_columns();
const ReferenceColumn* find_column(int z);

enum class ToleranceKind { Relative, Absolute };

struct Tolerance {
  ToleranceKind kind = ToleranceKind::Relative;
  double value = 0.0;
};

using ToleranceMap = std::map<Field, Tolerance>;

/// Relative 5e-5 for every field except v_ground (absolute 5e-4).
ToleranceMap default_tolerances();

enum class Verdict { WithinTolerance, KnownErratum, NewDiscrepancy };

std::string_view verdict_name(Verdict verdict);

struct Discrepancy {
  int z = 0;
  Field field = Field::Omega;
  double printed = 0.0;
  std::string printed_literal;
  double recomputed = 0.0;
  double relative_error = 0.0;
  double absolute_error = 0.0;
  Tolerance tolerance{};
  Verdict verdict = Verdict::WithinTolerance;
  // Recomputed value agrees with the literal to its last printed digit.
  bool agrees_to_printed_digits = false;
};

/// One entry per (column, field), ordered by (z, field). Fields missing from
/// the map fall back to default_tolerances().
std::vector<Discrepancy> validate_all(const ToleranceMap& tolerances = default_tolerances());

bool has_new_discrepancies(std::span<const Discrepancy> discrepancies);

/// Plain-text listing of every KnownErratum and NewDiscrepancy followed by
/// notes on caption, header and tier inconsistencies in the printed data.
std::string errata_report(std::span<const Discrepancy> discrepancies);

}  // namespace sommerfeld
