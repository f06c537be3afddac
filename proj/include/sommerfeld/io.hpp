#pragma once

// Text/CSV/JSON serialization and standalone SVG rendering. All number
// formatting is locale-independent and outputs are byte-deterministic.

#include <optional>
#include <ostream>
#include <span>
#include <string_view>

#include <sommerfeld/elements.hpp>
#include <sommerfeld/geometry.hpp>
#include <sommerfeld/model.hpp>

namespace sommerfeld {

enum class TableFormat { Text, Csv, Json };

std::optional<TableFormat> parse_table_format(std::string_view name);

struct ParameterRow {
  OrbitParameters params;
  std::optional<ElementInfo> element;  // absent outside Z = 92..137
};

/// Row for orbit_parameters(ion), with the registry entry when there is one.
ParameterRow make_parameter_row(const IonSpec& ion);

struct RenderOptions {
  int width_px = 800;
  int height_px = 800;
  double margin_fraction = 0.05;
  double stroke_width_px = 1.0;
  bool show_focus = true;
  bool show_ground_circle = false;  // overlay the n_r = 0 circular orbit
  std::optional<int> revolutions;   // unset: default_render_revolutions()
};

/// Radial periods needed for the apse line to sweep a full turn:
/// ceil(2 pi / delta) with delta the perihelion advance reduced modulo 2 pi
/// to its distance from the nearest whole turn, capped at 64.
int default_render_revolutions(const OrbitParameters& params);

/// Header "theta,r,x,y" then one row per point, 9 significant digits, LF.
void write_trajectory_csv(const TrajectoryPolyline& poly, std::ostream& sink);

/// Standalone SVG 1.1: one <path> for the orbit, optional focus marker and
/// ground-state circle. The viewBox is in Bohr radii, [-R, R]^2 with
/// R = r_max / (1 - 2 margin); y is flipped so positive theta runs
/// counterclockwise on screen.
void render_svg(const TrajectoryPolyline& poly, const RenderOptions& opts, std::ostream& sink);

/// Text mirrors the printed tables (one column per ion, rows omega ...
/// winding). CSV has one line per ion; JSON is an object for a single row
/// and an array otherwise. CSV/JSON reals carry 17 significant digits.
void write_parameter_table(std::span<const ParameterRow> rows, TableFormat format,
                           std::ostream& sink);

/// Nine "label value" lines for a single ion.
void write_parameter_listing(const ParameterRow& row, std::ostream& sink);

}  // namespace sommerfeld
