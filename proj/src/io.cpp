#include <sommerfeld/io.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <sommerfeld/errors.hpp>
#include <sommerfeld/reference_tables.hpp>

#include "format.hpp"

namespace sommerfeld {

namespace {

using detail::format_significant;

constexpr int kCsvTrajectoryDigits = 9;
constexpr int kLosslessDigits = 17;
constexpr int kTextDigits = 6;
constexpr int kSvgDigits = 10;
constexpr int kMaxRenderRevolutions = 64;

struct RowSpec {
  Field field;
  std::string_view label;
};

constexpr std::array<RowSpec, 9> kRows{{
    {Field::Omega, "omega"},
    {Field::Epsilon, "epsilon"},
    {Field::AOverA0, "a/a0"},
    {Field::RMin, "r_min"},
    {Field::RMax, "r_max"},
    {Field::DeltaTheta, "delta_theta"},
    {Field::VGround, "v_ground/c"},
    {Field::EnergyRatio, "E/mc^2"},
    {Field::WindingRaw, "winding"},
}};

void check_sink(const std::ostream& sink) {
  if (!sink) throw IoError("failed writing to output stream");
}

std::string ion_label(const ParameterRow& row) {
  return row.element ? row.element->ion_label() : "Z=" + std::to_string(row.params.ion.z);
}

std::string text_cell(const ParameterRow& row, Field field) {
  std::string s = format_significant(field_value(row.params, field), kTextDigits);
  if (field == Field::WindingRaw) s += " (" + std::to_string(row.params.winding) + ")";
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

void write_json_row(const ParameterRow& row, std::ostream& out, std::string_view indent) {
  const auto& p = row.params;
  out << indent << "{\n";
  out << indent << "  \"z\": " << p.ion.z << ",\n";
  out << indent << "  \"n_r\": " << p.ion.qn.n_r << ",\n";
  out << indent << "  \"n_theta\": " << p.ion.qn.n_theta << ",\n";
  if (row.element) {
    const auto& e = *row.element;
    out << indent << "  \"element\": {\"symbol\": " << json_string(e.symbol)
        << ", \"name\": " << json_string(e.name) << ", \"ion\": " << json_string(e.ion_label())
        << ", \"hypothetical\": " << (e.hypothetical ? "true" : "false") << "},\n";
  } else {
    out << indent << "  \"element\": null,\n";
  }
  out << indent << "  \"winding\": " << p.winding << ",\n";
  out << indent << "  \"parameters\": {";
  for (std::size_t i = 0; i < kAllFields.size(); ++i) {
    const Field f = kAllFields[i];
    out << (i == 0 ? "\n" : ",\n") << indent << "    " << json_string(field_name(f)) << ": "
        << format_significant(field_value(p, f), kLosslessDigits);
  }
  out << '\n' << indent << "  }\n" << indent << '}';
}

}  // namespace

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  return std::nullopt;
}

ParameterRow make_parameter_row(const IonSpec& ion) {
  ParameterRow row{orbit_parameters(ion), std::nullopt};
  if (ion.z >= kFirstTransuranic && ion.z <= kLastTransuranic) row.element = element_info(ion.z);
  return row;
}

int default_render_revolutions(const OrbitParameters& params) {
  const double turns = params.delta_theta / kTwoPi;
  const double residual = std::abs(params.delta_theta - kTwoPi * std::round(turns));
  if (residual <= kTwoPi / kMaxRenderRevolutions) return kMaxRenderRevolutions;
  return std::clamp(static_cast<int>(std::ceil(kTwoPi / residual)), 1, kMaxRenderRevolutions);
}

void write_trajectory_csv(const TrajectoryPolyline& poly, std::ostream& sink) {
  std::string buf = "theta,r,x,y\n";
  for (const auto& p : poly.points()) {
    buf += format_significant(p.theta, kCsvTrajectoryDigits);
    buf += ',';
    buf += format_significant(p.r, kCsvTrajectoryDigits);
    buf += ',';
    buf += format_significant(p.x, kCsvTrajectoryDigits);
    buf += ',';
    buf += format_significant(p.y, kCsvTrajectoryDigits);
    buf += '\n';
  }
  sink << buf;
  check_sink(sink);
}

void render_svg(const TrajectoryPolyline& poly, const RenderOptions& opts, std::ostream& sink) {
  if (opts.width_px < 64 || opts.height_px < 64) {
    throw ArgumentError("SVG width and height must be at least 64 px");
  }
  if (!(opts.margin_fraction >= 0.0 && opts.margin_fraction < 0.5)) {
    throw ArgumentError("margin fraction must lie in [0, 0.5)");
  }
  const auto& params = poly.params();
  const double extent = params.r_max / (1.0 - 2.0 * opts.margin_fraction);
  const double units_per_px = 2.0 * extent / std::min(opts.width_px, opts.height_px);
  const auto num = [](double v) { return format_significant(v, kSvgDigits); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(opts.width_px) + "\" height=\"" + std::to_string(opts.height_px) +
         "\" viewBox=\"" + num(-extent) + ' ' + num(-extent) + ' ' + num(2.0 * extent) + ' ' +
         num(2.0 * extent) + "\">\n";

  const auto& ion = params.ion;
  std::string title = "Z=" + std::to_string(ion.z);
  if (ion.z >= kFirstTransuranic && ion.z <= kLastTransuranic) {
    title = element_info(ion.z).ion_label();
  }
  svg += "  <title>" + title + " n_r=" + std::to_string(ion.qn.n_r) +
         " n_theta=" + std::to_string(ion.qn.n_theta) + ", " +
         std::to_string(poly.revolutions()) + " radial periods</title>\n";
  svg += "  <rect x=\"" + num(-extent) + "\" y=\"" + num(-extent) + "\" width=\"" +
         num(2.0 * extent) + "\" height=\"" + num(2.0 * extent) + "\" fill=\"white\"/>\n";

  if (opts.show_ground_circle) {
    const double ground = semi_major_axis(ion.z, QuantumNumbers{0, 1});
    svg += "  <circle id=\"ground-state\" cx=\"0\" cy=\"0\" r=\"" + num(ground) +
           "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" +
           num(opts.stroke_width_px * units_per_px) + "\"/>\n";
  }

  svg += "  <path id=\"orbit\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
         num(opts.stroke_width_px * units_per_px) + "\" stroke-linejoin=\"round\" d=\"";
  bool first = true;
  for (const auto& p : poly.points()) {
    svg += first ? "M" : " L";
    svg += num(p.x);
    svg += ',';
    svg += num(-p.y);
    first = false;
  }
  svg += "\"/>\n";

  if (opts.show_focus) {
    svg += "  <circle id=\"focus\" cx=\"0\" cy=\"0\" r=\"" + num(3.0 * units_per_px) +
           "\" fill=\"#d62728\"/>\n";
  }
  svg += "</svg>\n";
  sink << svg;
  check_sink(sink);
}

void write_parameter_table(std::span<const ParameterRow> rows, TableFormat format,
                           std::ostream& sink) {
  if (rows.empty()) throw ArgumentError("parameter table needs at least one row");

  switch (format) {
    case TableFormat::Text: {
      constexpr std::size_t kLabelWidth = 18;
      constexpr std::size_t kCellWidth = 18;
      std::string line = pad("Parameters vs Z", kLabelWidth);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto label = ion_label(rows[i]);
        line += i + 1 < rows.size() ? pad(label, kCellWidth) : label;
      }
      sink << line << '\n';
      for (const auto& spec : kRows) {
        line = pad(std::string(spec.label), kLabelWidth);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const auto cell = text_cell(rows[i], spec.field);
          line += i + 1 < rows.size() ? pad(cell, kCellWidth) : cell;
        }
        sink << line << '\n';
      }
      break;
    }
    case TableFormat::Csv: {
      sink << "z,n_r,n_theta,symbol,name";
      for (const Field f : kAllFields) sink << ',' << field_name(f);
      sink << ",winding\n";
      for (const auto& row : rows) {
        const auto& p = row.params;
        sink << p.ion.z << ',' << p.ion.qn.n_r << ',' << p.ion.qn.n_theta << ','
             << (row.element ? row.element->symbol : "") << ','
             << (row.element ? row.element->name : "");
        for (const Field f : kAllFields) {
          sink << ',' << format_significant(field_value(p, f), kLosslessDigits);
        }
        sink << ',' << p.winding << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      if (rows.size() == 1) {
        write_json_row(rows.front(), sink, "");
        sink << '\n';
        break;
      }
      sink << "[\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        write_json_row(rows[i], sink, "  ");
        sink << (i + 1 < rows.size() ? ",\n" : "\n");
      }
      sink << "]\n";
      break;
    }
  }
  check_sink(sink);
}

void write_parameter_listing(const ParameterRow& row, std::ostream& sink) {
  for (const auto& spec : kRows) {
    sink << pad(std::string(spec.label), 14) << text_cell(row, spec.field) << '\n';
  }
  check_sink(sink);
}

}  // namespace sommerfeld
