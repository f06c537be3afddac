#include <sommerfeld/reference_tables.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include <sommerfeld/elements.hpp>
#include <sommerfeld/model.hpp>

#include "format.hpp"
#include "reference_data.hpp"

namespace sommerfeld {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::string_view, kAllFields.size()> kFieldNames{
    "omega", "epsilon", "a_over_a0", "r_min", "r_max",
    "delta_theta", "v_ground", "energy_ratio", "winding_raw",
};

std::size_t index_of(Field field) { return static_cast<std::size_t>(field); }

std::vector<ReferenceColumn> load_columns() {
  std::vector<ReferenceColumn> columns;
  std::istringstream in{std::string(detail::reference_tables_jsonl())};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    columns.push_back(parse_column(line));
  }
  std::sort(columns.begin(), columns.end(),
            [](const auto& a, const auto& b) { return a.z < b.z; });
  return columns;
}

std::string fmt(double v, int digits = 9) { return detail::format_significant(v, digits); }

void write_entry(std::ostream& out, const Discrepancy& d, const ReferenceColumn& column) {
  out << "  Z=" << d.z << ' ' << column.ion_label << " (table " << column.table_no << ") "
      << field_name(d.field) << ": printed " << d.printed_literal << ", recomputed "
      << fmt(d.recomputed);
  if (d.tolerance.kind == ToleranceKind::Absolute) {
    out << ", abs.err " << fmt(d.absolute_error, 3) << " > " << fmt(d.tolerance.value, 3);
  } else {
    out << ", rel.err " << fmt(d.relative_error, 3) << " > " << fmt(d.tolerance.value, 3);
  }
  if (d.verdict == Verdict::NewDiscrepancy) {
    out << (d.agrees_to_printed_digits ? " [agrees to the printed digits]"
                                       : " [disagrees beyond the printed digits]");
  }
  out << '\n';
}

}  // namespace

std::string_view field_name(Field field) { return kFieldNames[index_of(field)]; }

std::optional<Field> parse_field(std::string_view name) {
  for (const Field f : kAllFields) {
    if (field_name(f) == name) return f;
  }
  return std::nullopt;
}

double field_value(const OrbitParameters& p, Field field) {
  switch (field) {
    case Field::Omega: return p.omega;
    case Field::Epsilon: return p.epsilon;
    case Field::AOverA0: return p.a_over_a0;
    case Field::RMin: return p.r_min;
    case Field::RMax: return p.r_max;
    case Field::DeltaTheta: return p.delta_theta;
    case Field::VGround: return p.ground_speed;
    case Field::EnergyRatio: return p.energy_ratio;
    case Field::WindingRaw: return p.winding_raw;
  }
  throw std::logic_error("unknown field");
}

double PrintedValue::half_unit() const {
  const auto e = literal.find_first_of("eE");
  const std::string_view mantissa = std::string_view(literal).substr(0, e);
  int exponent = 0;
  if (e != std::string::npos) {
    const char* first = literal.data() + e + 1;
    if (*first == '+') ++first;
    std::from_chars(first, literal.data() + literal.size(), exponent);
  }
  const auto dot = mantissa.find('.');
  const int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
  return 0.5 * std::pow(10.0, exponent - decimals);
}

PrintedValue parse_printed(std::string_view literal) {
  PrintedValue out;
  out.literal = std::string(literal);
  const auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), out.value);
  if (ec != std::errc() || ptr != literal.data() + literal.size()) {
    throw std::invalid_argument("malformed printed number: '" + out.literal + "'");
  }
  return out;
}

const PrintedValue& ReferenceColumn::cell(Field field) const { return cells[index_of(field)]; }

bool ReferenceColumn::known_erratum(Field field) const {
  return std::find(known_errata.begin(), known_errata.end(), field) != known_errata.end();
}

ReferenceColumn parse_column(std::string_view record) {
  ordered_json j;
  try {
    j = ordered_json::parse(record);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("reference record is not JSON: ") + e.what());
  }
  try {
    ReferenceColumn c;
    c.table_no = j.at("table").get<int>();
    c.z = j.at("z").get<int>();
    c.ion_label = j.at("ion").get<std::string>();
    for (const Field f : kAllFields) {
      c.cells[index_of(f)] = parse_printed(j.at(std::string(field_name(f))).get<std::string>());
    }
    const auto rotation = j.at("rotation").get<std::string>();
    if (rotation == "CW") {
      c.rotation = Rotation::CW;
    } else if (rotation == "CCW") {
      c.rotation = Rotation::CCW;
    } else {
      throw std::invalid_argument("unknown rotation label '" + rotation + "'");
    }
    for (const auto& name : j.at("errata")) {
      const auto f = parse_field(name.get<std::string>());
      if (!f) throw std::invalid_argument("unknown errata field " + name.dump());
      c.known_errata.push_back(*f);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed reference record: ") + e.what());
  }
}

std::string print_column(const ReferenceColumn& c) {
  ordered_json j;
  j["table"] = c.table_no;
  j["z"] = c.z;
  j["ion"] = c.ion_label;
  for (const Field f : kAllFields) j[std::string(field_name(f))] = c.cell(f).literal;
  j["rotation"] = c.rotation == Rotation::CW ? "CW" : "CCW";
  j["errata"] = ordered_json::array();
  for (const Field f : c.known_errata) j["errata"].push_back(std::string(field_name(f)));
  return j.dump();
}

std::span<const ReferenceColumn> reference_columns() {
  static const std::vector<ReferenceColumn> columns = load_columns();
  return columns;
}

const ReferenceColumn* find_column(int z) {
  const auto columns = reference_columns();
  const auto it = std::find_if(columns.begin(), columns.end(),
                               [z](const ReferenceColumn& c) { return c.z == z; });
  return it == columns.end() ? nullptr : &*it;
}

ToleranceMap default_tolerances() {
  ToleranceMap map;
  for (const Field f : kAllFields) map[f] = Tolerance{ToleranceKind::Relative, 5e-5};
  map[Field::VGround] = Tolerance{ToleranceKind::Absolute, 5e-4};
  return map;
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::WithinTolerance: return "WithinTolerance";
    case Verdict::KnownErratum: return "KnownErratum";
    case Verdict::NewDiscrepancy: return "NewDiscrepancy";
  }
  return "?";
}

std::vector<Discrepancy> validate_all(const ToleranceMap& tolerances) {
  const ToleranceMap defaults = default_tolerances();
  std::vector<Discrepancy> out;
  for (const auto& column : reference_columns()) {
    const auto params = orbit_parameters(IonSpec{column.z, {1, 1}});
    for (const Field f : kAllFields) {
      const auto it = tolerances.find(f);
      const Tolerance tol = it != tolerances.end() ? it->second : defaults.at(f);
      const PrintedValue& printed = column.cell(f);

      Discrepancy d;
      d.z = column.z;
      d.field = f;
      d.printed = printed.value;
      d.printed_literal = printed.literal;
      d.recomputed = field_value(params, f);
      d.absolute_error = std::abs(d.printed - d.recomputed);
      d.relative_error = d.absolute_error / std::abs(d.recomputed);
      d.tolerance = tol;
      d.agrees_to_printed_digits = d.absolute_error <= printed.half_unit() * (1.0 + 1e-9);

      const double err = tol.kind == ToleranceKind::Absolute ? d.absolute_error : d.relative_error;
      if (err <= tol.value) {
        d.verdict = Verdict::WithinTolerance;
      } else if (column.known_erratum(f)) {
        d.verdict = Verdict::KnownErratum;
      } else {
        d.verdict = Verdict::NewDiscrepancy;
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

bool has_new_discrepancies(std::span<const Discrepancy> discrepancies) {
  return std::any_of(discrepancies.begin(), discrepancies.end(),
                     [](const Discrepancy& d) { return d.verdict == Verdict::NewDiscrepancy; });
}

std::string errata_report(std::span<const Discrepancy> discrepancies) {
  std::size_t within = 0;
  std::size_t known = 0;
  std::size_t fresh = 0;
  for (const auto& d : discrepancies) {
    switch (d.verdict) {
      case Verdict::WithinTolerance: ++within; break;
      case Verdict::KnownErratum: ++known; break;
      case Verdict::NewDiscrepancy: ++fresh; break;
    }
  }

  std::ostringstream out;
  out << "Reference table validation (n_r = n_theta = 1, alpha = 1/"
      << fmt(kConstants.inv_alpha, 12) << ")\n";
  out << "  columns: " << reference_columns().size() << ", cells: " << discrepancies.size()
      << '\n';
  out << "  within tolerance: " << within << ", known errata: " << known
      << ", new discrepancies: " << fresh << "\n\n";

  const auto section = [&](Verdict verdict, std::string_view title) {
    out << title << '\n';
    bool any = false;
    for (const auto& d : discrepancies) {
      if (d.verdict != verdict) continue;
      write_entry(out, d, *find_column(d.z));
      any = true;
    }
    if (!any) out << "  (none)\n";
    out << '\n';
  };
  section(Verdict::KnownErratum, "Known errata");
  section(Verdict::NewDiscrepancy, "New discrepancies");

  out << "Notes\n";
  if (const auto* utq = find_column(134)) {
    const auto params = orbit_parameters(IonSpec{134, {1, 1}});
    out << "  - Z=134 " << utq->ion_label << ": rosette caption states winding number seven; "
        << "printed raw winding " << utq->cell(Field::WindingRaw).literal
        << " rounds to " << params.winding << ".\n";
  }
  out << "  - Table 8 holds Z=127..131 (ion charges 126+..130+); Z=130 (Utn) has no element\n"
         "    entry in the accompanying text, whose Z=131 and Z=132 entries point at columns 5 and 6.\n";
  out << "  - Z=132 (Utb) has no printed column; it is computed but not validated.\n";
  out << "  - Ion headers misprint Cm as \"Cu\" (Z=96); the text names Z=120 \"Ube\", Z=127 \"Ubh\".\n";
  for (const auto& m : tier_winding_mismatches()) {
    const auto& tier = classify(m.z);
    out << "  - Z=" << m.z << " is classed " << tier.display() << " but its winding "
        << fmt(m.winding_raw, 4) << " rounds to " << m.winding << ".\n";
  }
  return out.str();
}

}  // namespace sommerfeld
