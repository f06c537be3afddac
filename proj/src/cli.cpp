#include <sommerfeld/cli.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <vector>

#include "CLI11.hpp"

#include <sommerfeld/elements.hpp>
#include <sommerfeld/errors.hpp>
#include <sommerfeld/geometry.hpp>
#include <sommerfeld/io.hpp>
#include <sommerfeld/model.hpp>
#include <sommerfeld/reference_tables.hpp>

namespace sommerfeld::cli {

namespace {

struct Options {
  int z = 0;
  int z_from = kFirstTransuranic;
  int z_to = kLastTransuranic;
  int n_r = 1;
  int n_theta = 1;
  std::optional<int> revolutions;
  int samples = 1024;
  std::string format = "text";
  bool json = false;
  std::string out_path;

  [[nodiscard]] TableFormat table_format() const {
    return json ? TableFormat::Json : *parse_table_format(format);
  }
  [[nodiscard]] IonSpec ion() const { return IonSpec{z, {n_r, n_theta}}; }
};

void add_quantum_numbers(CLI::App* cmd, Options& o) {
  cmd->add_option("--nr", o.n_r, "Radial quantum number (>= 0)")->capture_default_str();
  cmd->add_option("--ntheta", o.n_theta, "Azimuthal quantum number (>= 1)")
      ->capture_default_str();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--json", o.json, "Shorthand for --format json");
}

void add_out(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out_path, "Write results to this file instead of stdout");
}

void add_charge(CLI::App* cmd, Options& o) {
  cmd->add_option("--z", o.z, "Nuclear charge")->required();
}

int cmd_params(const Options& o, std::ostream& out) {
  const auto row = make_parameter_row(o.ion());
  const auto format = o.table_format();
  if (format == TableFormat::Text) {
    write_parameter_listing(row, out);
  } else {
    write_parameter_table(std::span(&row, 1), format, out);
  }
  return kSuccess;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.z_from > o.z_to) throw ArgumentError("--z-from must not exceed --z-to");
  std::vector<ParameterRow> rows;
  for (int z = o.z_from; z <= o.z_to; ++z) {
    rows.push_back(make_parameter_row(IonSpec{z, {o.n_r, o.n_theta}}));
  }
  write_parameter_table(rows, o.table_format(), out);
  return kSuccess;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const auto params = orbit_parameters(o.ion());
  write_trajectory_csv(sample_trajectory(params, o.revolutions.value_or(1), o.samples), out);
  return kSuccess;
}

int cmd_render(const Options& o, std::ostream& out) {
  const auto params = orbit_parameters(o.ion());
  RenderOptions opts;
  opts.revolutions = o.revolutions;
  const int revolutions = opts.revolutions.value_or(default_render_revolutions(params));
  render_svg(sample_trajectory(params, revolutions, o.samples), opts, out);
  return kSuccess;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto& tier = classify(o.z);
  if (o.json) {
    out << "{\"z\": " << o.z << ", \"tier\": \"" << tier.label << "\", \"description\": \""
        << tier.description << "\"}\n";
  } else {
    out << tier.display() << '\n';
  }
  return kSuccess;
}

int cmd_validate(std::ostream& out) {
  const auto discrepancies = validate_all();
  out << errata_report(discrepancies);
  return has_new_discrepancies(discrepancies) ? kValidationFailed : kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bohr-Sommerfeld relativistic orbits of hydrogen-like ions", "sommerfeld"};
  app.require_subcommand(1);

  Options o;

  auto* params = app.add_subcommand("params", "Orbit parameters for one ion");
  add_charge(params, o);
  add_quantum_numbers(params, o);
  add_format(params, o);
  add_out(params, o);

  auto* table = app.add_subcommand("table", "Parameter table over a range of Z");
  table->add_option("--z-from", o.z_from, "First Z")->capture_default_str();
  table->add_option("--z-to", o.z_to, "Last Z (inclusive)")->capture_default_str();
  add_quantum_numbers(table, o);
  add_format(table, o);
  add_out(table, o);

  auto* orbit = app.add_subcommand("orbit", "Sampled trajectory as CSV");
  add_charge(orbit, o);
  add_quantum_numbers(orbit, o);
  orbit->add_option("--revolutions", o.revolutions, "Radial periods to sample (default 1)");
  orbit->add_option("--samples", o.samples, "Samples per radial period")->capture_default_str();
  add_out(orbit, o);

  auto* render = app.add_subcommand("render", "Rosette as standalone SVG");
  add_charge(render, o);
  add_quantum_numbers(render, o);
  render->add_option("--revolutions", o.revolutions,
                     "Radial periods to draw (default: one full apse-line turn, max 64)");
  render->add_option("--samples", o.samples, "Samples per radial period")->capture_default_str();
  add_out(render, o);

  auto* classify_cmd = app.add_subcommand("classify", "Coulomb field-strength tier");
  add_charge(classify_cmd, o);
  classify_cmd->add_flag("--json", o.json, "JSON output");
  add_out(classify_cmd, o);

  auto* validate = app.add_subcommand("validate", "Compare recomputation with the golden tables");
  add_out(validate, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
      file = std::make_unique<std::ofstream>(o.out_path, std::ios::binary | std::ios::trunc);
      if (!*file) throw IoError("cannot open '" + o.out_path + "' for writing");
      sink = file.get();
    }

    int code = kSuccess;
    if (*params) code = cmd_params(o, *sink);
    else if (*table) code = cmd_table(o, *sink);
    else if (*orbit) code = cmd_orbit(o, *sink);
    else if (*render) code = cmd_render(o, *sink);
    else if (*classify_cmd) code = cmd_classify(o, *sink);
    else if (*validate) code = cmd_validate(*sink);

    if (file) {
      file->close();
      if (!*file) throw IoError("failed writing '" + o.out_path + "'");
    }
    return code;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const NotFoundError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace sommerfeld::cli
