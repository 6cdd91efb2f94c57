// Command-line front end: evaluates the exact solutions, spectra, spectral
// weights and Green functions, and replays the verification suite. Emits
// JSON, CSV or plain two-column plot data with 17-significant-digit decimals.
//
// Exit codes: 0 success, 2 parameter validation failure, 3 tolerance breach
// in self-check mode.

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elliptica/elliptic.hpp"
#include "elliptica/fourier.hpp"
#include "elliptica/green.hpp"
#include "elliptica/io.hpp"
#include "elliptica/solutions.hpp"
#include "elliptica/verify.hpp"

namespace {

using elliptica::FieldConfig;
using elliptica::Family;
using json = nlohmann::json;

struct RunConfig {
  std::string family = "massless";
  double mu0 = 0.0;
  double mu = 1.0;
  double lambda = 2.0;
  int n = 16;
  double tol = 1e-8;
  std::string format = "csv";
  std::string output;  // empty = stdout
};

FieldConfig to_field_config(const RunConfig& run) {
  FieldConfig config;
  if (run.family == "massive") {
    config.kind = Family::MassiveSn;
  } else if (run.family == "massless") {
    config.kind = Family::MasslessSn;
  } else if (run.family == "ssb") {
    config.kind = Family::SsbDn;
  } else {
    throw std::invalid_argument("unknown family '" + run.family + "'");
  }
  config.mu0 = run.mu0;
  config.mu = run.mu;
  config.lambda = run.lambda;
  config.validate();
  return config;
}

json params_json(const RunConfig& run) {
  return {{"mu0", run.mu0}, {"mu", run.mu}, {"lambda", run.lambda}};
}

void emit(const RunConfig& run, const std::string& text) {
  if (run.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(run.output);
    if (!out) throw std::runtime_error("cannot open output file " + run.output);
    out << text;
  }
}

struct GridSpec {
  double start = 0.0;
  double stop = 10.0;
  int count = 100;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(text);
  if (!(in >> g.start >> colon1 >> g.stop >> colon2 >> g.count) || colon1 != ':' ||
      colon2 != ':' || g.count < 1) {
    throw std::invalid_argument("grid must be start:stop:count");
  }
  return g;
}

void add_common_options(CLI::App* cmd, RunConfig& run) {
  cmd->add_option("--family", run.family, "solution family: massive|massless|ssb");
  cmd->add_option("--mu0", run.mu0, "bare mass");
  cmd->add_option("--mu", run.mu, "integration-constant scale");
  cmd->add_option("--lambda", run.lambda, "quartic coupling");
  cmd->add_option("--n", run.n, "truncation / ladder length");
  cmd->add_option("--tol", run.tol, "tolerance for self checks");
  cmd->add_option("--format", run.format, "output format: json|csv|plot")
      ->check(CLI::IsMember({"json", "csv", "plot"}));
  cmd->add_flag_callback("--json", [&run] { run.format = "json"; },
                         "shorthand for --format json");
  cmd->add_flag_callback("--csv", [&run] { run.format = "csv"; },
                         "shorthand for --format csv");
  cmd->add_option("--output,-o", run.output, "output path (default stdout)");
  static std::string config_sink;
  cmd->add_option("--config", config_sink, "flat key=value configuration file");
}

// Flat key=value defaults, applied before parsing so that explicit flags win.
void load_config_file(const std::string& path, RunConfig& run) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "family") {
      run.family = value;
    } else if (key == "mu0") {
      run.mu0 = std::stod(value);
    } else if (key == "mu") {
      run.mu = std::stod(value);
    } else if (key == "lambda") {
      run.lambda = std::stod(value);
    } else if (key == "n") {
      run.n = std::stoi(value);
    } else if (key == "tol") {
      run.tol = std::stod(value);
    } else if (key == "format") {
      run.format = value;
    } else if (key == "output") {
      run.output = value;
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
}

std::string table_output(const RunConfig& run, const std::string& family,
                         const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows) {
  using elliptica::io::csv_row;
  using elliptica::io::format_g17;
  if (run.format == "json") {
    json doc;
    doc["family"] = family;
    doc["params"] = params_json(run);
    doc["results"] = json::array();
    doc["checks"] = json::array();
    for (const auto& row : rows) {
      json entry;
      for (std::size_t i = 0; i < columns.size(); ++i) entry[columns[i]] = row[i];
      doc["results"].push_back(entry);
    }
    return doc.dump(2) + "\n";
  }
  std::string out;
  if (run.format == "csv") {
    out += csv_row(columns);
  }
  const char sep = run.format == "plot" ? ' ' : ',';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += sep;
      out += format_g17(row[i]);
    }
    out += '\n';
  }
  return out;
}

int run_eval(const RunConfig& run, const GridSpec& grid, double theta, int branch) {
  const FieldConfig config = to_field_config(run);
  const elliptica::WaveFrame frame = elliptica::rest_frame(config, theta);
  const double w = frame.p[0];
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < grid.count; ++i) {
    const double u =
        grid.count == 1
            ? grid.start
            : grid.start + (grid.stop - grid.start) * i / (grid.count - 1);
    // u is the phase argument; sample along the rest-frame time ray t = u/p0.
    const std::array<double, 4> x{u / w, 0.0, 0.0, 0.0};
    rows.push_back({u, elliptica::evaluate(config, frame, x, branch)});
  }
  emit(run, table_output(run, run.family, {"u", "phi"}, rows));
  return 0;
}

int run_spectrum(const RunConfig& run) {
  const FieldConfig config = to_field_config(run);
  const std::vector<double> masses = elliptica::mass_spectrum(config, run.n);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    rows.push_back({double(i), masses[i]});
  }
  emit(run, table_output(run, run.family, {"n", "mass"}, rows));
  return 0;
}

int run_kl(const RunConfig& run) {
  const FieldConfig config = to_field_config(run);
  const elliptica::PoleSum poles = elliptica::kl_weights(config, run.n);
  if (run.format == "json") {
    json doc;
    doc["family"] = run.family;
    doc["params"] = params_json(run);
    doc["results"] = json::array();
    for (const auto& e : poles.entries) {
      doc["results"].push_back({{"mass", e.mass}, {"residue", e.residue}});
    }
    doc["epsilon"] = poles.epsilon;
    doc["contains_formal_zero_mode"] = poles.contains_formal_zero_mode;
    doc["checks"] = json::array();
    emit(run, doc.dump(2) + "\n");
    return 0;
  }
  if (run.format == "csv") {
    emit(run, elliptica::to_csv(poles));
    return 0;
  }
  std::vector<std::vector<double>> rows;
  for (const auto& e : poles.entries) rows.push_back({e.mass, e.residue});
  emit(run, table_output(run, run.family, {"mass", "residue"}, rows));
  return 0;
}

int run_green(const RunConfig& run, const GridSpec& grid, int phase_index) {
  const FieldConfig config = to_field_config(run);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < grid.count; ++i) {
    const double t =
        grid.count == 1
            ? grid.start
            : grid.start + (grid.stop - grid.start) * i / (grid.count - 1);
    rows.push_back({t, elliptica::rest_frame_green(config, phase_index, t)});
  }
  emit(run, table_output(run, run.family, {"t", "green"}, rows));
  return 0;
}

int run_verify(const RunConfig& run, const std::string& only, double inject) {
  elliptica::VerifyOptions options;
  options.only = only;
  options.tol = run.tol;
  options.inject_dispersion_error = inject;
  const std::vector<elliptica::CheckResult> checks =
      elliptica::run_verification(options);
  bool all_pass = true;
  if (run.format == "json") {
    json doc;
    doc["family"] = run.family;
    doc["params"] = params_json(run);
    doc["results"] = json::array();
    doc["checks"] = json::array();
    for (const auto& c : checks) {
      doc["checks"].push_back(
          {{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"tol", c.tol}});
      all_pass = all_pass && c.pass;
    }
    emit(run, doc.dump(2) + "\n");
  } else {
    std::string out = "check,pass,value,tol\n";
    for (const auto& c : checks) {
      out += elliptica::io::csv_row({c.name, c.pass ? "1" : "0",
                                     elliptica::io::format_g17(c.value),
                                     elliptica::io::format_g17(c.tol)});
      all_pass = all_pass && c.pass;
    }
    emit(run, out);
  }
  if (checks.empty()) {
    std::cerr << "verify: no check matches '" << only << "'\n";
    return 2;
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptica: elliptic-function field theory numerics"};
  app.require_subcommand(1);

  RunConfig run;
  if (const char* env = std::getenv("ELLIPTICA_TOL")) {
    run.tol = std::atof(env);
  }

  std::string config_path;
  try {
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg == "--config" && i + 1 < argc) {
        config_path = argv[i + 1];
      } else if (arg.rfind("--config=", 0) == 0) {
        config_path = arg.substr(9);
      }
    }
    if (!config_path.empty()) load_config_file(config_path, run);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string grid_text = "0:10:100";
  double theta = 0.0;
  int branch = +1;
  int phase_index = 0;
  std::string only;
  double inject = 0.0;

  CLI::App* eval = app.add_subcommand("eval", "sample a solution profile phi(u)");
  add_common_options(eval, run);
  eval->add_option("--grid", grid_text, "sampling grid start:stop:count");
  eval->add_option("--theta", theta, "phase offset");
  eval->add_option("--branch", branch, "Z2 branch, +1 or -1")
      ->check(CLI::IsMember({-1, 1}));

  CLI::App* spectrum = app.add_subcommand("spectrum", "pole mass ladder");
  add_common_options(spectrum, run);

  CLI::App* kl = app.add_subcommand("kl", "Kallen-Lehmann weights");
  add_common_options(kl, run);

  CLI::App* green = app.add_subcommand("green", "rest-frame Green function samples");
  add_common_options(green, run);
  green->add_option("--grid", grid_text, "time grid start:stop:count");
  green->add_option("--phase-index", phase_index, "Green-function branch index n");

  CLI::App* verify = app.add_subcommand("verify", "run the self-check suite");
  add_common_options(verify, run);
  verify->add_option("--only", only, "run a single named check");
  verify
      ->add_option("--inject-dispersion-error", inject,
                   "relative p^2 perturbation (negative control)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*eval) return run_eval(run, parse_grid(grid_text), theta, branch);
    if (*spectrum) return run_spectrum(run);
    if (*kl) return run_kl(run);
    if (*green) return run_green(run, parse_grid(grid_text), phase_index);
    if (*verify) return run_verify(run, only, inject);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
