// bathflow_cli.cpp — Command-line front end: coefficient flow, GHZ coherence
// analytics, single pipeline points, and (s, alpha) sweeps.

#include "bathflow/channels.hpp"
#include "bathflow/flow.hpp"
#include "bathflow/models.hpp"
#include "bathflow/spectral.hpp"
#include "bathflow/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bathflow;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

std::vector<double> parse_alpha_list(const std::string& text, int n) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
  if (values.size() == 1) values.assign(static_cast<std::size_t>(n), values.front());
  if (static_cast<int>(values.size()) != n)
    throw CLI::ValidationError("--alpha", "expected 1 or " + std::to_string(n) + " values");
  return values;
}

struct FlowArgs {
  std::string hamiltonian;
  std::string alpha = "0";
  double omega_c = 30.0;
  double omega0 = -1.0;
  bool auto_stop = false;
  double eta = 10.0;
};

int cmd_flow(const FlowArgs& args) {
  PauliOperator h(1);
  try {
    h = parse_pauli_operator(args.hamiltonian);
  } catch (const ParseError& e) {
    std::cerr << "error: cannot parse Hamiltonian: " << e.what() << "\n";
    return kExitUsage;
  }
  BathSpec bath;
  bath.omega_c = args.omega_c;
  bath.alpha = parse_alpha_list(args.alpha, h.qubit_count());
  bath.validate();

  double omega0 = args.omega0;
  if (args.auto_stop) {
    const StoppingResult stop = stopping_frequency(h, bath, args.eta);
    omega0 = stop.omega0_star;
    std::cout << "omega0* = " << format_g12(omega0);
    switch (stop.status) {
      case StoppingStatus::kConverged: std::cout << "  (self-consistent)\n"; break;
      case StoppingStatus::kBoundary:
        std::cout << "  (boundary: eta*norm exceeds omega_c already at the cutoff)\n";
        break;
      case StoppingStatus::kFullyLocalized:
        std::cout << "  (fully localized: floor reached, coefficients flow to zero)\n";
        break;
    }
  } else if (!(omega0 > 0.0)) {
    std::cerr << "error: provide --omega0 or --auto\n";
    return kExitUsage;
  }

  const PauliOperator h_eff = flow_closed_form(h, bath, omega0);
  std::cout << "hamiltonian: " << format_pauli_operator(h) << "\n";
  std::cout << "omega0/omega_c = " << format_g12(omega0 / bath.omega_c) << "\n";
  std::printf("%-12s %-18s %-10s %-18s\n", "string", "delta", "c", "delta_eff");
  for (const auto& [s, v] : h.terms()) {
    const double c = bath_exponent(s, bath);
    std::printf("%-12s %-18s %-10s %-18s\n", s.str().c_str(), format_g12(v).c_str(),
                format_g12(c).c_str(), format_g12(h_eff.coefficient(s)).c_str());
  }
  std::cout << "effective: " << format_pauli_operator(h_eff) << "\n";
  return kExitOk;
}

struct GhzArgs {
  int n = 2;
  double alpha = 0.0;
  double ratio = 1.0;
};

int cmd_ghz(const GhzArgs& args) {
  const double analytic = ghz_offdiagonal_factor(args.n, args.alpha, args.ratio);
  std::cout << "analytic factor (ratio^(n*alpha)) = " << format_g12(analytic) << "\n";
  if (args.n > 12) {
    std::cout << "channel check skipped (n > 12)\n";
    return kExitOk;
  }
  const double omega_c = 1.0;  // only the ratio enters the channel
  const BathSpec bath = BathSpec::uniform(args.n, args.alpha, omega_c);
  const DensityMatrix ghz = DensityMatrix::pure(ghz_state(args.n));
  const DensityMatrix deph = dephase_all(ghz, bath, args.ratio * omega_c);
  const double measured = deph.matrix()(0, deph.dim() - 1).real() * 2.0;
  std::cout << "channel-measured factor            = " << format_g12(measured) << "\n";
  if (std::abs(measured - analytic) > 1e-12) {
    std::cerr << "error: channel measurement deviates from the analytic factor by "
              << format_g12(std::abs(measured - analytic)) << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

void print_record(const SweepRecord& rec) {
  std::cout << "s                = " << format_g12(rec.s) << "\n"
            << "alpha            = " << format_g12(rec.alpha) << "\n"
            << "omega0_star      = " << format_g12(rec.omega0_star) << "\n"
            << "E0_ideal         = " << format_g12(rec.e0_ideal) << "\n"
            << "E0_eff           = " << format_g12(rec.e0_eff) << "\n"
            << "fidelity_sb      = " << format_g12(rec.metrics.fidelity_sb) << "\n"
            << "fidelity_reduced = " << format_g12(rec.metrics.fidelity_reduced) << "\n"
            << "purity           = " << format_g12(rec.metrics.purity) << "\n"
            << "entropy          = " << format_g12(rec.metrics.entropy) << "\n"
            << "trace_distance   = " << format_g12(rec.metrics.trace_distance) << "\n"
            << "regime           = " << rec.regime << "\n";
  if (!rec.flags.empty()) {
    std::cout << "flags            = ";
    for (std::size_t i = 0; i < rec.flags.size(); ++i)
      std::cout << (i ? ";" : "") << rec.flags[i];
    std::cout << "\n";
  }
}

SweepConfig build_config(const std::string& config_path, const std::string& figure,
                         const std::vector<std::string>& overrides) {
  SweepConfig cfg;
  if (!figure.empty() && figure != "s1") cfg = figure_preset(figure);
  else if (!config_path.empty()) cfg = load_sweep_config(config_path);
  else throw ConfigError("provide --config or --figure");
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw ConfigError("override '" + kv + "': expected key=value");
    apply_config_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  return cfg;
}

int run_figure_s1(const std::string& out_dir) {
  const std::string path = out_dir.empty() ? "figs1.csv" : out_dir + "/figs1.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitUsage;
  }
  write_flow_trajectories(out, 30.0, 1.0, {0.0, 0.5, 1.0, 1.5}, 400, 0.3);
  std::cout << "wrote " << path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bathflow: Pauli-string coefficient flow under Ohmic dephasing baths"};
  app.require_subcommand(1);

  FlowArgs flow_args;
  CLI::App* flow_cmd = app.add_subcommand("flow", "Flow a Hamiltonian to a lower cutoff");
  flow_cmd->add_option("hamiltonian", flow_args.hamiltonian,
                       "Operator text, e.g. \"1.0*X\" or \"0.5*XXI + 0.25*ZZI\"")
      ->required();
  flow_cmd->add_option("--alpha", flow_args.alpha,
                       "Per-qubit couplings, comma-separated or one value for all qubits");
  flow_cmd->add_option("--omega-c", flow_args.omega_c, "Bath cutoff frequency");
  flow_cmd->add_option("--omega0", flow_args.omega0, "Target cutoff");
  flow_cmd->add_flag("--auto", flow_args.auto_stop,
                     "Solve the stopping frequency instead of taking --omega0");
  flow_cmd->add_option("--eta", flow_args.eta, "Stopping margin omega0 = eta*norm (with --auto)");

  GhzArgs ghz_args;
  CLI::App* ghz_cmd = app.add_subcommand("ghz", "GHZ off-diagonal suppression factor");
  ghz_cmd->add_option("--n", ghz_args.n, "Qubit count")->required();
  ghz_cmd->add_option("--alpha", ghz_args.alpha, "Uniform coupling")->required();
  ghz_cmd->add_option("--ratio", ghz_args.ratio, "omega0/omega_c")->required();

  std::string config_path, figure, out_dir;
  std::vector<std::string> overrides;
  double run_s = -1.0, run_alpha = -1.0;

  CLI::App* run_cmd = app.add_subcommand("run", "Single pipeline point");
  run_cmd->add_option("--config", config_path, "Sweep config file");
  run_cmd->add_option("--figure", figure, "Preset: 2, s2, s3 or s4");
  run_cmd->add_option("--set", overrides, "Config override key=value (repeatable)");
  run_cmd->add_option("--s", run_s, "Annealing parameter (default: first of the s grid)");
  run_cmd->add_option("--alpha", run_alpha, "Coupling (default: first of the alpha grid)");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Full (s, alpha) sweep with file output");
  sweep_cmd->add_option("--config", config_path, "Sweep config file");
  sweep_cmd->add_option("--figure", figure, "Preset: s1, 2, s2, s3 or s4");
  sweep_cmd->add_option("--set", overrides, "Config override key=value (repeatable)");
  sweep_cmd->add_option("--out-dir", out_dir, "Directory for output files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (flow_cmd->parsed()) return cmd_flow(flow_args);
    if (ghz_cmd->parsed()) return cmd_ghz(ghz_args);
    if (run_cmd->parsed()) {
      const SweepConfig cfg = build_config(config_path, figure, overrides);
      const double s = run_s >= 0.0 ? run_s : cfg.s_grid.front();
      const double alpha = run_alpha >= 0.0 ? run_alpha : cfg.alpha_grid.empty()
                                                              ? default_alpha_grid().front()
                                                              : cfg.alpha_grid.front();
      print_record(run_point(cfg, s, alpha));
      return kExitOk;
    }
    if (sweep_cmd->parsed()) {
      if (figure == "s1") return run_figure_s1(out_dir);
      const SweepConfig cfg = build_config(config_path, figure, overrides);
      const std::vector<SweepRecord> records = run_sweep(cfg);
      write_outputs(cfg, records, out_dir);
      std::size_t flagged = 0;
      for (const SweepRecord& r : records) flagged += r.flags.empty() ? 0 : 1;
      std::cout << "points: " << records.size() << "\n"
                << "flagged: " << flagged << "\n"
                << "csv: " << cfg.output_csv << "\n";
      if (!cfg.output_json.empty()) std::cout << "json: " << cfg.output_json << "\n";
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
