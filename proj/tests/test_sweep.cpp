#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bathflow/sweep.hpp"

#include <cmath>
#include <sstream>

using namespace bathflow;

namespace {

SweepConfig small_ring_config() {
  SweepConfig cfg;
  cfg.instance = random_afm_instance(6, 2, 42);
  cfg.instance_n = 6;
  cfg.omega_c = 1000.0;
  cfg.s_grid = {0.8};
  cfg.alpha_grid = {0.0, 0.05};
  cfg.output_csv = "";
  return cfg;
}

}  // namespace

TEST_CASE("classify_regime thresholds") {
  CHECK(classify_regime(12, 2, 0.01, {}) == "weak coupling");
  CHECK(classify_regime(12, 2, 0.05, {}) == "LCGD");   // k*alpha = 0.1 < 0.3 <= n*alpha
  CHECK(classify_regime(12, 2, 0.2, {}) == "partially localized");
  CHECK(classify_regime(12, 2, 0.6, {}) == "localized");
  CHECK(classify_regime(12, 2, 1.0, {}) == "classical");
  RegimeThresholds custom{0.1, 2.0};
  CHECK(classify_regime(12, 2, 0.6, custom) == "partially localized");
}

TEST_CASE("run_point with no bath coupling is ideal") {
  const SweepConfig cfg = small_ring_config();
  const SweepRecord rec = run_point(cfg, 0.8, 0.0);
  CHECK(rec.metrics.fidelity_sb == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rec.metrics.fidelity_reduced == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rec.metrics.purity == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(rec.metrics.entropy) < 1e-9);
  CHECK(std::abs(rec.metrics.trace_distance) < 1e-6);
  CHECK(rec.e0_ideal == doctest::Approx(rec.e0_eff));
  CHECK(rec.flags.empty());
  CHECK(rec.regime == "weak coupling");
}

TEST_CASE("run_point on the critical single-qubit model flags localization") {
  SweepConfig cfg;
  cfg.inline_h = single_spin_boson(1.0);
  cfg.omega_c = 30.0;
  cfg.s_grid = {0.0};
  cfg.alpha_grid = {1.0};
  cfg.output_csv = "";
  const SweepRecord rec = run_point(cfg, 0.0, 1.0);
  CHECK(rec.flags == std::vector<std::string>{"fully_localized"});
  CHECK(rec.omega0_star == doctest::Approx(30.0 * 1e-6));
  CHECK(rec.regime == "classical");
}

TEST_CASE("run_sweep of a single point equals run_point") {
  SweepConfig cfg = small_ring_config();
  cfg.alpha_grid = {0.05};
  const std::vector<SweepRecord> records = run_sweep(cfg);
  REQUIRE(records.size() == 1);
  const SweepRecord direct = run_point(cfg, 0.8, 0.05);
  CHECK(records[0].s == direct.s);
  CHECK(records[0].alpha == direct.alpha);
  CHECK(records[0].omega0_star == direct.omega0_star);
  CHECK(records[0].e0_ideal == direct.e0_ideal);
  CHECK(records[0].e0_eff == direct.e0_eff);
  CHECK(records[0].metrics.fidelity_sb == direct.metrics.fidelity_sb);
  CHECK(records[0].metrics.purity == direct.metrics.purity);
  CHECK(records[0].regime == direct.regime);
}

TEST_CASE("run_sweep sorts the grid and is deterministic") {
  SweepConfig cfg = small_ring_config();
  cfg.alpha_grid = {0.05, 0.0, 0.02};
  const std::vector<SweepRecord> a = run_sweep(cfg);
  cfg.alpha_grid = {0.02, 0.05, 0.0};
  const std::vector<SweepRecord> b = run_sweep(cfg);
  CHECK(to_csv(a) == to_csv(b));
  REQUIRE(a.size() == 3);
  CHECK(a[0].alpha == 0.0);
  CHECK(a[1].alpha == 0.02);
  CHECK(a[2].alpha == 0.05);
}

TEST_CASE("per-point failures become error records") {
  SweepConfig cfg;
  cfg.inline_h = PauliOperator(2);  // zero operator
  cfg.s_grid = {0.5};
  cfg.alpha_grid = {0.1};
  cfg.output_csv = "";
  const std::vector<SweepRecord> records = run_sweep(cfg);
  REQUIRE(records.size() == 1);
  REQUIRE(records[0].flags.size() == 1);
  CHECK(records[0].flags[0].rfind("error:", 0) == 0);
  CHECK(std::isnan(records[0].metrics.purity));
  // The error row still prints.
  CHECK(to_csv(records).find("error") != std::string::npos);
}

TEST_CASE("csv output format") {
  SweepConfig cfg = small_ring_config();
  cfg.alpha_grid = {0.0};
  const std::string csv = to_csv(run_sweep(cfg));
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header ==
        "s,alpha,omega0_star,E0_ideal,E0_eff,fidelity_sb,fidelity_reduced,purity,entropy,"
        "trace_distance,regime,flags");
  CHECK(csv.find("0.8,0,") == csv.find('\n') + 1);  // %.12g prints 0.8 and 0 exactly
}

TEST_CASE("json mirror carries the same formatted values") {
  SweepConfig cfg = small_ring_config();
  cfg.alpha_grid = {0.05};
  const std::vector<SweepRecord> records = run_sweep(cfg);
  const std::string json = to_json(records);
  CHECK(json.find("\"s\": " + format_g12(records[0].s)) != std::string::npos);
  CHECK(json.find("\"purity\": " + format_g12(records[0].metrics.purity)) != std::string::npos);
  CHECK(json.find("\"regime\": \"" + records[0].regime + "\"") != std::string::npos);
}

TEST_CASE("flow trajectory export") {
  std::ostringstream os;
  write_flow_trajectories(os, 30.0, 1.0, {0.0, 1.0}, 10, 3.0);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "c,omega0,delta,delta_over_omega0");
  int rows = 0;
  double c1_first_ratio = -1.0;
  while (std::getline(is, line)) {
    ++rows;
    if (line.rfind("1,", 0) == 0) {
      const auto last_comma = line.rfind(',');
      const double ratio = std::stod(line.substr(last_comma + 1));
      if (c1_first_ratio < 0) c1_first_ratio = ratio;
      CHECK(ratio == doctest::Approx(c1_first_ratio).epsilon(1e-12));
    }
  }
  CHECK(rows == 2 * 11);  // two couplings, steps+1 samples each
}

TEST_CASE("config parsing round trip") {
  std::istringstream in(
      "# instance\n"
      "n = 6\n"
      "degree = 2\n"
      "seed = 42\n"
      "s = 0.8\n"
      "alpha = 0,log:1e-3:0.25:5\n"
      "omega_c = 1000\n"
      "eta = 8\n"
      "ode_steps = 500\n"
      "entropy = nats\n"
      "regime_small = 0.2\n"
      "output_csv = out.csv\n"
      "output_json = out.json\n");
  const SweepConfig cfg = parse_sweep_config(in);
  REQUIRE(cfg.instance.has_value());
  CHECK(cfg.instance->n == 6);
  CHECK(cfg.instance->edges == random_afm_instance(6, 2, 42).edges);
  CHECK(cfg.omega_c == 1000.0);
  CHECK(cfg.eta == 8.0);
  CHECK(cfg.ode_steps == 500);
  CHECK(cfg.entropy_base == EntropyBase::kNats);
  CHECK(cfg.thresholds.small == 0.2);
  REQUIRE(cfg.alpha_grid.size() == 6);
  CHECK(cfg.alpha_grid[0] == 0.0);
  CHECK(cfg.alpha_grid[1] == doctest::Approx(1e-3));
  CHECK(cfg.alpha_grid[5] == doctest::Approx(0.25));
  CHECK(cfg.output_csv == "out.csv");
  CHECK(cfg.output_json == "out.json");
}

TEST_CASE("config parsing accepts edge lists and inline Hamiltonians") {
  std::istringstream edges_in("edges = 0-1,1-2\ns = 0.5\nalpha = 0.1\n");
  const SweepConfig cfg = parse_sweep_config(edges_in);
  REQUIRE(cfg.instance.has_value());
  CHECK(cfg.instance->n == 3);
  CHECK(cfg.instance->edges.size() == 2);

  std::istringstream inline_in("hamiltonian = 1.0*X\nalpha = 0.5\ns = 0\n");
  const SweepConfig cfg2 = parse_sweep_config(inline_in);
  REQUIRE(cfg2.inline_h.has_value());
  CHECK(cfg2.inline_h->coefficient(PauliString("X")) == doctest::Approx(1.0));
}

TEST_CASE("config errors") {
  std::istringstream unknown("frobnicate = 1\n");
  CHECK_THROWS_AS(parse_sweep_config(unknown), ConfigError);
  std::istringstream dup("eta = 5\neta = 6\n");
  CHECK_THROWS_AS(parse_sweep_config(dup), ConfigError);
  std::istringstream noeq("eta 5\n");
  CHECK_THROWS_AS(parse_sweep_config(noeq), ConfigError);
  std::istringstream bad_eta("eta = 0.5\n");
  CHECK_THROWS_AS(parse_sweep_config(bad_eta), ConfigError);
  std::istringstream mixed("hamiltonian = 1*X\nn = 3\n");
  CHECK_THROWS_AS(parse_sweep_config(mixed), ConfigError);
  std::istringstream bad_grid("alpha = log:0:1:5\n");
  CHECK_THROWS_AS(parse_sweep_config(bad_grid), ConfigError);
}

TEST_CASE("config overrides") {
  SweepConfig cfg = small_ring_config();
  apply_config_override(cfg, "eta", "12");
  CHECK(cfg.eta == 12.0);
  apply_config_override(cfg, "alpha", "lin:0:1:3");
  REQUIRE(cfg.alpha_grid.size() == 3);
  CHECK(cfg.alpha_grid[1] == doctest::Approx(0.5));
  apply_config_override(cfg, "seed", "7");
  CHECK(cfg.instance->edges == random_afm_instance(6, 2, 7).edges);  // n=6 is kept
  CHECK_THROWS_AS(apply_config_override(cfg, "nope", "1"), ConfigError);
}

TEST_CASE("figure presets") {
  const SweepConfig fig2 = figure_preset("2");
  REQUIRE(fig2.instance.has_value());
  CHECK(fig2.instance->n == 12);
  CHECK(fig2.instance->edges.size() == 12);
  CHECK(fig2.s_grid == std::vector<double>{0.8});
  CHECK(fig2.alpha_grid.size() == 41);
  CHECK(fig2.output_csv == "fig2.csv");

  const SweepConfig s4 = figure_preset("s4");
  CHECK(s4.s_grid == std::vector<double>{0.7});
  CHECK(s4.instance->edges != fig2.instance->edges);

  CHECK_THROWS_AS(figure_preset("s9"), ConfigError);
}

TEST_CASE("default alpha grid shape") {
  const std::vector<double> grid = default_alpha_grid();
  REQUIRE(grid.size() == 41);
  CHECK(grid.front() == 0.0);
  CHECK(grid[1] == doctest::Approx(1e-3));
  CHECK(grid.back() == doctest::Approx(0.25));
}
