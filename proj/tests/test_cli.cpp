#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

const std::string kCli = BATHFLOW_CLI_PATH;

struct CommandResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

CommandResult run_command(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_dir() {
  char tmpl[] = "/tmp/bathflow_cli_XXXXXX";
  const char* dir = mkdtemp(tmpl);
  REQUIRE(dir != nullptr);
  return dir;
}

}  // namespace

TEST_CASE("flow subcommand evaluates the closed form") {
  const CommandResult r = run_command("flow \"1.0*X\" --alpha 1.0 --omega-c 30 --omega0 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.1*X") != std::string::npos);

  const CommandResult z = run_command("flow \"1.0*Z\" --alpha 1.0 --omega-c 30 --omega0 3");
  CHECK(z.exit_code == 0);
  CHECK(z.output.find("1*Z") != std::string::npos);  // unchanged, c = 0

  const CommandResult a = run_command("flow \"1.0*X\" --alpha 0.5 --omega-c 30 --auto --eta 10");
  CHECK(a.exit_code == 0);
  CHECK(a.output.find("omega0* = 3.3333333333") != std::string::npos);
}

TEST_CASE("flow parse errors exit with code 1 and a position") {
  const CommandResult r = run_command("flow \"1.0*Q\" --omega0 3");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("position") != std::string::npos);
}

TEST_CASE("ghz subcommand checks the analytic factor against the channel") {
  const CommandResult r = run_command("ghz --n 12 --alpha 0.02 --ratio 0.5");
  CHECK(r.exit_code == 0);
  char expected[64];
  std::snprintf(expected, sizeof expected, "%.12g", std::pow(0.5, 12 * 0.02));
  const auto first = r.output.find(expected);
  REQUIRE(first != std::string::npos);
  CHECK(r.output.find(expected, first + 1) != std::string::npos);  // analytic and measured

  const CommandResult unit = run_command("ghz --n 2 --alpha 0 --ratio 0.7");
  CHECK(unit.exit_code == 0);
  CHECK(unit.output.find("= 1\n") != std::string::npos);
}

TEST_CASE("unknown flags and subcommands are usage errors") {
  CHECK(run_command("flow \"1*X\" --omega0 3 --bogus 1").exit_code == 1);
  CHECK(run_command("frobnicate").exit_code == 1);
  CHECK(run_command("").exit_code == 1);
}

TEST_CASE("help exits cleanly and lists subcommands") {
  const CommandResult r = run_command("--help");
  CHECK(r.exit_code == 0);
  for (const char* name : {"flow", "ghz", "run", "sweep"})
    CHECK(r.output.find(name) != std::string::npos);
}

TEST_CASE("sweep with a missing config file fails with exit 1") {
  const CommandResult r = run_command("sweep --config /nonexistent/nope.cfg");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error") != std::string::npos);
}

TEST_CASE("sweep writes the documented CSV and is byte-reproducible") {
  const std::string dir = temp_dir();
  {
    std::ofstream cfg(dir + "/sweep.cfg");
    cfg << "n = 4\ndegree = 2\nseed = 3\ns = 0.8\nalpha = 0,0.05\nomega_c = 200\n"
        << "output_csv = out.csv\noutput_json = out.json\n";
  }
  const std::string args = "sweep --config " + dir + "/sweep.cfg --out-dir " + dir;
  const CommandResult r1 = run_command(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output.find("points: 2") != std::string::npos);

  const std::string csv = slurp(dir + "/out.csv");
  CHECK(csv.rfind("s,alpha,omega0_star,E0_ideal,E0_eff,fidelity_sb,fidelity_reduced,purity,"
                  "entropy,trace_distance,regime,flags\n",
                  0) == 0);
  const std::string json = slurp(dir + "/out.json");
  CHECK(json.find("\"records\"") != std::string::npos);

  const CommandResult r2 = run_command(args);
  CHECK(r2.exit_code == 0);
  CHECK(slurp(dir + "/out.csv") == csv);
  CHECK(r2.output == r1.output);
}

TEST_CASE("run subcommand prints a single record") {
  const std::string dir = temp_dir();
  {
    std::ofstream cfg(dir + "/point.cfg");
    cfg << "hamiltonian = 1.0*X\nalpha = 0.5\ns = 0\nomega_c = 30\n";
  }
  const CommandResult r = run_command("run --config " + dir + "/point.cfg");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("omega0_star      = 3.3333333333") != std::string::npos);
  CHECK(r.output.find("fidelity_sb      = 1") != std::string::npos);
}

TEST_CASE("figure s1 preset emits trajectory data") {
  const std::string dir = temp_dir();
  const CommandResult r = run_command("sweep --figure s1 --out-dir " + dir);
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(dir + "/figs1.csv");
  CHECK(csv.rfind("c,omega0,delta,delta_over_omega0\n", 0) == 0);
  CHECK(csv.find("\n1.5,") != std::string::npos);
}
