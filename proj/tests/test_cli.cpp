#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

std::string binary() {
  const char* bin = std::getenv("CRITLAB_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "CRITLAB_BIN must point at the built tool");
  return bin;
}

fs::path scratch_dir() {
  const char* dir = std::getenv("CRITLAB_TEST_TMP");
  fs::path p = dir ? fs::path(dir) : fs::temp_directory_path() / "critlab_cli";
  fs::create_directories(p);
  return p;
}

RunResult run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("weight: critical, subcritical, multilinear, malformed") {
  auto critical = run("weight --beta 3/4 --p 2 --term 1:3/4");
  CHECK(critical.exit_code == 0);
  CHECK(critical.output.find("mu_c = 1") != std::string::npos);

  auto subcritical = run("weight --beta 1/2 --p 2 --term 1:1/2");
  CHECK(subcritical.exit_code == 0);
  CHECK(subcritical.output.find("subcritical-regime") != std::string::npos);

  auto multi = run("weight --multi 0.8,0.7,0.6 --p 4 --json");
  CHECK(multi.exit_code == 0);
  CHECK(multi.output.find("\"mu_c\": \"4/5\"") != std::string::npos);
  CHECK(multi.output.find("\"pivot\": 3") != std::string::npos);

  // decimal inputs convert exactly
  auto decimal = run("weight --beta 0.75 --p 2 --term 1:0.75");
  CHECK(decimal.exit_code == 0);
  CHECK(decimal.output.find("mu_c = 1") != std::string::npos);

  auto inadmissible = run("weight --beta 3/4 --p 2 --term 2:3/4");
  CHECK(inadmissible.exit_code == 2);  // mu_c = 9/8 outside (1/p, 1]

  // classification at a supplied weight above critical
  auto at_mu = run("weight --beta 3/4 --p 2 --term 1:1/2 --mu 1 --json");
  CHECK(at_mu.exit_code == 0);
  CHECK(at_mu.output.find("\"class\": \"subcritical\"") != std::string::npos);

  CHECK(run("weight --beta x --p 2 --term 1:1/2").exit_code == 1);
  CHECK(run("weight --beta 3/4 --p 2 --term nonsense").exit_code == 1);
  CHECK(run("weight").exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
}

TEST_CASE("catalog: single entry, sweep, regression check") {
  auto single = run("catalog fujita_strong -d 3 -q 2 -p 4 --kappa 3");
  CHECK(single.exit_code == 0);
  CHECK(single.output.find("mu_c = 1/2") != std::string::npos);

  auto vort = run("catalog vorticity_very_weak -q 3 -p 2 --json");
  CHECK(vort.exit_code == 0);
  CHECK(vort.output.find("\"mu_c\": \"1\"") != std::string::npos);

  auto check = run("catalog --all --check-paper");
  CHECK(check.exit_code == 0);
  CHECK(check.output.find("all rows match") != std::string::npos);

  auto listing = run("list");
  CHECK(listing.exit_code == 0);
  CHECK(listing.output.find("fujita_strong") != std::string::npos);
  CHECK(listing.output.find("requires kappa") != std::string::npos);

  CHECK(run("catalog no_such_example -q 2 -p 2").exit_code == 1);
  CHECK(run("catalog fujita_strong -q 2 -p 4").exit_code == 1);  // kappa missing
}

TEST_CASE("simulate: blow-up, zero data, fujita decay; outputs written") {
  const fs::path dir = scratch_dir();

  const fs::path blow_cfg = dir / "blow.json";
  std::ofstream(blow_cfg) << R"({"schema":1,"operator":{"rule":"list","values":[1.0]},)"
                          << R"("nonlinearity":{"kind":"quadratic_weighted","beta":"3/4"},)"
                          << R"("initial":{"kind":"threshold_profile","w0":2.0}})";
  auto blow = run("--out " + (dir / "blow_out").string() + " simulate --config " +
                  blow_cfg.string() + " --horizon 10 --mu 1 --p 2 --maximal --json");
  CHECK(blow.exit_code == 3);
  CHECK(blow.output.find("continued_to_blow_up") != std::string::npos);
  CHECK(blow.output.find("\"estimate\"") != std::string::npos);
  CHECK(fs::exists(dir / "blow_out" / "trajectory.csv"));
  CHECK(fs::exists(dir / "blow_out" / "outcome.json"));
  // escape estimate near ln 2
  const std::string outcome = slurp(dir / "blow_out" / "outcome.json");
  CHECK(outcome.find("0.693") != std::string::npos);

  const fs::path zero_cfg = dir / "zero.json";
  std::ofstream(zero_cfg) << R"({"schema":1,"operator":{"rule":"dyadic","N":3},)"
                          << R"("nonlinearity":{"kind":"quadratic_weighted","beta":"3/4"},)"
                          << R"("initial":{"kind":"explicit","values":[0.0,0.0,0.0]}})";
  auto zero = run("--out " + (dir / "zero_out").string() + " simulate --config " +
                  zero_cfg.string() + " --horizon 1 --mu 1 --p 2");
  CHECK(zero.exit_code == 0);

  const fs::path fuj_cfg = dir / "fujita.json";
  std::ofstream(fuj_cfg) << R"({"schema":1,"kind":"fujita_1d","kappa":5,"modes":32,)"
                         << R"("initial":{"kind":"sine_modes","coefficients":[0.01]}})";
  auto fuj = run("--out " + (dir / "fuj_out").string() + " simulate --config " +
                 fuj_cfg.string() + " --horizon 5 --p 2 --json");
  CHECK(fuj.exit_code == 0);
  CHECK(fuj.output.find("decay_rate") != std::string::npos);

  // inadmissible weight
  auto bad_mu = run("--out " + (dir / "bad_out").string() + " simulate --config " +
                    zero_cfg.string() + " --horizon 1 --mu 1/2 --p 2");
  CHECK(bad_mu.exit_code == 2);

  // malformed config
  const fs::path bad_cfg = dir / "bad.json";
  std::ofstream(bad_cfg) << R"({"schema":1,"operator":{"rule":"dyadic","N":3},"extra":1,)"
                         << R"("nonlinearity":{"kind":"zero"},)"
                         << R"("initial":{"kind":"threshold_profile","w0":0}})";
  CHECK(run("simulate --config " + bad_cfg.string()).exit_code == 1);
  CHECK(run("simulate --config " + (dir / "missing.json").string()).exit_code == 1);
}

TEST_CASE("serrin post-processing of a written trajectory") {
  const fs::path dir = scratch_dir();
  const fs::path cfg = dir / "serrin_model.json";
  std::ofstream(cfg) << R"({"schema":1,"operator":{"rule":"list","values":[1.0]},)"
                     << R"("nonlinearity":{"kind":"quadratic_weighted","beta":"3/4"},)"
                     << R"("initial":{"kind":"threshold_profile","w0":1.5}})";
  auto sim = run("--out " + (dir / "serrin_out").string() + " simulate --config " +
                 cfg.string() + " --horizon 10 --mu 1 --p 2 --maximal");
  CHECK(sim.exit_code == 3);

  auto verdict = run("serrin --trajectory " + (dir / "serrin_out" / "trajectory.csv").string() +
                     " --p 2 --json");
  CHECK(verdict.exit_code == 0);
  CHECK(verdict.output.find("diverging") != std::string::npos);

  // escape estimate supplied explicitly (t_plus = ln 3 for w0 = 1.5); the
  // estimate moves the reference point, the verdict stays diverging
  auto pinned = run("serrin --trajectory " + (dir / "serrin_out" / "trajectory.csv").string() +
                    " --p 2 --t-plus 1.0986 --json");
  CHECK(pinned.exit_code == 0);
  CHECK(pinned.output.find("diverging") != std::string::npos);

  CHECK(run("serrin --trajectory " + (dir / "nope.csv").string() + " --p 2").exit_code == 1);
}

TEST_CASE("scaling subcommand") {
  auto sweep = run("scaling --check-delta --all");
  CHECK(sweep.exit_code == 0);
  CHECK(sweep.output.find("navier_stokes_scaling") != std::string::npos);
  CHECK(sweep.output.find("false") == std::string::npos);

  auto fit = run("scaling --profile gaussian -d 3 -s 0.5 --lambdas 0.5,2,4 --json");
  CHECK(fit.exit_code == 0);
  CHECK(fit.output.find("\"degenerate\": false") != std::string::npos);

  auto degenerate = run("scaling --lambdas 1");
  CHECK(degenerate.exit_code == 0);
  CHECK(degenerate.output.find("degenerate") != std::string::npos);

  CHECK(run("scaling --lambdas abc").exit_code == 1);
  CHECK(run("scaling --profile mexican_hat").exit_code == 1);
}

TEST_CASE("shipped sample configs run end to end") {
  const char* src_dir = std::getenv("CRITLAB_SOURCE_DIR");
  REQUIRE(src_dir != nullptr);
  const fs::path configs = fs::path(src_dir) / "configs";
  const fs::path dir = scratch_dir();

  auto blow = run("--out " + (dir / "sample_blow").string() + " simulate --config " +
                  (configs / "counterexample.json").string() +
                  " --horizon 1 --mu 1 --p 2 --maximal");
  CHECK(blow.exit_code == 3);

  // one fixed-point solve across the escape time cannot converge
  auto diverged = run("--out " + (dir / "sample_div").string() + " simulate --config " +
                      (configs / "counterexample.json").string() +
                      " --horizon 1 --mu 1 --p 2");
  CHECK(diverged.exit_code == 4);

  auto damped = run("--out " + (dir / "sample_damped").string() + " simulate --config " +
                    (configs / "cubic_damped.json").string() +
                    " --horizon 2 --mu 1 --p 2 --maximal");
  CHECK(damped.exit_code == 0);

  auto fuj = run("--out " + (dir / "sample_fuj").string() + " simulate --config " +
                 (configs / "fujita_small.json").string() + " --horizon 2 --p 2");
  CHECK(fuj.exit_code == 0);
}

TEST_CASE("identical manifests give byte-identical outputs") {
  const fs::path dir = scratch_dir();
  const fs::path cfg = dir / "repro.json";
  std::ofstream(cfg) << R"({"schema":1,"operator":{"rule":"dyadic","N":4},)"
                     << R"("nonlinearity":{"kind":"quadratic_weighted","beta":"3/4"},)"
                     << R"("initial":{"kind":"threshold_profile","w0":0.5}})";
  const std::string common = " simulate --config " + cfg.string() +
                             " --horizon 1 --mu 1 --p 2 --timestamp 2026-01-01T00:00:00Z";
  auto a = run("--out " + (dir / "rep_a").string() + common);
  auto b = run("--out " + (dir / "rep_b").string() + common);
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(slurp(dir / "rep_a" / "trajectory.csv") == slurp(dir / "rep_b" / "trajectory.csv"));
  // manifests differ only in the output paths; strip them before comparing
  std::string ja = slurp(dir / "rep_a" / "outcome.json");
  std::string jb = slurp(dir / "rep_b" / "outcome.json");
  const auto scrub = [](std::string s, const std::string& needle) {
    std::size_t pos;
    while ((pos = s.find(needle)) != std::string::npos) s.erase(pos, needle.size());
    return s;
  };
  ja = scrub(ja, "rep_a");
  jb = scrub(jb, "rep_b");
  CHECK(ja == jb);
}

TEST_CASE("CRITLAB_OUT environment override") {
  const fs::path dir = scratch_dir() / "env_out";
  fs::create_directories(dir);
  const fs::path cfg = scratch_dir() / "env_model.json";
  std::ofstream(cfg) << R"({"schema":1,"operator":{"rule":"dyadic","N":2},)"
                     << R"("nonlinearity":{"kind":"zero","beta":"3/4"},)"
                     << R"("initial":{"kind":"explicit","values":[0.1,0.1]}})";
  const std::string cmd = "CRITLAB_OUT=" + dir.string() + " " + binary() +
                          " simulate --config " + cfg.string() +
                          " --horizon 1 --mu 1 --p 2 > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(dir / "trajectory.csv"));
}
