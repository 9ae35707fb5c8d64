#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

std::string binary_path() {
  const char* bin = std::getenv("COLEARN_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "COLEARN_BIN must point at the colearn binary");
  return bin;
}

int run_cli(const std::string& args, const std::string& extra_env = "") {
  const std::string cmd =
      extra_env + " " + binary_path() + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  const std::string missing = "missing file: " + path.string();
  REQUIRE_MESSAGE(in.good(), missing);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "colearn_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("run writes per-run csv and json, exit 0") {
  const fs::path dir = work_dir();
  const std::string stem = (dir / "happy").string();
  CHECK(run_cli("run --domain tsp --dim 8 --rounds 20 --runs 2 --seed 5 --out " + stem) == 0);
  const std::string csv = slurp(stem + "_run0.csv");
  CHECK(csv.rfind("t,cost_reported,cost_update,", 0) == 0);
  CHECK(fs::exists(stem + "_run1.csv"));
  CHECK(fs::exists(stem + ".json"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("run --algo sgd") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("run --bogus") == 2);
  CHECK(run_cli("") == 2);
}

TEST_CASE("identical invocations produce byte-identical outputs") {
  const fs::path dir = work_dir();
  const std::string stem_a = (dir / "repro_a").string();
  const std::string stem_b = (dir / "repro_b").string();
  const std::string args = "run --domain path_planning --rounds 25 --runs 2 --seed 11 --out ";
  CHECK(run_cli(args + stem_a) == 0);
  CHECK(run_cli(args + stem_b) == 0);
  CHECK(slurp(stem_a + "_run0.csv") == slurp(stem_b + "_run0.csv"));
  CHECK(slurp(stem_a + "_run1.csv") == slurp(stem_b + "_run1.csv"));
  // JSON differs only in the echoed output stem-independent config; it holds
  // no paths, so it must match byte for byte as well.
  CHECK(slurp(stem_a + ".json") == slurp(stem_b + ".json"));
}

TEST_CASE("COLEARN_SEED overrides the config seed, flags beat the env") {
  const fs::path dir = work_dir();
  const std::string stem_env = (dir / "seed_env").string();
  const std::string stem_flag = (dir / "seed_flag").string();
  const std::string stem_plain = (dir / "seed_plain").string();
  const std::string base = "run --domain tsp --dim 6 --rounds 10 --runs 1 --out ";
  CHECK(run_cli(base + stem_env, "COLEARN_SEED=123") == 0);
  CHECK(run_cli(base + stem_plain + " --seed 123") == 0);
  CHECK(slurp(stem_env + "_run0.csv") == slurp(stem_plain + "_run0.csv"));
  // An explicit flag wins over the environment.
  CHECK(run_cli(base + stem_flag + " --seed 99", "COLEARN_SEED=123") == 0);
  CHECK(slurp(stem_flag + "_run0.csv") != slurp(stem_env + "_run0.csv"));
}

TEST_CASE("sweep emits four plot files with identical horizons") {
  const fs::path dir = work_dir();
  const std::string stem = (dir / "sweep").string();
  CHECK(run_cli("sweep --domain tsp --dim 6 --rounds 15 --runs 2 --seed 3 --out " + stem) == 0);
  std::string first_col;
  for (const std::string rule : {"per", "csper", "pa", "cspa"}) {
    const std::string data = slurp(stem + "_" + rule + ".dat");
    std::istringstream in(data);
    std::string t_col, line;
    int rows = 0;
    while (std::getline(in, line)) {
      t_col += line.substr(0, line.find(' ')) + "\n";
      ++rows;
    }
    CHECK(rows == 15);
    if (first_col.empty())
      first_col = t_col;
    else
      CHECK(t_col == first_col);
  }
}

TEST_CASE("config files drive runs") {
  const fs::path dir = work_dir();
  const fs::path cfg = dir / "tsp_config.json";
  {
    std::ofstream out(cfg);
    out << R"({"domain": {"kind": "tsp", "visible_dim": 6, "num_points": 7, "kappa": 0.1},
               "rule": "csper", "rounds": 12, "runs": 1, "master_seed": 21})";
  }
  const std::string stem = (dir / "from_config").string();
  CHECK(run_cli("run --config " + cfg.string() + " --out " + stem) == 0);
  const std::string csv = slurp(stem + "_run0.csv");
  int lines = -1;  // header
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 12);
}

TEST_CASE("bounds subcommand emits a curve") {
  const fs::path dir = work_dir();
  const std::string out = (dir / "bounds.dat").string();
  CHECK(run_cli("bounds --rule per --feature-bound 1 --wstar-norm 1 --kappa 0.1 --rounds 50 "
                "--out " + out) == 0);
  const std::string data = slurp(out);
  std::istringstream in(data);
  std::string line;
  int rows = 0;
  double first_value = 0.0, last_value = 0.0;
  while (std::getline(in, line)) {
    const double value = std::stod(line.substr(line.find(' ')));
    if (rows == 0) first_value = value;
    last_value = value;
    ++rows;
  }
  CHECK(rows == 50);
  CHECK(first_value == doctest::Approx(20.0));              // 2/(0.1*1)
  CHECK(last_value == doctest::Approx(20.0 / std::sqrt(50.0)));
}

TEST_CASE("verify certifies the small domains") {
  const fs::path dir = work_dir();
  const std::string stem = (dir / "verify").string();
  CHECK(run_cli("verify --seed 17 --out " + stem) == 0);
  const std::string report = slurp(stem + "_verify.json");
  CHECK(report.find("\"ok\": true") != std::string::npos);
}
