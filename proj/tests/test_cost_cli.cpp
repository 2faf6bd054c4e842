#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"
#include "sncqa/cli.hpp"
#include "sncqa/config.hpp"
#include "sncqa/costmodel.hpp"

using namespace sncqa;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("sncqa_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Derangement, MatchesBruteForce) {
  for (int n = 0; n <= 8; ++n) {
    std::uint64_t total = 0;
    for (int l = 0; l <= n; ++l) {
      EXPECT_EQ(derangement(n, l), oracle::count_moved(n, l)) << n << " " << l;
      EXPECT_NEAR(std::exp(log_derangement(n, l)), static_cast<double>(derangement(n, l)), 1e-9 * (1 + total));
      total += derangement(n, l);
    }
    EXPECT_EQ(total, oracle::factorial(n));
  }
  EXPECT_EQ(derangement(4, 2), 6u);
  EXPECT_EQ(derangement(3, 3), 2u);
  EXPECT_EQ(derangement(20, 20), 895014631192902121ull);
  EXPECT_THROW(derangement(21, 2), std::overflow_error);
  EXPECT_NEAR(log_derangement(40, 3), std::log(9880.0 * 2), 1e-9);
}

TEST(Truncation, Examples) {
  EXPECT_EQ(truncation_order(1.0, 0.5).K, 2);
  EXPECT_EQ(truncation_order(1.0, 1.0 / 6).K, 3);
  EXPECT_EQ(truncation_order(2.0, 0.1).K, 6);
  EXPECT_THROW(truncation_order(1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(truncation_order(-1.0, 0.1), std::invalid_argument);
}

TEST(Truncation, MinimalAndMonotone) {
  int prev = 0;
  for (double eps = 0.4; eps > 1e-14; eps /= 3) {
    for (double x : {0.3, 1.0, 2.5}) {
      const int K = truncation_order(x, eps).K;
      EXPECT_LE(std::pow(x, K) / std::tgamma(K + 1.0), eps * (1 + 1e-9));
      if (K > 1) EXPECT_GT(std::pow(x, K - 1) / std::tgamma(K), eps);
    }
    const int K = truncation_order(1.0, eps).K;
    EXPECT_GE(K, prev);
    prev = K;
  }
}

TEST(Estimate, QubitOverhead) {
  auto q = estimate(CostModel::kQubitPauli, 10, 2, 1.0, 1e-3, 1.0);
  EXPECT_DOUBLE_EQ(q.L, 2.0);
  for (int k : {2, 3, 4}) {
    auto a = estimate(CostModel::kQuditSwap, 12, k, 1.0, 1e-3, 1.0);
    auto b = estimate(CostModel::kQubitPauli, 12, k, 1.0, 1e-3, 1.0);
    EXPECT_NEAR(a.leading / b.leading, k * k * k / std::ldexp(1.0, k - 1), 1e-9);
    EXPECT_EQ(a.term_count, b.term_count);
  }
}

TEST(Estimate, Monotone) {
  double prev = 0.0;
  for (double t : {0.5, 1.0, 2.0, 8.0}) {
    auto e = estimate(CostModel::kQuditSwap, 12, 2, t, 1e-3);
    EXPECT_GT(e.gate_count, prev);
    prev = e.gate_count;
  }
  prev = 0.0;
  for (int n : {4, 8, 16, 64, 400}) {
    auto e = estimate(CostModel::kQubitPauli, n, 3, 1.0, 1e-4);
    EXPECT_GT(e.log_gate_count, prev);
    prev = e.log_gate_count;
  }
  auto e = estimate(CostModel::kQuditSwap, 6, 2, 1.0, 1e-3);
  EXPECT_EQ(e.term_count, 15.0);
  EXPECT_EQ(e.term_bound, 72.0);
  EXPECT_THROW(estimate(CostModel::kQuditSwap, 3, 4, 1.0, 1e-3), std::invalid_argument);
  EXPECT_EQ(parse_cost_model("qubit"), CostModel::kQubitPauli);
  EXPECT_THROW(parse_cost_model("ion"), std::invalid_argument);
}

TEST(Config, RoundTripAndRejection) {
  const std::string text = R"({"lattice": {"n_sites": 4, "j1_edges": [[1,2],[2,3],[3,4],[4,1]], "J1": 1.0,
    "j2_edges": [[1,3]], "J2": 0.5, "name": "ring4"}, "irrep": "2,2",
    "train": {"p": 2, "iters": 30, "seed": 3, "lr": 0.01}, "verify": {"second_order": false}})";
  auto cfg = parse_config(text);
  EXPECT_EQ(cfg.lattice.spec.n_sites, 4);
  EXPECT_EQ(cfg.train.p, 2);
  EXPECT_FALSE(cfg.verify.second_order);
  EXPECT_EQ(parse_config(config_to_json(cfg)), cfg);

  auto builtin = parse_config(R"({"lattice": {"builtin": "rect3x4", "J2": 0.8}})");
  EXPECT_EQ(builtin.lattice.spec.j1_edges.size(), 17u);
  EXPECT_EQ(parse_config(config_to_json(builtin)), builtin);

  EXPECT_THROW(parse_config(R"({"lattice": {"builtin": "rect3x4"}, "trian": {}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"lattice": {"builtin": "rect3x4"}, "train": {"lr": "fast"}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"lattice": {"builtin": "rect3x4"}, "irrep": "5,5"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"irrep": "2,2"})"), ConfigError);
  try {
    parse_config("{\"lattice\":\n {\"builtin\": }");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Cli, ScalingTable) {
  auto rows = scaling_table(8);
  bool found = false;
  for (const auto& r : rows) {
    if (r.n == 8 && r.shape == Partition({4, 4})) {
      found = true;
      EXPECT_EQ(r.states, 256u);
      EXPECT_EQ(r.dim, 14u);
    }
  }
  EXPECT_TRUE(found);
  auto res = run_cli({"scaling", "8"});
  EXPECT_EQ(res.code, kExitOk);
  EXPECT_NE(res.out.find("8,\"4,4\",256,14,"), std::string::npos) << res.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"scaling", "63"}).code, kExitResource);
  EXPECT_EQ(run_cli({"init-expand", "18", "0"}).code, kExitResource);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"train", "/nonexistent/cfg.json"}).code, kExitConfig);
  auto bad = scratch("bad.json");
  write_file(bad, R"({"lattice": {"builtin": "rect3x4"}, "colour": 1})");
  auto r = run_cli({"ed", bad.string()});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("colour"), std::string::npos);
  EXPECT_EQ(run_cli({"cost", "n=8", "flavour=2"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"tableaux", "3,2"}).code, kExitOk);
}

TEST(Cli, TrainIsReproducible) {
  auto csv_a = scratch("a.csv"), csv_b = scratch("b.csv"), summary = scratch("s.json");
  auto make = [&](const fs::path& csv) {
    auto cfg = scratch("train_" + csv.stem().string() + ".json");
    write_file(cfg, R"({"lattice": {"n_sites": 6, "j1_edges": [[1,2],[2,3],[3,4],[4,5],[5,6],[6,1]]},
      "irrep": "4,2", "train": {"p": 2, "iters": 25, "seed": 9},
      "output": {"trace_csv": ")" + csv.string() + R"(", "summary_json": ")" + summary.string() + R"("}})");
    return cfg;
  };
  EXPECT_EQ(run_cli({"train", make(csv_a).string()}).code, kExitOk);
  EXPECT_EQ(run_cli({"train", make(csv_b).string()}).code, kExitOk);
  const std::string a = read_file(csv_a);
  EXPECT_EQ(a, read_file(csv_b));
  EXPECT_EQ(a.substr(0, a.find('\n')), "iter,shifted_energy,unshifted_energy");
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 1 + 6);
  const std::string s = read_file(summary);
  for (const char* key : {"final_energy", "ed_ground_energy", "overlap", "seed", "ground_sector", "runtime_seconds"}) {
    EXPECT_NE(s.find(key), std::string::npos) << key;
  }
}

TEST(Cli, EdAndVerify) {
  auto cfg = scratch("ring4.json");
  auto summary = scratch("ed.json");
  write_file(cfg, R"({"lattice": {"n_sites": 4, "j1_edges": [[1,2],[2,3],[3,4],[4,1]]},
    "output": {"summary_json": ")" + summary.string() + R"("}})");
  auto ed = run_cli({"ed", cfg.string()});
  EXPECT_EQ(ed.code, kExitOk);
  EXPECT_NE(ed.out.find("ground_sector (2,2) energy -2"), std::string::npos) << ed.out;
  EXPECT_NE(ed.out.find("full_space_degeneracy 1"), std::string::npos);
  auto verify = run_cli({"verify", cfg.string()});
  EXPECT_EQ(verify.code, kExitOk);
  EXPECT_NE(verify.out.find("qaoa n=2 closure 16"), std::string::npos) << verify.out;
  EXPECT_NE(verify.out.find("verify: all checks passed"), std::string::npos) << verify.out;
  auto cost = run_cli({"cost", "n=8", "k=2", "model=qudit"});
  EXPECT_EQ(cost.code, kExitOk);
  EXPECT_EQ(std::count(cost.out.begin(), cost.out.end(), '\n'), 2);
  auto init = run_cli({"init-expand", "6", "2", "00ss"});
  EXPECT_NE(init.out.find("norm 1"), std::string::npos) << init.out;
}
