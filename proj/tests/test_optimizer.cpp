#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "sncqa/cqa.hpp"
#include "sncqa/ed.hpp"
#include "sncqa/optimizer.hpp"

using namespace sncqa;

TEST(Nadam, ZeroGradientIsNoOp) {
  TrainConfig cfg;
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(4, -1, 2);
  const Eigen::VectorXd x0 = x;
  auto mom = NadamMoments::zeros(4);
  for (int t = 1; t <= 10; ++t) nadam_step(x, Eigen::VectorXd::Zero(4), mom, t, cfg);
  EXPECT_EQ(x, x0);
}

TEST(Nadam, FirstStepMovesByLearningRate) {
  // With bias correction the first step is lr * sign(g), up to eps.
  TrainConfig cfg;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(3);
  Eigen::VectorXd g(3);
  g << 2.0, -0.5, 1e3;
  auto mom = NadamMoments::zeros(3);
  nadam_step(x, g, mom, 1, cfg);
  const double b1 = cfg.beta1;
  const double expected = cfg.lr * (b1 * (1 - b1) / (1 - b1 * b1) + 1.0);
  EXPECT_NEAR(x[0], -expected, 1e-8);
  EXPECT_NEAR(x[1], expected, 1e-7);
  EXPECT_NEAR(x[2], -expected, 1e-10);
}

TEST(Nadam, ConstantGradientStepTendsToLearningRate) {
  TrainConfig cfg;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(1);
  auto mom = NadamMoments::zeros(1);
  double last = 0.0;
  for (int t = 1; t <= 3000; ++t) {
    const double before = x[0];
    nadam_step(x, Eigen::VectorXd::Constant(1, 0.3), mom, t, cfg);
    last = before - x[0];
  }
  EXPECT_NEAR(last, cfg.lr, 1e-6);
}

TEST(Nadam, QuadraticBowl) {
  TrainConfig cfg;
  cfg.lr = 0.01;
  cfg.beta1 = 0.9;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(1);
  auto mom = NadamMoments::zeros(1);
  for (int t = 1; t <= 500; ++t) nadam_step(x, 2.0 * x, mom, t, cfg);
  EXPECT_LT(std::abs(x[0]), 1e-3);
}

TEST(Nadam, Rejections) {
  TrainConfig cfg;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(2);
  auto mom = NadamMoments::zeros(2);
  Eigen::VectorXd bad(2);
  bad << 1.0, std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(nadam_step(x, bad, mom, 1, cfg), std::domain_error);
  bad[1] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(nadam_step(x, bad, mom, 1, cfg), std::domain_error);
  EXPECT_THROW(nadam_step(x, Eigen::VectorXd::Zero(2), mom, 0, cfg), std::invalid_argument);
  EXPECT_THROW(nadam_step(x, Eigen::VectorXd::Zero(3), mom, 1, cfg), std::invalid_argument);
}

TEST(TrainConfig, Validation) {
  TrainConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.beta1 = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = TrainConfig{};
  cfg.lr = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = TrainConfig{};
  cfg.iters = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Train, DeterministicAndRecorded) {
  IrrepRep rep(Partition({4, 2}));
  auto h = heisenberg_irrep(rep, ring_lattice(6));
  auto init = default_initial_state(rep);
  TrainConfig cfg;
  cfg.p = 2;
  cfg.iters = 40;
  cfg.record_every = 5;
  cfg.seed = 17;
  int calls = 0;
  auto a = train(rep, h, init, cfg, [&](const TraceRecord&) { ++calls; });
  auto b = train(rep, h, init, cfg);
  ASSERT_EQ(a.records.size(), 9u);
  EXPECT_EQ(calls, 9);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].iter, static_cast<int>(5 * i));
    EXPECT_EQ(a.records[i].shifted, b.records[i].shifted);
    EXPECT_NEAR(a.records[i].shifted - a.records[i].unshifted, h.shift, 1e-12);
  }
  EXPECT_EQ(a.final_params.values(), b.final_params.values());
  cfg.seed = 18;
  auto c = train(rep, h, init, cfg);
  EXPECT_NE(a.final_params.values(), c.final_params.values());
}

TEST(Train, VariationalAndBest) {
  IrrepRep rep(Partition({3, 3}));
  auto lat = ring_lattice(6);
  lat.j2_edges = {{1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 1}, {6, 2}};
  lat.J2 = 0.3;
  auto h = heisenberg_irrep(rep, lat);
  TrainConfig cfg;
  cfg.p = 3;
  cfg.iters = 1500;
  cfg.lr = 0.01;
  cfg.beta1 = 0.9;
  auto trace = train(rep, h, default_initial_state(rep), cfg);
  const double ground = ed_irrep(h).ground_energy();
  EXPECT_NEAR(trace.ed_ground, ground, 1e-12);
  EXPECT_GE(trace.final_energy, ground - 1e-9);
  for (const auto& r : trace.records) {
    EXPECT_GE(r.unshifted, ground - 1e-9);
    EXPECT_LE(trace.best_energy, r.unshifted);
  }
  EXPECT_LE(trace.best_energy, trace.final_energy);
  EXPECT_NEAR(trace.final_state.norm(), 1.0, 1e-12);
  EXPECT_GT(trace.overlap, 0.99);
  EXPECT_LT(trace.final_energy - ground, 1e-2);
}
