#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sncqa/cqa.hpp"
#include "sncqa/spinmodel.hpp"
#include "sncqa/yor.hpp"

namespace sncqa {

struct TrainConfig {
  int p = 4;
  double lr = 0.002;
  double beta1 = 0.99;
  double beta2 = 0.999;
  double eps = 1e-8;
  int iters = 5000;
  std::uint64_t seed = 0;
  int record_every = 5;
  double init_scale = 1.0;
  bool mixer_first = false;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

struct NadamMoments {
  Eigen::VectorXd m;
  Eigen::VectorXd v;

  static NadamMoments zeros(Eigen::Index size) {
    return {Eigen::VectorXd::Zero(size), Eigen::VectorXd::Zero(size)};
  }
};

/// One NAdam update at step t >= 1 (Dozat's form with the Nesterov look-ahead
/// on the first moment). Non-finite gradients are rejected.
void nadam_step(Eigen::VectorXd& params, const Eigen::VectorXd& grads, NadamMoments& moments, int t,
                const TrainConfig& cfg);

struct TraceRecord {
  int iter = 0;
  double shifted = 0.0;
  double unshifted = 0.0;
};

struct TrainTrace {
  std::vector<TraceRecord> records;
  CQAParams final_params;
  double final_energy = 0.0;  // unshifted
  double final_shifted = 0.0;
  double best_energy = 0.0;   // unshifted, best over all iterations
  double ed_ground = 0.0;
  double overlap = 0.0;
  Eigen::VectorXd final_state;  // normalized real post-processed state
  bool used_imaginary = false;
};

/// Runs cfg.iters NAdam steps on the shifted energy from a seeded Gaussian
/// start. `progress`, if set, is called with every record.
TrainTrace train(const IrrepRep& rep, const IrrepHamiltonian& h, const Eigen::VectorXcd& init,
                 const TrainConfig& cfg, const std::function<void(const TraceRecord&)>& progress = {});

}  // namespace sncqa
