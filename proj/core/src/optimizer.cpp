#include "sncqa/optimizer.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "sncqa/ed.hpp"

namespace sncqa {

void TrainConfig::validate() const {
  if (p < 0) throw std::invalid_argument("train.p must be >= 0");
  if (!(lr > 0.0)) throw std::invalid_argument("train.lr must be > 0");
  if (!(beta1 > 0.0 && beta1 < 1.0)) throw std::invalid_argument("train.beta1 must lie in (0, 1)");
  if (!(beta2 > 0.0 && beta2 < 1.0)) throw std::invalid_argument("train.beta2 must lie in (0, 1)");
  if (!(eps > 0.0)) throw std::invalid_argument("train.eps must be > 0");
  if (iters < 1) throw std::invalid_argument("train.iters must be >= 1");
  if (record_every < 1) throw std::invalid_argument("train.record_every must be >= 1");
  if (!(init_scale >= 0.0)) throw std::invalid_argument("train.init_scale must be >= 0");
}

void nadam_step(Eigen::VectorXd& params, const Eigen::VectorXd& grads, NadamMoments& moments, int t,
                const TrainConfig& cfg) {
  if (t < 1) throw std::invalid_argument("NAdam step index starts at 1");
  if (grads.size() != params.size() || moments.m.size() != params.size() || moments.v.size() != params.size()) {
    throw std::invalid_argument("NAdam size mismatch");
  }
  if (!grads.allFinite()) throw std::domain_error("non-finite gradient entry");
  const double b1 = cfg.beta1;
  const double b2 = cfg.beta2;
  moments.m = b1 * moments.m + (1.0 - b1) * grads;
  moments.v = b2 * moments.v + (1.0 - b2) * grads.cwiseAbs2();
  const double c1_next = 1.0 - std::pow(b1, t + 1);
  const double c1 = 1.0 - std::pow(b1, t);
  const double c2 = 1.0 - std::pow(b2, t);
  Eigen::VectorXd m_hat = (b1 / c1_next) * moments.m + ((1.0 - b1) / c1) * grads;
  Eigen::VectorXd v_hat = moments.v / c2;
  params.array() -= cfg.lr * m_hat.array() / (v_hat.array().sqrt() + cfg.eps);
}

TrainTrace train(const IrrepRep& rep, const IrrepHamiltonian& h, const Eigen::VectorXcd& init,
                 const TrainConfig& cfg, const std::function<void(const TraceRecord&)>& progress) {
  cfg.validate();
  CQAAnsatz ansatz(rep, h, cfg.mixer_first ? LayerOrder::kMixerFirst : LayerOrder::kHamiltonianFirst);

  CQAParams params(rep.n(), cfg.p);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (Eigen::Index i = 0; i < params.size(); ++i) params.values()[i] = cfg.init_scale * normal(rng);

  TrainTrace trace;
  trace.best_energy = std::numeric_limits<double>::infinity();
  auto record = [&](int iter, const EnergyValue& e) {
    trace.best_energy = std::min(trace.best_energy, e.unshifted);
    if (iter % cfg.record_every != 0) return;
    trace.records.push_back({iter, e.shifted, e.unshifted});
    if (progress) progress(trace.records.back());
  };

  NadamMoments moments = NadamMoments::zeros(params.size());
  for (int t = 0; t < cfg.iters; ++t) {
    EnergyValue e;
    Eigen::VectorXd grad = ansatz.gradient(params, init, &e);
    record(t, e);
    nadam_step(params.values(), grad, moments, t + 1, cfg);
  }
  const EnergyValue last = ansatz.energy(params, init);
  record(cfg.iters, last);

  trace.final_params = params;
  trace.final_energy = last.unshifted;
  trace.final_shifted = last.shifted;
  trace.final_state = ansatz.real_state(ansatz.forward(params, init), &trace.used_imaginary);
  const SpectrumReport ed = ed_irrep(h);
  trace.ed_ground = ed.ground_energy();
  trace.overlap = overlap(trace.final_state, ed.ground_vectors);
  return trace;
}

}  // namespace sncqa
