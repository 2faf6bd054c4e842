#pragma once

#include <vector>

#include <Eigen/Dense>

#include "sncqa/spinmodel.hpp"
#include "sncqa/tableaux.hpp"
#include "sncqa/yor.hpp"

namespace sncqa {

/// Trainable parameters, flat. Each layer stores beta_kl for 1 <= k <= l <= n
/// (row-major over k, then l) followed by gamma.
class CQAParams {
 public:
  CQAParams() = default;
  CQAParams(int n, int p);

  static int pairs(int n) { return n * (n + 1) / 2; }
  static int per_layer(int n) { return pairs(n) + 1; }
  /// Position of beta_kl inside a layer block (1-based k <= l).
  static int pair_index(int n, int k, int l);

  int n() const { return n_; }
  int p() const { return p_; }
  int size() const { return static_cast<int>(values_.size()); }

  double beta(int layer, int k, int l) const;
  void set_beta(int layer, int k, int l, double value);
  double gamma(int layer) const;
  void set_gamma(int layer, double value);

  /// Symmetric n x n matrix of one layer's betas.
  Eigen::MatrixXd beta_matrix(int layer) const;

  Eigen::VectorXd& values() { return values_; }
  const Eigen::VectorXd& values() const { return values_; }

 private:
  int n_ = 0;
  int p_ = 0;
  Eigen::VectorXd values_;
};

struct CQAState {
  Partition shape;
  Eigen::VectorXcd amplitudes;
};

enum class LayerOrder { kHamiltonianFirst, kMixerFirst };

/// d[T] = sum_{k<=l} beta_kl x_k(T) x_l(T) with x_1 = 1 and x_k the content of k.
Eigen::VectorXd mixer_phases(const IrrepRep& rep, const Eigen::MatrixXd& beta);

struct EnergyValue {
  double shifted = 0.0;
  double unshifted = 0.0;
  bool used_imaginary = false;  // Re(psi) vanished, Im(psi) was used
};

/// Simulator of the ansatz inside one irrep. Caches the eigendecomposition of H
/// and the YJM product table; immutable afterwards, so concurrent calls are fine.
class CQAAnsatz {
 public:
  CQAAnsatz(const IrrepRep& rep, const IrrepHamiltonian& h, LayerOrder order = LayerOrder::kHamiltonianFirst);

  int dim() const { return static_cast<int>(eigenvalues_.size()); }
  int n() const { return n_; }
  LayerOrder order() const { return order_; }
  double shift() const { return shift_; }
  const Eigen::MatrixXd& shifted_hamiltonian() const { return shifted_; }

  /// Mixer phases for one layer of packed betas.
  Eigen::VectorXd phases(const CQAParams& params, int layer) const;

  /// psi <- exp(-i gamma H) psi.
  void evolve(double gamma, Eigen::VectorXcd& psi) const;
  /// psi <- exp(-i diag(d)) psi.
  static void mix(const Eigen::VectorXd& d, Eigen::VectorXcd& psi);

  /// One layer in the configured order.
  CQAState apply_layer(const CQAState& state, const CQAParams& params, int layer) const;

  Eigen::VectorXcd forward(const CQAParams& params, const Eigen::VectorXcd& init) const;

  /// Normalized real post-processed state, Re(psi) or the Im(psi) fallback.
  Eigen::VectorXd real_state(const Eigen::VectorXcd& psi, bool* used_imaginary = nullptr) const;

  EnergyValue energy(const CQAParams& params, const Eigen::VectorXcd& init) const;

  /// Exact gradient of the shifted energy by reverse-mode adjoint propagation.
  Eigen::VectorXd gradient(const CQAParams& params, const Eigen::VectorXcd& init, EnergyValue* value = nullptr) const;

 private:
  int n_;
  Partition shape_;
  LayerOrder order_;
  double shift_;
  Eigen::MatrixXd shifted_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::MatrixXd products_;  // dim x pairs(n): x_k x_l per tableau
};

/// Default initial state: the product-state expansion for k = lambda1 - lambda2
/// when lambda has at most two rows, otherwise the uniform vector.
Eigen::VectorXcd default_initial_state(const IrrepRep& rep);

}  // namespace sncqa
