#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sncqa/tableaux.hpp"

namespace sncqa {

/// Span of computational basis states of n qubits with mu2 ones. Site s is bit
/// s-1; bit value 0 is spin up.
class PermutationModule {
 public:
  PermutationModule(int n, const Partition& mu);

  int n() const { return n_; }
  const Partition& mu() const { return mu_; }
  int weight() const { return weight_; }
  int dim() const { return static_cast<int>(states_.size()); }
  const std::vector<std::uint32_t>& basis_states() const { return states_; }

  /// Position of a bitstring in the basis, or -1.
  int index_of(std::uint32_t state) const;

  /// Applies SWAP(i, j) (1-based sites) to module coordinates.
  Eigen::VectorXd apply_swap(const Eigen::VectorXd& v, int i, int j) const;

  /// Applies X_k = sum_{i<k} SWAP(i, k).
  Eigen::VectorXd apply_yjm(const Eigen::VectorXd& v, int k) const;

  /// Dense matrix of X_k on the module.
  Eigen::MatrixXd yjm_matrix(int k) const;

  /// Dense matrix of the sequential Casimir J_k^2 of the first k spins.
  Eigen::MatrixXd casimir_matrix(int k) const;

 private:
  int n_;
  Partition mu_;
  int weight_;
  std::vector<std::uint32_t> states_;
};

struct YoungVector {
  Partition shape;
  StandardTableau tableau;
  Eigen::VectorXd vector;  // module coordinates, unit norm
};

/// Young basis of M^mu: one vector per (lambda, T) with lambda dominating mu.
struct SchurBlock {
  Partition mu;
  PermutationModule module;
  std::vector<YoungVector> vectors;

  /// Vector labelled by the tableau, or nullptr.
  const YoungVector* find(const StandardTableau& tableau) const;
  /// All vectors as columns, in `vectors` order.
  Eigen::MatrixXd basis_matrix() const;
};

/// Builds the joint eigenbasis of X_2..X_n inside M^mu by sequential
/// refinement, one site at a time. Signs are chosen so that SWAP(k, k+1) acts
/// on each copy of S^lambda exactly as Young's orthogonal form does, with the
/// first tableau of each shape fixed by making its largest-magnitude
/// coordinate positive. Guarded at n <= 16.
SchurBlock build_schur_block(int n, const Partition& mu);

struct ExpansionTerm {
  Partition shape;
  StandardTableau tableau;
  double coefficient;
};

/// Product state for a placement pattern such as "00ss": each '0' is one site
/// in |0>, each 's' two sites in the singlet (|01> - |10>)/sqrt(2).
Eigen::VectorXd initial_product_state(const PermutationModule& module, std::string_view ordering);

/// Default pattern: k zeros followed by (n-k)/2 singlets.
std::string default_ordering(int n, int k);

/// Young basis coefficients of the product state of `ordering` inside
/// lambda = mu = ((n+k)/2, (n-k)/2). Terms are listed in basis order of lambda,
/// zeros included.
std::vector<ExpansionTerm> expand_initial_state(int n, int k, std::string_view ordering);

/// Total spin j of a module vector, from J^2 = S_- S_+ + S_z^2 + S_z built with
/// ladder operators. Throws if v is not a J^2 eigenvector to 1e-8.
HalfInteger total_spin_check(const PermutationModule& module, const Eigen::VectorXd& v);

}  // namespace sncqa
