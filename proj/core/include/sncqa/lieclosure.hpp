#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sncqa/spinmodel.hpp"
#include "sncqa/tableaux.hpp"
#include "sncqa/yor.hpp"

namespace sncqa {

struct NamedGenerator {
  std::string name;
  Eigen::MatrixXcd matrix;
};

/// Anti-Hermitian generators of a real Lie algebra.
class GeneratorSet {
 public:
  explicit GeneratorSet(int dim);

  int dim() const { return dim_; }
  const std::vector<NamedGenerator>& generators() const { return generators_; }

  /// Adds G; throws unless G + G^H = 0 to 1e-12.
  void add(std::string name, Eigen::MatrixXcd g);
  /// Adds i * h for a Hermitian h.
  void add_hermitian(std::string name, const Eigen::MatrixXcd& h);

 private:
  int dim_;
  std::vector<NamedGenerator> generators_;
};

struct ClosureResult {
  int dimension = 0;
  bool closed = false;  // false if max_depth ran out first
  int depth = 0;        // commutator rounds performed
};

/// Real dimension of the Lie algebra generated by the set: repeated commutators,
/// modified Gram-Schmidt on matrices viewed as real vectors of length 2 dim^2.
/// Guarded at dim <= 16.
ClosureResult closure_dimension(const GeneratorSet& gens, int max_depth = 64, double tol = 1e-9);

/// Connectivity of the graph with an edge (i, j) whenever |H_ij| > 1e-12.
bool is_path_connected(const Eigen::MatrixXd& h);

/// Connected components of the same graph, each sorted, ordered by first index.
std::vector<std::vector<int>> connected_blocks(const Eigen::MatrixXd& h);

/// Exchange Hamiltonian sum_e J_e ((i j)/2 - 1/4) on any irrep of S_n. It equals
/// the spin-1/2 Heisenberg model on two-row shapes.
Eigen::MatrixXd exchange_irrep(const IrrepRep& rep, const LatticeSpec& lattice);

/// i * diag(x_k x_l) for k <= l (x_1 = 1, x_k = contents), with duplicates removed.
/// With second_order = false only the diagonals i * diag(x_l) are used.
GeneratorSet mixer_generators(const IrrepRep& rep, bool second_order = true);

/// Mixer generators plus i H_P.
GeneratorSet cqa_generators(const IrrepRep& rep, const Eigen::MatrixXd& hp, bool second_order = true);

/// Generators of n-qubit QAOA: i Z_k Z_l for 0 <= k < l with Z_0 = I, plus i I and
/// i sum_k X_k.
/// With diagonal_mixer the X mixer is replaced by a diagonal matrix (negative control).
GeneratorSet qaoa_generators(int n, bool diagonal_mixer = false);

/// Closure of qaoa_generators(n) equals 4^n. Guarded at n <= 3.
bool verify_qaoa_universality(int n);

struct DensityCheck {
  Partition shape;
  int dim = 0;
  bool path_connected = false;
  ClosureResult closure;
  int target = 0;  // dim^2
  bool dense() const { return closure.closed && closure.dimension == target; }
};

/// For every partition of lattice.n_sites: restrict the exchange Hamiltonian,
/// test path-connectedness and compute the closure of the CQA generators.
std::vector<DensityCheck> verify_cqa_density(const LatticeSpec& lattice, bool second_order = true,
                                             int max_rows = 0);

}  // namespace sncqa
