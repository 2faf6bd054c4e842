#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "sncqa/tableaux.hpp"
#include "sncqa/yor.hpp"

namespace sncqa {

using Edge = std::pair<int, int>;  // 1-based site labels

/// Coupling graph of a J1-J2 Heisenberg model.
struct LatticeSpec {
  int n_sites = 0;
  std::vector<Edge> j1_edges;
  std::vector<Edge> j2_edges;
  double J1 = 1.0;
  double J2 = 0.0;
  std::string name;

  /// Throws std::invalid_argument on out-of-range sites, self-loops or
  /// duplicate edges within a list.
  void validate() const;

  /// (3/4) * sum of |J_e| over all edges.
  double psd_shift() const;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Heisenberg Hamiltonian restricted to one S_n irrep, in the Young basis.
struct IrrepHamiltonian {
  Partition shape;
  Eigen::MatrixXd matrix;
  double shift = 0.0;
  LatticeSpec lattice;

  int dim() const { return static_cast<int>(matrix.rows()); }
  Eigen::MatrixXd shifted() const {
    return matrix + shift * Eigen::MatrixXd::Identity(matrix.rows(), matrix.cols());
  }
};

/// Thrown when an input exceeds a documented size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H(lambda) = sum_e J_e (P_e / 2 - I / 4) using S_i.S_j = (i j)/2 - 1/4.
IrrepHamiltonian heisenberg_irrep(const IrrepRep& rep, const LatticeSpec& lattice);
IrrepHamiltonian heisenberg_irrep(const Partition& shape, const LatticeSpec& lattice);

/// Full 2^n computational-basis Hamiltonian. Site s maps to bit s-1.
Eigen::SparseMatrix<double> heisenberg_full(const LatticeSpec& lattice);

/// Named lattices: "rect3x4", "kagome12", "kagome12_tri".
LatticeSpec builtin_lattice(std::string_view name, double J1 = 1.0, double J2 = 0.0);

std::vector<std::string> builtin_lattice_names();

/// Periodic ring 1-2-...-n-1 with J1 couplings only.
LatticeSpec ring_lattice(int n, double J1 = 1.0);

}  // namespace sncqa
