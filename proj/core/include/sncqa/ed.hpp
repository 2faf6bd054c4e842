#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "sncqa/spinmodel.hpp"

namespace sncqa {

/// Exact-diagonalization result. `ground_vectors` holds an orthonormal basis of
/// the ground eigenspace as columns.
struct SpectrumReport {
  Eigen::VectorXd eigenvalues;  // ascending
  Eigen::MatrixXd ground_vectors;
  int degeneracy = 0;

  double ground_energy() const { return eigenvalues[0]; }
};

inline constexpr double kDegeneracyTolerance = 1e-8;

/// Dense symmetric eigendecomposition of H(lambda). Guarded at dim <= 5000.
SpectrumReport ed_irrep(const IrrepHamiltonian& h);

/// Same, but also returns all eigenvectors (columns of `vectors`).
struct FullEigensystem {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd vectors;
};
FullEigensystem eigensystem(const Eigen::MatrixXd& symmetric);

/// Computational-basis ED. Up to 2^12 states the matrix is diagonalized densely
/// in one piece; up to 2^14 it is split into total-S_z sectors (the Heisenberg
/// Hamiltonian conserves S_z) and each sector is diagonalized densely. Either way
/// the full spectrum is returned.
SpectrumReport ed_full(const Eigen::SparseMatrix<double>& h);

/// Norm of the projection of a/|a| onto span(b_space). b_space columns must be
/// orthonormal.
double overlap(const Eigen::VectorXd& a, const Eigen::MatrixXd& b_space);

/// Counts eigenvalues within kDegeneracyTolerance of the smallest one.
int count_degeneracy(const Eigen::VectorXd& ascending, double tol = kDegeneracyTolerance);

}  // namespace sncqa
