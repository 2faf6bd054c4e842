#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sncqa/tableaux.hpp"

namespace sncqa {

/// Sparse action of one adjacent transposition s_k on the Young basis. Column i
/// of the matrix has `diagonal[i]` on the diagonal and, when `partner[i] >= 0`,
/// `coupling[i]` in row `partner[i]`.
struct AdjacentAction {
  std::vector<double> diagonal;
  std::vector<int> partner;
  std::vector<double> coupling;
};

/// Young's orthogonal representation of S_n for one shape. Immutable once built.
///
/// Labels and transposition indices are 1-based throughout, matching the usual
/// (k, k+1) notation. Basis vectors follow `enumerate_syt` order.
class IrrepRep {
 public:
  explicit IrrepRep(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.size(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<StandardTableau>& basis() const { return basis_; }

  /// Position of a tableau in the basis, or -1.
  int index_of(const StandardTableau& tableau) const;

  const AdjacentAction& adjacent_action(int k) const;

  /// Dense matrix of s_k = (k, k+1).
  Eigen::MatrixXd adjacent(int k) const;

  /// Diagonal of the YJM element X_k: the contents of label k across the basis.
  const Eigen::VectorXi& yjm(int k) const;

  /// M <- s_k M.
  void apply_adjacent_left(int k, Eigen::MatrixXd& m) const;
  /// M <- M s_k.
  void apply_adjacent_right(int k, Eigen::MatrixXd& m) const;
  /// v <- s_k v.
  void apply_adjacent(int k, Eigen::VectorXcd& v) const;

 private:
  Partition shape_;
  std::vector<StandardTableau> basis_;
  std::map<std::vector<int>, int> index_;
  std::vector<AdjacentAction> adjacent_;
  std::vector<Eigen::VectorXi> yjm_;
};

IrrepRep build_irrep(const Partition& shape);

/// Matrix of the transposition (i j), 1 <= i < j <= n, built by conjugating
/// s_i along s_{i+1}, ..., s_{j-1}.
Eigen::MatrixXd transposition_matrix(const IrrepRep& rep, int i, int j);

/// Adjacent transpositions k_1, ..., k_m with sigma = s_{k_1} s_{k_2} ... s_{k_m}.
/// `one_line` lists sigma(1), ..., sigma(n). Throws if it is not a bijection.
std::vector<int> adjacent_factorization(std::span<const int> one_line);

/// Matrix of a single permutation given in one-line notation.
Eigen::MatrixXd permutation_matrix(const IrrepRep& rep, std::span<const int> one_line);

struct GroupAlgebraTerm {
  std::complex<double> coefficient;
  std::vector<int> permutation;  // one-line notation, 1-based
};

/// Representation of sum_i c_i sigma_i.
Eigen::MatrixXcd group_algebra_matrix(const IrrepRep& rep, std::span<const GroupAlgebraTerm> terms);

/// One-line form of the transposition (i j) in S_n.
std::vector<int> transposition_one_line(int n, int i, int j);

/// Composition (a b)(x) = a(b(x)) in one-line form.
std::vector<int> compose(std::span<const int> a, std::span<const int> b);

}  // namespace sncqa
