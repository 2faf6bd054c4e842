#include "sncqa/lieclosure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sncqa {

using cd = std::complex<double>;

GeneratorSet::GeneratorSet(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("generator dimension must be positive");
}

void GeneratorSet::add(std::string name, Eigen::MatrixXcd g) {
  if (g.rows() != dim_ || g.cols() != dim_) throw std::invalid_argument("generator '" + name + "' has wrong size");
  if ((g + g.adjoint()).norm() > 1e-12) throw std::invalid_argument("generator '" + name + "' is not anti-Hermitian");
  generators_.push_back({std::move(name), std::move(g)});
}

void GeneratorSet::add_hermitian(std::string name, const Eigen::MatrixXcd& h) {
  Eigen::MatrixXcd g = cd(0.0, 1.0) * h;
  g = 0.5 * (g - g.adjoint()).eval();
  add(std::move(name), std::move(g));
}

namespace {

class RealSpan {
 public:
  RealSpan(int dim, double tol) : dim_(dim), tol_(tol) {}

  // Returns true if m was independent of the current span.
  bool add(const Eigen::MatrixXcd& m) {
    const double norm = m.norm();
    if (norm < tol_) return false;
    Eigen::VectorXd v(2 * dim_ * dim_);
    v.head(dim_ * dim_) = m.real().reshaped();
    v.tail(dim_ * dim_) = m.imag().reshaped();
    v /= norm;
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis_) v -= b.dot(v) * b;
    }
    const double r = v.norm();
    if (r < tol_) return false;
    basis_.push_back(v / r);
    matrices_.push_back(m / norm);
    return true;
  }

  int size() const { return static_cast<int>(basis_.size()); }
  const Eigen::MatrixXcd& matrix(int i) const { return matrices_[static_cast<std::size_t>(i)]; }

 private:
  int dim_;
  double tol_;
  std::vector<Eigen::VectorXd> basis_;
  std::vector<Eigen::MatrixXcd> matrices_;
};

}  // namespace

ClosureResult closure_dimension(const GeneratorSet& gens, int max_depth, double tol) {
  if (gens.dim() > 16) throw ResourceLimitError("Lie closure limited to dim <= 16, got " + std::to_string(gens.dim()));
  RealSpan span(gens.dim(), tol);
  for (const auto& g : gens.generators()) span.add(g.matrix);

  ClosureResult result;
  int frontier_begin = 0;
  while (true) {
    const int frontier_end = span.size();
    if (frontier_begin == frontier_end) {
      result.closed = true;
      break;
    }
    if (result.depth == max_depth) break;
    for (int i = frontier_begin; i < frontier_end; ++i) {
      for (int j = 0; j < frontier_end; ++j) {
        if (j >= frontier_begin && j <= i) continue;
        const auto& a = span.matrix(i);
        const auto& b = span.matrix(j);
        span.add(a * b - b * a);
      }
    }
    frontier_begin = frontier_end;
    ++result.depth;
  }
  result.dimension = span.size();
  return result;
}

std::vector<std::vector<int>> connected_blocks(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("path-connectedness needs a square matrix");
  const auto n = static_cast<int>(h.rows());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(h(i, j)) > 1e-12 || std::abs(h(j, i)) > 1e-12) {
        int a = find(i);
        int b = find(j);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool is_path_connected(const Eigen::MatrixXd& h) { return connected_blocks(h).size() <= 1; }

Eigen::MatrixXd exchange_irrep(const IrrepRep& rep, const LatticeSpec& lattice) {
  lattice.validate();
  if (rep.n() != lattice.n_sites) throw std::invalid_argument("irrep size does not match the lattice");
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
  auto add = [&](const std::vector<Edge>& edges, double J) {
    if (J == 0.0) return;
    for (auto [a, b] : edges) {
      h += (0.5 * J) * transposition_matrix(rep, std::min(a, b), std::max(a, b));
      h.diagonal().array() -= 0.25 * J;
    }
  };
  add(lattice.j1_edges, lattice.J1);
  add(lattice.j2_edges, lattice.J2);
  return 0.5 * (h + h.transpose());
}

GeneratorSet mixer_generators(const IrrepRep& rep, bool second_order) {
  const int n = rep.n();
  std::vector<Eigen::VectorXd> x(static_cast<std::size_t>(n));
  x[0] = Eigen::VectorXd::Ones(rep.dim());
  for (int k = 2; k <= n; ++k) x[static_cast<std::size_t>(k - 1)] = rep.yjm(k).cast<double>();

  GeneratorSet gens(rep.dim());
  std::vector<Eigen::VectorXd> seen;
  auto push = [&](const std::string& name, const Eigen::VectorXd& d) {
    for (const auto& s : seen) {
      if ((s - d).norm() < 1e-12) return;
    }
    seen.push_back(d);
    gens.add_hermitian(name, d.cast<cd>().asDiagonal().toDenseMatrix());
  };
  for (int k = 1; k <= n; ++k) {
    for (int l = k; l <= n; ++l) {
      if (!second_order && k != 1) continue;
      push("X" + std::to_string(k) + "X" + std::to_string(l),
           x[static_cast<std::size_t>(k - 1)].cwiseProduct(x[static_cast<std::size_t>(l - 1)]));
    }
  }
  return gens;
}

GeneratorSet cqa_generators(const IrrepRep& rep, const Eigen::MatrixXd& hp, bool second_order) {
  GeneratorSet gens = mixer_generators(rep, second_order);
  gens.add_hermitian("H_P", hp.cast<cd>());
  return gens;
}

GeneratorSet qaoa_generators(int n, bool diagonal_mixer) {
  if (n < 1 || n > 3) throw ResourceLimitError("QAOA universality check limited to 1 <= n <= 3");
  const int dim = 1 << n;
  auto z = [&](int k) {
    Eigen::VectorXd d(dim);
    for (int s = 0; s < dim; ++s) d[s] = (s >> (k - 1)) & 1 ? -1.0 : 1.0;
    return d;
  };
  GeneratorSet gens(dim);
  // Index 0 stands for the identity, so k = 0 gives I and the single Z_l.
  for (int k = 0; k <= n; ++k) {
    for (int l = std::max(k, 1); l <= n; ++l) {
      if (k == l) continue;  // Z_k Z_k = I, already present
      Eigen::VectorXd d = k == 0 ? z(l) : Eigen::VectorXd(z(k).cwiseProduct(z(l)));
      gens.add_hermitian("Z" + std::to_string(k) + "Z" + std::to_string(l),
                         d.cast<cd>().asDiagonal().toDenseMatrix());
    }
  }
  gens.add_hermitian("I", Eigen::MatrixXcd::Identity(dim, dim));
  Eigen::MatrixXcd mixer = Eigen::MatrixXcd::Zero(dim, dim);
  if (diagonal_mixer) {
    for (int s = 0; s < dim; ++s) mixer(s, s) = static_cast<double>(s + 1);
  } else {
    for (int s = 0; s < dim; ++s) {
      for (int k = 0; k < n; ++k) mixer(s ^ (1 << k), s) += 1.0;
    }
  }
  gens.add_hermitian(diagonal_mixer ? "D" : "H_X", mixer);
  return gens;
}

bool verify_qaoa_universality(int n) {
  auto result = closure_dimension(qaoa_generators(n));
  return result.closed && result.dimension == (1 << (2 * n));
}

std::vector<DensityCheck> verify_cqa_density(const LatticeSpec& lattice, bool second_order, int max_rows) {
  const int n = lattice.n_sites;
  std::vector<DensityCheck> out;
  for (const auto& shape : enumerate_partitions(n, max_rows > 0 ? max_rows : n)) {
    const IrrepRep rep(shape);
    if (rep.dim() > 16) throw ResourceLimitError("irrep (" + shape.to_string() + ") exceeds the closure guard");
    const Eigen::MatrixXd hp = exchange_irrep(rep, lattice);
    DensityCheck check;
    check.shape = shape;
    check.dim = rep.dim();
    check.target = rep.dim() * rep.dim();
    check.path_connected = is_path_connected(hp);
    check.closure = closure_dimension(cqa_generators(rep, hp, second_order));
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace sncqa
