#include "sncqa/yor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sncqa {

IrrepRep::IrrepRep(const Partition& shape) : shape_(shape), basis_(enumerate_syt(shape)) {
  const int n = shape_.size();
  const int d = dim();
  for (int i = 0; i < d; ++i) index_.emplace(basis_[static_cast<std::size_t>(i)].row_of(), i);

  yjm_.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXi diag(d);
    for (int i = 0; i < d; ++i) diag[i] = basis_[static_cast<std::size_t>(i)].content()[static_cast<std::size_t>(k)];
    yjm_.push_back(std::move(diag));
  }

  adjacent_.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int k = 0; k + 1 < n; ++k) {
    AdjacentAction act;
    act.diagonal.resize(static_cast<std::size_t>(d));
    act.partner.assign(static_cast<std::size_t>(d), -1);
    act.coupling.assign(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < d; ++i) {
      const auto& t = basis_[static_cast<std::size_t>(i)];
      const auto& c = t.content();
      const double rho = 1.0 / static_cast<double>(c[static_cast<std::size_t>(k) + 1] - c[static_cast<std::size_t>(k)]);
      act.diagonal[static_cast<std::size_t>(i)] = rho;
      const auto& rows = t.row_of();
      if (rows[static_cast<std::size_t>(k)] == rows[static_cast<std::size_t>(k) + 1]) continue;
      std::vector<int> swapped = rows;
      std::swap(swapped[static_cast<std::size_t>(k)], swapped[static_cast<std::size_t>(k) + 1]);
      auto it = index_.find(swapped);
      if (it == index_.end()) continue;  // adjacent in a column: rho = -1
      act.partner[static_cast<std::size_t>(i)] = it->second;
      act.coupling[static_cast<std::size_t>(i)] = std::sqrt(1.0 - rho * rho);
    }
    adjacent_.push_back(std::move(act));
  }
}

int IrrepRep::index_of(const StandardTableau& tableau) const {
  auto it = index_.find(tableau.row_of());
  return it == index_.end() ? -1 : it->second;
}

const AdjacentAction& IrrepRep::adjacent_action(int k) const {
  if (k < 1 || k >= n()) throw std::out_of_range("adjacent transposition index out of range");
  return adjacent_[static_cast<std::size_t>(k - 1)];
}

Eigen::MatrixXd IrrepRep::adjacent(int k) const {
  const auto& act = adjacent_action(k);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    auto iu = static_cast<std::size_t>(i);
    m(i, i) = act.diagonal[iu];
    if (act.partner[iu] >= 0) m(act.partner[iu], i) = act.coupling[iu];
  }
  return m;
}

const Eigen::VectorXi& IrrepRep::yjm(int k) const {
  if (k < 1 || k > n()) throw std::out_of_range("YJM index out of range");
  return yjm_[static_cast<std::size_t>(k - 1)];
}

void IrrepRep::apply_adjacent_left(int k, Eigen::MatrixXd& m) const {
  const auto& act = adjacent_action(k);
  for (int i = 0; i < dim(); ++i) {
    auto iu = static_cast<std::size_t>(i);
    int j = act.partner[iu];
    if (j < 0) {
      m.row(i) *= act.diagonal[iu];
    } else if (j > i) {
      auto ju = static_cast<std::size_t>(j);
      Eigen::RowVectorXd ri = m.row(i);
      Eigen::RowVectorXd rj = m.row(j);
      m.row(i) = act.diagonal[iu] * ri + act.coupling[iu] * rj;
      m.row(j) = act.diagonal[ju] * rj + act.coupling[ju] * ri;
    }
  }
}

void IrrepRep::apply_adjacent_right(int k, Eigen::MatrixXd& m) const {
  const auto& act = adjacent_action(k);
  for (int i = 0; i < dim(); ++i) {
    auto iu = static_cast<std::size_t>(i);
    int j = act.partner[iu];
    if (j < 0) {
      m.col(i) *= act.diagonal[iu];
    } else if (j > i) {
      auto ju = static_cast<std::size_t>(j);
      Eigen::VectorXd ci = m.col(i);
      Eigen::VectorXd cj = m.col(j);
      m.col(i) = act.diagonal[iu] * ci + act.coupling[iu] * cj;
      m.col(j) = act.diagonal[ju] * cj + act.coupling[ju] * ci;
    }
  }
}

void IrrepRep::apply_adjacent(int k, Eigen::VectorXcd& v) const {
  const auto& act = adjacent_action(k);
  for (int i = 0; i < dim(); ++i) {
    auto iu = static_cast<std::size_t>(i);
    int j = act.partner[iu];
    if (j < 0) {
      v[i] *= act.diagonal[iu];
    } else if (j > i) {
      auto ju = static_cast<std::size_t>(j);
      std::complex<double> vi = v[i];
      std::complex<double> vj = v[j];
      v[i] = act.diagonal[iu] * vi + act.coupling[iu] * vj;
      v[j] = act.diagonal[ju] * vj + act.coupling[ju] * vi;
    }
  }
}

IrrepRep build_irrep(const Partition& shape) { return IrrepRep(shape); }

Eigen::MatrixXd transposition_matrix(const IrrepRep& rep, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) throw std::invalid_argument("transposition needs two distinct labels");
  if (i < 1 || j > rep.n()) throw std::out_of_range("transposition label out of range");
  Eigen::MatrixXd m = rep.adjacent(i);
  for (int k = i + 1; k < j; ++k) {
    rep.apply_adjacent_left(k, m);
    rep.apply_adjacent_right(k, m);
  }
  return m;
}

namespace {

void check_permutation(std::span<const int> one_line) {
  const auto n = one_line.size();
  std::vector<bool> seen(n, false);
  for (int v : one_line) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("permutation must be a bijection of 1..n");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

}  // namespace

std::vector<int> adjacent_factorization(std::span<const int> one_line) {
  check_permutation(one_line);
  // Bubble sort: swapping positions k, k+1 turns w into w s_k. Sorting to the
  // identity gives sigma s_{a_1} ... s_{a_m} = e, so sigma = s_{a_m} ... s_{a_1}.
  std::vector<int> w(one_line.begin(), one_line.end());
  std::vector<int> swaps;
  const auto n = w.size();
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    for (std::size_t k = 0; k + 1 < n - pass; ++k) {
      if (w[k] > w[k + 1]) {
        std::swap(w[k], w[k + 1]);
        swaps.push_back(static_cast<int>(k) + 1);
      }
    }
  }
  return {swaps.rbegin(), swaps.rend()};
}

Eigen::MatrixXd permutation_matrix(const IrrepRep& rep, std::span<const int> one_line) {
  if (static_cast<int>(one_line.size()) != rep.n()) {
    throw std::invalid_argument("permutation size does not match the irrep");
  }
  auto factors = adjacent_factorization(one_line);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
  // Right-multiply in order: m = s_{k_1} s_{k_2} ... s_{k_m}.
  for (int k : factors) rep.apply_adjacent_right(k, m);
  return m;
}

Eigen::MatrixXcd group_algebra_matrix(const IrrepRep& rep, std::span<const GroupAlgebraTerm> terms) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
  for (const auto& term : terms) {
    out += term.coefficient * permutation_matrix(rep, term.permutation).cast<std::complex<double>>();
  }
  return out;
}

std::vector<int> transposition_one_line(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::invalid_argument("bad transposition (" + std::to_string(i) + " " + std::to_string(j) + ")");
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]);
  return w;
}

std::vector<int> compose(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x] - 1)];
  return out;
}

}  // namespace sncqa
