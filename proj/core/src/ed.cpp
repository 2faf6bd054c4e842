#include "sncqa/ed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

extern "C" void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda, double* w,
                        double* work, const int* lwork, int* iwork, const int* liwork, int* info);

namespace sncqa {

int count_degeneracy(const Eigen::VectorXd& ascending, double tol) {
  int count = 0;
  for (Eigen::Index i = 0; i < ascending.size(); ++i) {
    if (ascending[i] <= ascending[0] + tol) ++count;
  }
  return count;
}

// LAPACK divide and conquer; Eigen's own solver is several times slower at a few thousand rows.
FullEigensystem eigensystem(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw std::invalid_argument("eigensystem needs a square matrix");
  const int n = static_cast<int>(symmetric.rows());
  FullEigensystem out{Eigen::VectorXd(n), symmetric};
  if (n == 0) return out;
  const char jobz = 'V', uplo = 'L';
  int info = 0, lwork = -1, liwork = -1, iwork_query = 0;
  double work_query = 0.0;
  dsyevd_(&jobz, &uplo, &n, out.vectors.data(), &n, out.eigenvalues.data(), &work_query, &lwork, &iwork_query,
          &liwork, &info);
  if (info != 0) throw std::runtime_error("dsyevd workspace query failed");
  lwork = static_cast<int>(work_query);
  liwork = iwork_query;
  std::vector<double> work(static_cast<std::size_t>(lwork));
  std::vector<int> iwork(static_cast<std::size_t>(liwork));
  dsyevd_(&jobz, &uplo, &n, out.vectors.data(), &n, out.eigenvalues.data(), work.data(), &lwork, iwork.data(),
          &liwork, &info);
  if (info != 0) throw std::runtime_error("eigendecomposition failed (dsyevd info " + std::to_string(info) + ")");
  return out;
}

SpectrumReport ed_irrep(const IrrepHamiltonian& h) {
  if (h.dim() > 5000) {
    throw ResourceLimitError("in-irrep ED limited to dimension 5000, got " + std::to_string(h.dim()));
  }
  auto sys = eigensystem(h.matrix);
  SpectrumReport report;
  report.degeneracy = count_degeneracy(sys.eigenvalues);
  report.ground_vectors = sys.vectors.leftCols(report.degeneracy);
  report.eigenvalues = std::move(sys.eigenvalues);
  return report;
}

SpectrumReport ed_full(const Eigen::SparseMatrix<double>& h) {
  const Eigen::Index dim = h.rows();
  if (dim > 16384) {
    throw ResourceLimitError("full-basis ED limited to 2^14 states, got " + std::to_string(dim));
  }
  SpectrumReport report;
  if (dim <= 4096) {
    auto sys = eigensystem(Eigen::MatrixXd(h));
    report.degeneracy = count_degeneracy(sys.eigenvalues);
    report.ground_vectors = sys.vectors.leftCols(report.degeneracy);
    report.eigenvalues = std::move(sys.eigenvalues);
    return report;
  }

  if ((dim & (dim - 1)) != 0) throw std::invalid_argument("full-basis dimension must be a power of two");
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(dim));
  struct Candidate {
    double energy;
    Eigen::VectorXd vector;
  };
  std::vector<Candidate> lowest;
  for (int weight = 0; weight <= n; ++weight) {
    std::vector<int> states;
    for (Eigen::Index s = 0; s < dim; ++s) {
      if (std::popcount(static_cast<std::uint64_t>(s)) == weight) states.push_back(static_cast<int>(s));
    }
    std::vector<int> position(static_cast<std::size_t>(dim), -1);
    for (std::size_t i = 0; i < states.size(); ++i) position[static_cast<std::size_t>(states[i])] = static_cast<int>(i);
    const auto m = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index col = 0; col < m; ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(h, states[static_cast<std::size_t>(col)]); it; ++it) {
        int row = position[static_cast<std::size_t>(it.row())];
        if (row < 0) throw std::invalid_argument("Hamiltonian does not conserve S_z");
        block(row, col) = it.value();
      }
    }
    auto sys = eigensystem(block);
    for (Eigen::Index i = 0; i < m; ++i) {
      values.push_back(sys.eigenvalues[i]);
      if (i < 8) {
        Eigen::VectorXd full = Eigen::VectorXd::Zero(dim);
        for (Eigen::Index r = 0; r < m; ++r) full[states[static_cast<std::size_t>(r)]] = sys.vectors(r, i);
        lowest.push_back({sys.eigenvalues[i], std::move(full)});
      }
    }
  }
  std::sort(values.begin(), values.end());
  report.eigenvalues = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  report.degeneracy = count_degeneracy(report.eigenvalues);
  std::stable_sort(lowest.begin(), lowest.end(),
                   [](const Candidate& a, const Candidate& b) { return a.energy < b.energy; });
  report.ground_vectors.resize(dim, report.degeneracy);
  int filled = 0;
  for (const auto& c : lowest) {
    if (filled == report.degeneracy) break;
    if (c.energy <= report.eigenvalues[0] + kDegeneracyTolerance) report.ground_vectors.col(filled++) = c.vector;
  }
  if (filled != report.degeneracy) {
    throw std::runtime_error("ground eigenspace wider than the per-sector candidates kept");
  }
  return report;
}

double overlap(const Eigen::VectorXd& a, const Eigen::MatrixXd& b_space) {
  const double norm = a.norm();
  if (norm == 0.0) throw std::invalid_argument("overlap of a zero vector");
  if (a.size() != b_space.rows()) throw std::invalid_argument("overlap dimension mismatch");
  Eigen::VectorXd coeffs = b_space.transpose() * (a / norm);
  return std::min(1.0, coeffs.norm());
}

}  // namespace sncqa
