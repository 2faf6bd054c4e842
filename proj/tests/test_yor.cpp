#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "sncqa/yor.hpp"

using namespace sncqa;

TEST(Yor, TwoOneExamples) {
  IrrepRep rep(Partition({2, 1}));
  Eigen::Matrix2d s1;
  s1 << 1, 0, 0, -1;
  Eigen::Matrix2d s2;
  s2 << -0.5, std::sqrt(3.0) / 2, std::sqrt(3.0) / 2, 0.5;
  EXPECT_LE((rep.adjacent(1) - s1).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((rep.adjacent(2) - s2).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Yor, SingleRowAndColumn) {
  IrrepRep row(Partition({4}));
  IrrepRep col(Partition({1, 1, 1, 1}));
  for (int k = 1; k < 4; ++k) {
    EXPECT_DOUBLE_EQ(row.adjacent(k)(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(col.adjacent(k)(0, 0), -1.0);
  }
}

TEST(Yor, CoxeterRelationsUpToEight) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& shape : enumerate_partitions(n, n)) {
      IrrepRep rep(shape);
      const auto I = Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
      std::vector<Eigen::MatrixXd> s(static_cast<std::size_t>(n));
      for (int k = 1; k < n; ++k) s[static_cast<std::size_t>(k)] = rep.adjacent(k);
      for (int k = 1; k < n; ++k) {
        const auto& a = s[static_cast<std::size_t>(k)];
        EXPECT_LE((a * a - I).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LE((a * a.transpose() - I).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LE((a - a.transpose()).cwiseAbs().maxCoeff(), 1e-12);
        if (k + 1 < n) {
          const auto& b = s[static_cast<std::size_t>(k + 1)];
          EXPECT_LE((a * b * a - b * a * b).cwiseAbs().maxCoeff(), 1e-12) << shape.to_string() << " k=" << k;
        }
        for (int j = k + 2; j < n; ++j) {
          const auto& b = s[static_cast<std::size_t>(j)];
          EXPECT_LE((a * b - b * a).cwiseAbs().maxCoeff(), 1e-12);
        }
      }
    }
  }
}

TEST(Yor, YjmIsSumOfTranspositions) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& shape : enumerate_partitions(n, n)) {
      IrrepRep rep(shape);
      for (int k = 2; k <= n; ++k) {
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
        for (int i = 1; i < k; ++i) x += transposition_matrix(rep, i, k);
        Eigen::MatrixXd expected = rep.yjm(k).cast<double>().asDiagonal();
        EXPECT_LE((x - expected).cwiseAbs().maxCoeff(), 1e-12) << shape.to_string() << " k=" << k;
        for (int t = 0; t < rep.dim(); ++t) EXPECT_EQ(rep.yjm(k)[t], rep.basis()[static_cast<std::size_t>(t)].content()[k - 1]);
      }
    }
  }
}

TEST(Yor, SparseActionsMatchDense) {
  IrrepRep rep(Partition({4, 2, 1}));
  std::mt19937 rng(3);
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(rep.dim(), rep.dim());
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  for (int k = 1; k < rep.n(); ++k) {
    Eigen::MatrixXd left = m, right = m;
    rep.apply_adjacent_left(k, left);
    rep.apply_adjacent_right(k, right);
    EXPECT_LE((left - rep.adjacent(k) * m).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LE((right - m * rep.adjacent(k)).cwiseAbs().maxCoeff(), 1e-13);
    Eigen::VectorXcd v = m.col(0).cast<std::complex<double>>();
    rep.apply_adjacent(k, v);
    EXPECT_LE((v.real() - rep.adjacent(k) * m.col(0)).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Yor, FactorizationReproducesPermutation) {
  std::vector<int> p(6);
  std::iota(p.begin(), p.end(), 1);
  int checked = 0;
  do {
    auto word = adjacent_factorization(p);
    std::vector<int> acc(6);
    std::iota(acc.begin(), acc.end(), 1);
    for (int k : word) acc = compose(acc, transposition_one_line(6, k, k + 1));
    EXPECT_EQ(acc, p);
    ++checked;
  } while (std::next_permutation(p.begin(), p.end()) && checked < 720);
  EXPECT_THROW(adjacent_factorization(std::vector<int>{1, 1, 2}), std::invalid_argument);
}

TEST(Yor, Homomorphism) {
  IrrepRep rep(Partition({3, 2}));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> a(5), b(5);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Eigen::MatrixXd lhs = permutation_matrix(rep, compose(a, b));
    Eigen::MatrixXd rhs = permutation_matrix(rep, a) * permutation_matrix(rep, b);
    EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Yor, TranspositionAgreesWithPermutationMatrix) {
  IrrepRep rep(Partition({4, 3}));
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      Eigen::MatrixXd a = transposition_matrix(rep, i, j);
      Eigen::MatrixXd b = permutation_matrix(rep, transposition_one_line(7, i, j));
      EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Yor, GroupAlgebraClassSumIsScalar) {
  // The sum of all transpositions is central: content sum times identity.
  for (const auto& shape : enumerate_partitions(5, 5)) {
    IrrepRep rep(shape);
    std::vector<GroupAlgebraTerm> terms;
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) terms.push_back({1.0, transposition_one_line(5, i, j)});
    }
    Eigen::MatrixXcd m = group_algebra_matrix(rep, terms);
    int content_sum = 0;
    for (int c : rep.basis()[0].content()) content_sum += c;
    Eigen::MatrixXcd expected = content_sum * Eigen::MatrixXcd::Identity(rep.dim(), rep.dim());
    EXPECT_LE((m - expected).cwiseAbs().maxCoeff(), 1e-12) << shape.to_string();
  }
}
