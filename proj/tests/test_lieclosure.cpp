#include <gtest/gtest.h>

#include <random>

#include "sncqa/lieclosure.hpp"

using namespace sncqa;
using cd = std::complex<double>;

namespace {

LatticeSpec chain(int n) {
  LatticeSpec lat;
  lat.n_sites = n;
  for (int i = 1; i < n; ++i) lat.j1_edges.emplace_back(i, i + 1);
  return lat;
}

Eigen::MatrixXcd random_unitary(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = cd(g(rng), g(rng));
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
}

}  // namespace

TEST(Closure, Abelian) {
  GeneratorSet gens(3);
  gens.add_hermitian("I", Eigen::MatrixXcd::Identity(3, 3));
  auto r = closure_dimension(gens);
  EXPECT_EQ(r.dimension, 1);
  EXPECT_TRUE(r.closed);
  EXPECT_THROW(gens.add("bad", Eigen::MatrixXcd::Identity(3, 3)), std::invalid_argument);
  EXPECT_THROW(closure_dimension(GeneratorSet(17)), ResourceLimitError);
}

TEST(Closure, TwoOneTriangleIsNotConnected) {
  // The triangle couples every pair equally, so H_P is a multiple of I.
  IrrepRep rep(Partition({2, 1}));
  auto hp = exchange_irrep(rep, ring_lattice(3));
  EXPECT_LE((hp - hp(0, 0) * Eigen::MatrixXd::Identity(2, 2)).norm(), 1e-14);
  EXPECT_FALSE(is_path_connected(hp));
  EXPECT_EQ(closure_dimension(cqa_generators(rep, hp)).dimension, 2);
}

TEST(Closure, TwoOneChainIsDense) {
  IrrepRep rep(Partition({2, 1}));
  auto hp = exchange_irrep(rep, chain(3));
  EXPECT_TRUE(is_path_connected(hp));
  auto r = closure_dimension(cqa_generators(rep, hp));
  EXPECT_TRUE(r.closed);
  EXPECT_EQ(r.dimension, 4);
}

TEST(Closure, ThreeOneRing) {
  IrrepRep rep(Partition({3, 1}));
  auto hp = exchange_irrep(rep, ring_lattice(4));
  EXPECT_EQ(closure_dimension(cqa_generators(rep, hp)).dimension, 9);
}

TEST(Closure, Qaoa) {
  EXPECT_EQ(closure_dimension(qaoa_generators(1)).dimension, 4);
  EXPECT_EQ(closure_dimension(qaoa_generators(2)).dimension, 16);
  EXPECT_LT(closure_dimension(qaoa_generators(2, true)).dimension, 16);
  EXPECT_TRUE(verify_qaoa_universality(1));
  EXPECT_TRUE(verify_qaoa_universality(2));
  EXPECT_THROW(verify_qaoa_universality(4), ResourceLimitError);
}

TEST(Closure, InvariantUnderConjugation) {
  IrrepRep rep(Partition({3, 2}));
  auto gens = cqa_generators(rep, exchange_irrep(rep, chain(5)));
  const int base = closure_dimension(gens).dimension;
  for (unsigned seed : {1u, 2u}) {
    Eigen::MatrixXcd u = random_unitary(rep.dim(), seed);
    GeneratorSet rotated(rep.dim());
    for (const auto& g : gens.generators()) rotated.add(g.name, u * g.matrix * u.adjoint());
    EXPECT_EQ(closure_dimension(rotated).dimension, base);
  }
}

TEST(Closure, MonotoneAndToleranceStable) {
  IrrepRep rep(Partition({3, 1, 1}));
  auto mixer = mixer_generators(rep);
  const int mix_dim = closure_dimension(mixer).dimension;
  auto full = cqa_generators(rep, exchange_irrep(rep, ring_lattice(5)));
  const int full_dim = closure_dimension(full).dimension;
  EXPECT_LE(mix_dim, full_dim);
  for (double tol : {1e-8, 1e-9, 1e-10}) EXPECT_EQ(closure_dimension(full, 64, tol).dimension, full_dim) << tol;
}

TEST(Closure, DepthLimitReported) {
  IrrepRep rep(Partition({3, 2}));
  auto r = closure_dimension(cqa_generators(rep, exchange_irrep(rep, chain(5))), 1);
  EXPECT_FALSE(r.closed);
  EXPECT_LT(r.dimension, 25);
}

TEST(PathConnected, Examples) {
  Eigen::MatrixXd z = Eigen::Vector2d(1, -1).asDiagonal();
  EXPECT_FALSE(is_path_connected(z));
  Eigen::MatrixXd x(2, 2);
  x << 0, 1, 1, 0;
  EXPECT_TRUE(is_path_connected(x));
  Eigen::MatrixXd full = Eigen::MatrixXd::Ones(4, 4);
  EXPECT_TRUE(is_path_connected(full));
  Eigen::MatrixXd two = Eigen::MatrixXd::Zero(4, 4);
  two(0, 2) = two(2, 0) = 1;
  two(1, 3) = two(3, 1) = 1;
  EXPECT_EQ(connected_blocks(two), (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
}

TEST(Density, SmallSymmetricGroups) {
  for (int n : {4, 5}) {
    auto checks = verify_cqa_density(ring_lattice(n));
    EXPECT_EQ(checks.size(), n == 4 ? 5u : 7u);
    for (const auto& c : checks) {
      if (c.path_connected) EXPECT_TRUE(c.dense()) << c.shape.to_string() << " " << c.closure.dimension;
    }
  }
}

TEST(Density, ExchangeMatchesHeisenbergOnTwoRows) {
  auto lat = chain(6);
  lat.j2_edges = {{1, 3}};
  lat.J2 = 0.4;
  IrrepRep rep(Partition({4, 2}));
  EXPECT_LE((exchange_irrep(rep, lat) - heisenberg_irrep(rep, lat).matrix).norm(), 1e-13);
}
