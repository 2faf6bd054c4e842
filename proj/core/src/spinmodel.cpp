#include "sncqa/spinmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace sncqa {

void LatticeSpec::validate() const {
  if (n_sites < 1) throw std::invalid_argument("lattice needs at least one site");
  auto check = [&](const std::vector<Edge>& edges, const char* which) {
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
      if (a < 1 || b < 1 || a > n_sites || b > n_sites) {
        throw std::invalid_argument(std::string(which) + " edge [" + std::to_string(a) + "," +
                                    std::to_string(b) + "] references a site outside 1.." +
                                    std::to_string(n_sites));
      }
      if (a == b) {
        throw std::invalid_argument(std::string(which) + " edge [" + std::to_string(a) + "," +
                                    std::to_string(b) + "] is a self-loop");
      }
      if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
        throw std::invalid_argument(std::string(which) + " edge [" + std::to_string(a) + "," +
                                    std::to_string(b) + "] is duplicated");
      }
    }
  };
  check(j1_edges, "j1");
  check(j2_edges, "j2");
}

double LatticeSpec::psd_shift() const {
  return 0.75 * (std::abs(J1) * static_cast<double>(j1_edges.size()) +
                 std::abs(J2) * static_cast<double>(j2_edges.size()));
}

IrrepHamiltonian heisenberg_irrep(const IrrepRep& rep, const LatticeSpec& lattice) {
  lattice.validate();
  if (rep.shape().num_rows() > 2) {
    throw std::invalid_argument("spin-1/2 Heisenberg model lives on shapes with at most two rows, got (" +
                                rep.shape().to_string() + ")");
  }
  if (rep.n() != lattice.n_sites) {
    throw std::invalid_argument("shape (" + rep.shape().to_string() + ") has " + std::to_string(rep.n()) +
                                " boxes but the lattice has " + std::to_string(lattice.n_sites) + " sites");
  }
  const int d = rep.dim();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  double constant = 0.0;
  auto add = [&](const std::vector<Edge>& edges, double J) {
    if (J == 0.0) return;
    for (auto [a, b] : edges) {
      h += (0.5 * J) * transposition_matrix(rep, std::min(a, b), std::max(a, b));
      constant -= 0.25 * J;
    }
  };
  add(lattice.j1_edges, lattice.J1);
  add(lattice.j2_edges, lattice.J2);
  h.diagonal().array() += constant;
  // Symmetrize away round-off from the conjugation chains.
  Eigen::MatrixXd sym = 0.5 * (h + h.transpose());
  return IrrepHamiltonian{rep.shape(), std::move(sym), lattice.psd_shift(), lattice};
}

IrrepHamiltonian heisenberg_irrep(const Partition& shape, const LatticeSpec& lattice) {
  if (shape.num_rows() > 2) {
    throw std::invalid_argument("spin-1/2 Heisenberg model lives on shapes with at most two rows, got (" +
                                shape.to_string() + ")");
  }
  return heisenberg_irrep(build_irrep(shape), lattice);
}

Eigen::SparseMatrix<double> heisenberg_full(const LatticeSpec& lattice) {
  lattice.validate();
  if (lattice.n_sites > 20) {
    throw ResourceLimitError("full-basis Hamiltonian limited to 20 sites, got " + std::to_string(lattice.n_sites));
  }
  const std::uint64_t dim = std::uint64_t{1} << lattice.n_sites;
  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<double> diag(dim, 0.0);
  auto add = [&](const std::vector<Edge>& edges, double J) {
    if (J == 0.0) return;
    for (auto [a, b] : edges) {
      const std::uint64_t ma = std::uint64_t{1} << (a - 1);
      const std::uint64_t mb = std::uint64_t{1} << (b - 1);
      for (std::uint64_t s = 0; s < dim; ++s) {
        const bool ba = (s & ma) != 0;
        const bool bb = (s & mb) != 0;
        if (ba == bb) {
          diag[s] += 0.25 * J;
        } else {
          diag[s] -= 0.25 * J;
          triplets.emplace_back(static_cast<int>(s ^ ma ^ mb), static_cast<int>(s), 0.5 * J);
        }
      }
    }
  };
  add(lattice.j1_edges, lattice.J1);
  add(lattice.j2_edges, lattice.J2);
  for (std::uint64_t s = 0; s < dim; ++s) {
    if (diag[s] != 0.0) triplets.emplace_back(static_cast<int>(s), static_cast<int>(s), diag[s]);
  }
  Eigen::SparseMatrix<double> h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(triplets.begin(), triplets.end());
  return h;
}

namespace {

std::vector<Edge> to_edges(std::initializer_list<std::pair<int, int>> list) {
  return {list.begin(), list.end()};
}

// 3 x 4 grid, open boundary. Site (r, c) -> 4 r + c + 1.
LatticeSpec rect3x4() {
  LatticeSpec lat;
  lat.n_sites = 12;
  lat.name = "rect3x4";
  auto site = [](int r, int c) { return 4 * r + c + 1; };
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (c + 1 < 4) lat.j1_edges.emplace_back(site(r, c), site(r, c + 1));
      if (r + 1 < 3) lat.j1_edges.emplace_back(site(r, c), site(r + 1, c));
      if (r + 1 < 3 && c + 1 < 4) {
        lat.j2_edges.emplace_back(site(r, c), site(r + 1, c + 1));
        lat.j2_edges.emplace_back(site(r, c + 1), site(r + 1, c));
      }
    }
  }
  return lat;
}

// Open 2 x 2 patch of square cells, each carrying the three kagome-type sites
// corner (0,0), right bond midpoint (1/2,0) and upper bond midpoint (0,1/2).
// Cell (x, y) -> sites 3 (2 x + y) + {1, 2, 3}. J1 joins sites at distance
// 1/2, J2 at distance sqrt(2)/2.
LatticeSpec kagome12() {
  LatticeSpec lat;
  lat.n_sites = 12;
  lat.name = "kagome12";
  lat.j1_edges = to_edges({{1, 2}, {1, 3}, {2, 7}, {3, 4}, {4, 5}, {4, 6},
                           {5, 10}, {7, 8}, {7, 9}, {9, 10}, {10, 11}, {10, 12}});
  lat.j2_edges = to_edges({{2, 3}, {2, 9}, {3, 5}, {5, 6}, {5, 9},
                           {5, 12}, {8, 9}, {9, 11}, {11, 12}});
  return lat;
}

// 2 x 2 triangular-cell kagome torus with basis 0, a1/2, a2/2.
// Cell (i, j) -> sites 3 (2 i + j) + {1, 2, 3}.
LatticeSpec kagome12_tri() {
  LatticeSpec lat;
  lat.n_sites = 12;
  lat.name = "kagome12_tri";
  lat.j1_edges = to_edges({{1, 2}, {1, 3}, {1, 6}, {1, 8}, {2, 3}, {2, 7}, {2, 12}, {3, 4},
                           {3, 11}, {4, 5}, {4, 6}, {4, 11}, {5, 6}, {5, 9}, {5, 10}, {6, 8},
                           {7, 8}, {7, 9}, {7, 12}, {8, 9}, {9, 10}, {10, 11}, {10, 12}, {11, 12}});
  lat.j2_edges = to_edges({{1, 5}, {1, 9}, {1, 11}, {1, 12}, {2, 4}, {2, 6}, {2, 9}, {2, 10},
                           {3, 5}, {3, 7}, {3, 8}, {3, 10}, {4, 8}, {4, 9}, {4, 12}, {5, 7},
                           {5, 12}, {6, 7}, {6, 10}, {6, 11}, {7, 11}, {8, 10}, {8, 12}, {9, 11}});
  return lat;
}

}  // namespace

LatticeSpec builtin_lattice(std::string_view name, double J1, double J2) {
  LatticeSpec lat;
  if (name == "rect3x4") {
    lat = rect3x4();
  } else if (name == "kagome12") {
    lat = kagome12();
  } else if (name == "kagome12_tri") {
    lat = kagome12_tri();
  } else {
    throw std::invalid_argument("unknown builtin lattice '" + std::string(name) + "'");
  }
  lat.J1 = J1;
  lat.J2 = J2;
  return lat;
}

std::vector<std::string> builtin_lattice_names() { return {"rect3x4", "kagome12", "kagome12_tri"}; }

LatticeSpec ring_lattice(int n, double J1) {
  LatticeSpec lat;
  lat.n_sites = n;
  lat.name = "ring" + std::to_string(n);
  lat.J1 = J1;
  lat.J2 = 0.0;
  for (int i = 1; i <= n; ++i) {
    int j = i % n + 1;
    if (n == 2 && i == 2) break;
    if (i != j) lat.j1_edges.emplace_back(i, j);
  }
  return lat;
}

}  // namespace sncqa
