#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline void partitions_rec(int n, int max_part, int rows_left, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n, int max_rows) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, max_rows, cur, out);
  return out;
}

// Every filling of the shape by 1..n (row-major box order) that increases
// along rows and columns, returned as content vectors.
inline std::vector<std::vector<int>> syt_contents(const std::vector<int>& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<std::pair<int, int>> boxes;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r) {
    for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) boxes.emplace_back(r, c);
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    std::vector<std::vector<int>> grid(shape.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) grid[static_cast<std::size_t>(boxes[i].first)].push_back(labels[i]);
    bool ok = true;
    for (std::size_t r = 0; r < grid.size() && ok; ++r) {
      for (std::size_t c = 0; c < grid[r].size() && ok; ++c) {
        if (c > 0 && grid[r][c] < grid[r][c - 1]) ok = false;
        if (r > 0 && grid[r][c] < grid[r - 1][c]) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> content(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < grid.size(); ++r) {
      for (std::size_t c = 0; c < grid[r].size(); ++c) {
        content[static_cast<std::size_t>(grid[r][c] - 1)] = static_cast<int>(c) - static_cast<int>(r);
      }
    }
    out.push_back(content);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Number of permutations of n points with exactly l non-fixed points.
inline std::uint64_t count_moved(int n, int l) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    int moved = 0;
    for (int i = 0; i < n; ++i) moved += p[static_cast<std::size_t>(i)] != i;
    count += moved == l;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Dense total-spin operators on n qubits from Pauli matrices; bit s-1 is site s,
// bit value 0 is spin up.
inline Eigen::MatrixXcd total_spin_squared(int n) {
  const int dim = 1 << n;
  Eigen::MatrixXcd sx = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd sy = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(dim, dim);
  const std::complex<double> I(0.0, 1.0);
  for (int s = 0; s < dim; ++s) {
    for (int k = 0; k < n; ++k) {
      const bool down = (s >> k) & 1;
      const int flipped = s ^ (1 << k);
      sx(flipped, s) += 0.5;
      // sigma_y |up> = i |down>, sigma_y |down> = -i |up>
      sy(flipped, s) += down ? -0.5 * I : 0.5 * I;
      sz(s, s) += down ? -0.5 : 0.5;
    }
  }
  return sx * sx + sy * sy + sz * sz;
}

// Heisenberg energy sum_e J S_a.S_b on n qubits from Pauli products.
inline Eigen::MatrixXd heisenberg_dense(int n, const std::vector<std::pair<int, int>>& edges, double J) {
  const int dim = 1 << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (auto [a, b] : edges) {
    for (int s = 0; s < dim; ++s) {
      const int za = (s >> (a - 1)) & 1;
      const int zb = (s >> (b - 1)) & 1;
      h(s, s) += J * 0.25 * (za == zb ? 1.0 : -1.0);
      // XX + YY flips antiparallel pairs with amplitude 2 * (1/4)
      if (za != zb) h(s ^ (1 << (a - 1)) ^ (1 << (b - 1)), s) += J * 0.5;
    }
  }
  return h;
}

}  // namespace oracle
