#include "sncqa/schur.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "sncqa/spinmodel.hpp"

namespace sncqa {

namespace {

std::vector<std::uint32_t> weight_states(int n, int weight) {
  std::vector<std::uint32_t> out;
  if (weight < 0 || weight > n) return out;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < limit; ++s) {
    if (std::popcount(s) == weight) out.push_back(s);
  }
  return out;
}

int find_state(const std::vector<std::uint32_t>& states, std::uint32_t s) {
  auto it = std::lower_bound(states.begin(), states.end(), s);
  if (it == states.end() || *it != s) return -1;
  return static_cast<int>(it - states.begin());
}

std::uint32_t swap_bits(std::uint32_t s, int a, int b) {
  const std::uint32_t ba = (s >> a) & 1u;
  const std::uint32_t bb = (s >> b) & 1u;
  if (ba == bb) return s;
  return s ^ ((1u << a) | (1u << b));
}

}  // namespace

PermutationModule::PermutationModule(int n, const Partition& mu) : n_(n), mu_(mu) {
  if (n < 1 || n > 20) throw std::invalid_argument("permutation module needs 1 <= n <= 20");
  if (mu.size() != n) throw std::invalid_argument("mu must be a partition of n");
  if (mu.num_rows() > 2) throw std::invalid_argument("qubit permutation modules need mu with at most two rows");
  weight_ = mu.num_rows() == 2 ? mu.row(1) : 0;
  states_ = weight_states(n, weight_);
}

int PermutationModule::index_of(std::uint32_t state) const { return find_state(states_, state); }

Eigen::VectorXd PermutationModule::apply_swap(const Eigen::VectorXd& v, int i, int j) const {
  Eigen::VectorXd out(dim());
  for (int idx = 0; idx < dim(); ++idx) {
    auto s = states_[static_cast<std::size_t>(idx)];
    out[index_of(swap_bits(s, i - 1, j - 1))] = v[idx];
  }
  return out;
}

Eigen::VectorXd PermutationModule::apply_yjm(const Eigen::VectorXd& v, int k) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
  for (int i = 1; i < k; ++i) out += apply_swap(v, i, k);
  return out;
}

Eigen::MatrixXd PermutationModule::yjm_matrix(int k) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
  for (int col = 0; col < dim(); ++col) {
    auto s = states_[static_cast<std::size_t>(col)];
    for (int i = 1; i < k; ++i) m(index_of(swap_bits(s, i - 1, k - 1)), col) += 1.0;
  }
  return m;
}

Eigen::MatrixXd PermutationModule::casimir_matrix(int k) const {
  // J_k^2 = 3k/4 + sum_{i<j<=k} (SWAP(i,j) - 1/2).
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
  const double pairs = 0.5 * k * (k - 1);
  m.diagonal().setConstant(0.75 * k - 0.5 * pairs);
  for (int col = 0; col < dim(); ++col) {
    auto s = states_[static_cast<std::size_t>(col)];
    for (int j = 2; j <= k; ++j) {
      for (int i = 1; i < j; ++i) m(index_of(swap_bits(s, i - 1, j - 1)), col) += 1.0;
    }
  }
  return m;
}

const YoungVector* SchurBlock::find(const StandardTableau& tableau) const {
  for (const auto& v : vectors) {
    if (v.tableau == tableau) return &v;
  }
  return nullptr;
}

Eigen::MatrixXd SchurBlock::basis_matrix() const {
  Eigen::MatrixXd m(module.dim(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vectors[i].vector;
  return m;
}

namespace {

// Young vectors of k sites at one weight, keyed by the tableau row sequence.
struct Stage {
  std::vector<std::uint32_t> states;
  std::map<std::vector<int>, Eigen::VectorXd> vectors;
};

Eigen::VectorXd extend(const Stage& from, const Eigen::VectorXd& v, const std::vector<std::uint32_t>& to_states,
                       std::uint32_t new_bit) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(to_states.size()));
  for (std::size_t i = 0; i < from.states.size(); ++i) {
    out[find_state(to_states, from.states[i] | new_bit)] = v[static_cast<Eigen::Index>(i)];
  }
  return out;
}

Eigen::VectorXd apply_last_yjm(const std::vector<std::uint32_t>& states, const Eigen::VectorXd& v, int k) {
  // X_k on k sites: sum of SWAP(i, k) for i < k.
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (std::size_t idx = 0; idx < states.size(); ++idx) {
    const double value = v[static_cast<Eigen::Index>(idx)];
    if (value == 0.0) continue;
    for (int i = 0; i + 1 < k; ++i) {
      out[find_state(states, swap_bits(states[idx], i, k - 1))] += value;
    }
  }
  return out;
}

std::vector<int> content_of_rows(const std::vector<int>& rows) {
  return StandardTableau(rows).content();
}

// Row that receives the next box when the new content is c, or -1.
int row_for_content(const std::vector<int>& rows, int c) {
  std::vector<int> lengths;
  for (int r : rows) {
    if (r == static_cast<int>(lengths.size())) lengths.push_back(0);
    ++lengths[static_cast<std::size_t>(r)];
  }
  for (int r = 0; r <= static_cast<int>(lengths.size()); ++r) {
    int len = r < static_cast<int>(lengths.size()) ? lengths[static_cast<std::size_t>(r)] : 0;
    bool fits = r == 0 || len < lengths[static_cast<std::size_t>(r - 1)];
    if (fits && len - r == c) return r;
  }
  return -1;
}

void align_signs(std::vector<YoungVector>& vectors, const PermutationModule& module) {
  std::map<Partition, std::vector<std::size_t>> by_shape;
  for (std::size_t i = 0; i < vectors.size(); ++i) by_shape[vectors[i].shape].push_back(i);
  for (auto& [shape, members] : by_shape) {
    std::map<std::vector<int>, std::size_t> lookup;
    for (auto i : members) lookup[vectors[i].tableau.row_of()] = i;
    // Root: first tableau in basis order.
    auto basis = enumerate_syt(shape);
    std::size_t root = lookup.at(basis.front().row_of());
    {
      auto& v = vectors[root].vector;
      Eigen::Index best = 0;
      for (Eigen::Index i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best]) + 1e-12) best = i;
      }
      if (v[best] < 0) v = -v;
    }
    std::vector<bool> fixed(vectors.size(), false);
    fixed[root] = true;
    std::queue<std::size_t> pending;
    pending.push(root);
    while (!pending.empty()) {
      auto cur = pending.front();
      pending.pop();
      const auto& rows = vectors[cur].tableau.row_of();
      for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
        if (rows[k] == rows[k + 1]) continue;
        auto swapped = rows;
        std::swap(swapped[k], swapped[k + 1]);
        auto it = lookup.find(swapped);
        if (it == lookup.end() || fixed[it->second]) continue;
        auto& other = vectors[it->second].vector;
        const double coupling =
            other.dot(module.apply_swap(vectors[cur].vector, static_cast<int>(k) + 1, static_cast<int>(k) + 2));
        if (coupling < 0) other = -other;
        fixed[it->second] = true;
        pending.push(it->second);
      }
    }
  }
}

}  // namespace

SchurBlock build_schur_block(int n, const Partition& mu) {
  if (n > 16) throw ResourceLimitError("Schur block construction limited to n <= 16, got " + std::to_string(n));
  PermutationModule module(n, mu);
  const int target = module.weight();

  // stages[w] holds Young vectors of k sites with w ones.
  std::vector<Stage> stages(2);
  stages[0].states = weight_states(1, 0);
  stages[0].vectors.emplace(std::vector<int>{0}, Eigen::VectorXd::Ones(1));
  stages[1].states = weight_states(1, 1);
  stages[1].vectors.emplace(std::vector<int>{0}, Eigen::VectorXd::Ones(1));

  for (int k = 2; k <= n; ++k) {
    std::vector<Stage> next(static_cast<std::size_t>(k + 1));
    const std::uint32_t new_bit = std::uint32_t{1} << (k - 1);
    for (int w = 0; w <= k; ++w) {
      // Only weights that can still reach the target are kept.
      if (w > target || w < target - (n - k)) continue;
      auto& stage = next[static_cast<std::size_t>(w)];
      stage.states = weight_states(k, w);
      const Stage* zero = w < k ? &stages[static_cast<std::size_t>(w)] : nullptr;
      const Stage* one = w >= 1 ? &stages[static_cast<std::size_t>(w - 1)] : nullptr;

      std::map<std::vector<int>, std::vector<Eigen::VectorXd>> candidates;
      if (zero) {
        for (const auto& [rows, v] : zero->vectors) candidates[rows].push_back(extend(*zero, v, stage.states, 0));
      }
      if (one) {
        for (const auto& [rows, v] : one->vectors) candidates[rows].push_back(extend(*one, v, stage.states, new_bit));
      }
      for (auto& [rows, span] : candidates) {
        const auto m = static_cast<Eigen::Index>(span.size());
        Eigen::MatrixXd q(stage.states.size(), m);
        for (Eigen::Index c = 0; c < m; ++c) q.col(c) = span[static_cast<std::size_t>(c)];
        Eigen::MatrixXd xq(q.rows(), m);
        for (Eigen::Index c = 0; c < m; ++c) xq.col(c) = apply_last_yjm(stage.states, q.col(c), k);
        Eigen::MatrixXd a = q.transpose() * xq;
        if ((xq - q * a).norm() > 1e-9) {
          throw std::logic_error("YJM element does not preserve the refined eigenspace");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (a + a.transpose()));
        for (Eigen::Index e = 0; e < m; ++e) {
          const double value = solver.eigenvalues()[e];
          const int content = static_cast<int>(std::lround(value));
          if (std::abs(value - content) > 1e-8) throw std::logic_error("non-integer YJM eigenvalue");
          const int row = row_for_content(rows, content);
          if (row < 0) throw std::logic_error("YJM eigenvalue is not an addable content");
          auto new_rows = rows;
          new_rows.push_back(row);
          Eigen::VectorXd vec = q * solver.eigenvectors().col(e);
          if (!stage.vectors.emplace(std::move(new_rows), vec.normalized()).second) {
            throw std::logic_error("joint YJM eigenvalue collision");
          }
        }
      }
    }
    stages = std::move(next);
  }

  SchurBlock block{mu, module, {}};
  const auto& final_stage = stages[static_cast<std::size_t>(target)];
  if (final_stage.states != module.basis_states()) throw std::logic_error("module basis mismatch");
  for (const auto& [rows, v] : final_stage.vectors) {
    StandardTableau t(rows);
    block.vectors.push_back({t.shape(), t, v});
  }
  // Shapes in enumerate_partitions order, tableaux in basis order.
  std::sort(block.vectors.begin(), block.vectors.end(), [](const YoungVector& a, const YoungVector& b) {
    if (a.shape != b.shape) return a.shape > b.shape;
    return false;
  });
  std::vector<YoungVector> ordered;
  ordered.reserve(block.vectors.size());
  for (std::size_t i = 0; i < block.vectors.size();) {
    std::size_t j = i;
    while (j < block.vectors.size() && block.vectors[j].shape == block.vectors[i].shape) ++j;
    for (const auto& t : enumerate_syt(block.vectors[i].shape)) {
      for (std::size_t s = i; s < j; ++s) {
        if (block.vectors[s].tableau == t) ordered.push_back(block.vectors[s]);
      }
    }
    i = j;
  }
  block.vectors = std::move(ordered);
  align_signs(block.vectors, block.module);
  (void)content_of_rows;
  return block;
}

std::string default_ordering(int n, int k) {
  if (k < 0 || k > n || (n - k) % 2 != 0) throw std::invalid_argument("n - k must be even and 0 <= k <= n");
  return std::string(static_cast<std::size_t>(k), '0') + std::string(static_cast<std::size_t>((n - k) / 2), 's');
}

Eigen::VectorXd initial_product_state(const PermutationModule& module, std::string_view ordering) {
  // Accumulate amplitudes over bitstrings, site by site.
  std::map<std::uint32_t, double> amps{{0u, 1.0}};
  int site = 0;
  for (char c : ordering) {
    if (c == ',' || c == ' ') continue;
    std::map<std::uint32_t, double> next;
    if (c == '0') {
      next = std::move(amps);
      site += 1;
    } else if (c == 's') {
      const double r = 1.0 / std::sqrt(2.0);
      for (auto [s, a] : amps) {
        next[s | (1u << (site + 1))] += r * a;  // |01>
        next[s | (1u << site)] -= r * a;        // |10>
      }
      site += 2;
    } else {
      throw std::invalid_argument(std::string("unknown placement symbol '") + c + "' (expected 0 or s)");
    }
    amps = std::move(next);
  }
  if (site != module.n()) {
    throw std::invalid_argument("placement pattern covers " + std::to_string(site) + " sites, expected " +
                                std::to_string(module.n()));
  }
  Eigen::VectorXd v = Eigen::VectorXd::Zero(module.dim());
  for (auto [s, a] : amps) {
    int idx = module.index_of(s);
    if (idx < 0) throw std::invalid_argument("placement pattern does not lie in the permutation module");
    v[idx] += a;
  }
  return v;
}

std::vector<ExpansionTerm> expand_initial_state(int n, int k, std::string_view ordering) {
  if (k < 0 || k > n || (n - k) % 2 != 0) {
    throw std::invalid_argument("initial state needs n - k even and 0 <= k <= n");
  }
  const int zeros = static_cast<int>(std::count(ordering.begin(), ordering.end(), '0'));
  if (zeros != k) {
    throw std::invalid_argument("placement pattern has " + std::to_string(zeros) + " zeros, expected " +
                                std::to_string(k));
  }
  std::vector<int> rows{(n + k) / 2};
  if ((n - k) / 2 > 0) rows.push_back((n - k) / 2);
  const Partition lambda(rows);
  auto block = build_schur_block(n, lambda);
  Eigen::VectorXd psi = initial_product_state(block.module, ordering);
  std::vector<ExpansionTerm> out;
  for (const auto& yv : block.vectors) {
    const double c = yv.vector.dot(psi);
    if (yv.shape != lambda) {
      if (std::abs(c) > 1e-10) throw std::logic_error("initial state leaks outside lambda = mu");
      continue;
    }
    out.push_back({yv.shape, yv.tableau, c});
  }
  return out;
}

HalfInteger total_spin_check(const PermutationModule& module, const Eigen::VectorXd& v) {
  if (v.size() != module.dim()) throw std::invalid_argument("vector does not match the module");
  const double norm2 = v.squaredNorm();
  if (norm2 == 0.0) throw std::invalid_argument("total spin of a zero vector");
  const int n = module.n();
  const int w = module.weight();
  const double sz = 0.5 * (n - 2 * w);
  // S_+ lowers the number of ones by one; S_- raises it.
  const auto lower = weight_states(n, w - 1);
  Eigen::VectorXd up = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(lower.size()));
  const auto& states = module.basis_states();
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (int b = 0; b < n; ++b) {
      if (states[i] & (1u << b)) up[find_state(lower, states[i] & ~(1u << b))] += v[static_cast<Eigen::Index>(i)];
    }
  }
  Eigen::VectorXd j2 = (sz * sz + sz) * v;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    for (int b = 0; b < n; ++b) {
      if (!(lower[i] & (1u << b))) j2[module.index_of(lower[i] | (1u << b))] += up[static_cast<Eigen::Index>(i)];
    }
  }
  const double casimir = v.dot(j2) / norm2;
  if ((j2 - casimir * v).norm() > 1e-8 * std::sqrt(norm2)) {
    throw std::invalid_argument("vector is not a total-spin eigenvector");
  }
  const double j = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * std::max(casimir, 0.0)));
  return HalfInteger{static_cast<int>(std::lround(2.0 * j))};
}

}  // namespace sncqa
