#include "sncqa/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sncqa {

__extension__ typedef unsigned __int128 u128;

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) {
      throw std::invalid_argument("partition rows must be positive");
    }
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw std::invalid_argument("partition rows must be weakly decreasing");
    }
  }
  size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> rows;
  std::string token;
  auto flush = [&] {
    if (token.empty()) {
      throw std::invalid_argument("empty row in partition '" + std::string(text) + "'");
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw std::invalid_argument("bad partition row '" + token + "'");
    }
    rows.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') continue;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return Partition(std::move(rows));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out;
}

StandardTableau::StandardTableau(std::vector<int> row_of) : row_of_(std::move(row_of)) {
  std::vector<int> lengths;
  col_of_.reserve(row_of_.size());
  content_.reserve(row_of_.size());
  for (int r : row_of_) {
    if (r < 0 || r > static_cast<int>(lengths.size())) {
      throw std::invalid_argument("row sequence is not a standard filling");
    }
    if (r == static_cast<int>(lengths.size())) lengths.push_back(0);
    // The box must sit under an existing box of the row above.
    if (r > 0 && lengths[static_cast<std::size_t>(r)] >= lengths[static_cast<std::size_t>(r - 1)]) {
      throw std::invalid_argument("row sequence is not a standard filling");
    }
    int c = lengths[static_cast<std::size_t>(r)]++;
    col_of_.push_back(c);
    content_.push_back(c - r);
  }
  shape_ = Partition(lengths);
}

StandardTableau StandardTableau::from_content(const std::vector<int>& content) {
  // Each new box goes at the end of the unique row whose next free box has
  // the requested content.
  std::vector<int> lengths;
  std::vector<int> row_of;
  row_of.reserve(content.size());
  for (int c : content) {
    int chosen = -1;
    for (int r = 0; r <= static_cast<int>(lengths.size()); ++r) {
      int len = r < static_cast<int>(lengths.size()) ? lengths[static_cast<std::size_t>(r)] : 0;
      if (len - r == c) {
        chosen = r;
        break;
      }
    }
    if (chosen < 0) throw std::invalid_argument("not a content vector");
    if (chosen == static_cast<int>(lengths.size())) lengths.push_back(0);
    ++lengths[static_cast<std::size_t>(chosen)];
    row_of.push_back(chosen);
  }
  return StandardTableau(std::move(row_of));
}

int StandardTableau::label_at(int row, int col) const {
  for (std::size_t k = 0; k < row_of_.size(); ++k) {
    if (row_of_[k] == row && col_of_[k] == col) return static_cast<int>(k) + 1;
  }
  throw std::out_of_range("box outside the tableau");
}

std::vector<std::vector<int>> StandardTableau::grid() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.num_rows()));
  for (std::size_t k = 0; k < row_of_.size(); ++k) {
    out[static_cast<std::size_t>(row_of_[k])].push_back(static_cast<int>(k) + 1);
  }
  return out;
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  auto rows = grid();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << ' ';
      os << rows[r][c];
    }
  }
  return os.str();
}

std::string HalfInteger::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

void syt_rec(std::vector<int>& lengths, int n, std::vector<int>& row_of,
             std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(row_of);
    return;
  }
  // Place label n into a corner, bottom row first.
  for (int r = static_cast<int>(lengths.size()) - 1; r >= 0; --r) {
    auto ru = static_cast<std::size_t>(r);
    if (lengths[ru] == 0) continue;
    bool corner = (ru + 1 == lengths.size()) || lengths[ru + 1] < lengths[ru];
    if (!corner) continue;
    --lengths[ru];
    row_of[static_cast<std::size_t>(n - 1)] = r;
    syt_rec(lengths, n - 1, row_of, out);
    ++lengths[ru];
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_rows) {
  if (n < 1 || max_rows < 1) throw std::invalid_argument("n and max_rows must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, max_rows, cur, out);
  return out;
}

std::uint64_t dim_irrep(const Partition& shape) {
  const int n = shape.size();
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < shape.num_rows(); ++r) {
    for (int c = 0; c < shape.row(r); ++c) {
      int arm = shape.row(r) - c - 1;
      int leg = 0;
      for (int rr = r + 1; rr < shape.num_rows() && shape.row(rr) > c; ++rr) ++leg;
      hooks.push_back(arm + leg + 1);
    }
  }
  // Multiply 1..n and divide out hooks as soon as they divide, keeping the
  // running value small and exact.
  u128 value = 1;
  std::sort(hooks.begin(), hooks.end());
  std::vector<bool> used(hooks.size(), false);
  for (int k = 2; k <= n; ++k) {
    value *= static_cast<unsigned>(k);
    for (std::size_t i = 0; i < hooks.size(); ++i) {
      if (!used[i] && hooks[i] > 1 && value % static_cast<unsigned>(hooks[i]) == 0) {
        value /= static_cast<unsigned>(hooks[i]);
        used[i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    if (!used[i] && hooks[i] > 1) value /= static_cast<unsigned>(hooks[i]);
  }
  return static_cast<std::uint64_t>(value);
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<int> lengths = shape.rows();
  std::vector<int> row_of(static_cast<std::size_t>(shape.size()), 0);
  std::vector<std::vector<int>> raw;
  syt_rec(lengths, shape.size(), row_of, raw);
  std::vector<StandardTableau> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::vector<int> shifted_content(const StandardTableau& tableau) {
  std::vector<int> beta = tableau.content();
  const int rows = tableau.shape().num_rows();
  for (int& b : beta) b += rows;
  return beta;
}

TensorContent tensor_content(const StandardTableau& tableau) {
  auto beta = shifted_content(tableau);
  TensorContent tc;
  tc.n = tableau.size();
  tc.entries.reserve(beta.size() * beta.size());
  for (int a : beta) {
    for (int b : beta) tc.entries.push_back(static_cast<std::int64_t>(a) * b);
  }
  return tc;
}

std::vector<HalfInteger> spin_labels(const StandardTableau& tableau) {
  if (tableau.shape().num_rows() > 2) {
    throw std::invalid_argument("spin labels need a shape with at most two rows");
  }
  std::vector<HalfInteger> out;
  out.reserve(static_cast<std::size_t>(tableau.size()));
  int twice = 0;
  for (int r : tableau.row_of()) {
    twice += (r == 0) ? 1 : -1;
    out.push_back({twice});
  }
  return out;
}

std::vector<Partition> branch_children(const Partition& shape) {
  std::vector<Partition> out;
  if (shape.size() <= 1) return out;
  const auto& rows = shape.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool corner = (r + 1 == rows.size()) || rows[r + 1] < rows[r];
    if (!corner) continue;
    std::vector<int> child = rows;
    if (--child[r] == 0) child.pop_back();
    out.emplace_back(std::move(child));
  }
  return out;
}

}  // namespace sncqa
