#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sncqa {

/// Integer partition of n (a Young diagram). Rows are positive and weakly
/// decreasing; the constructor enforces this.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> rows);

  /// Parses the "l1,l2,..." text form, e.g. "4,2".
  static Partition parse(std::string_view text);

  const std::vector<int>& rows() const { return rows_; }
  int row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const { return size_; }
  bool empty() const { return rows_.empty(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

/// Standard Young tableau stored as the row of each label: row_of[k] is the
/// 0-based row holding label k+1. Content is col - row of each label's box.
class StandardTableau {
 public:
  StandardTableau() = default;

  /// Builds from the row sequence; throws if it is not a valid standard filling.
  explicit StandardTableau(std::vector<int> row_of);

  /// Reconstructs the unique tableau with the given content vector.
  static StandardTableau from_content(const std::vector<int>& content);

  const Partition& shape() const { return shape_; }
  int size() const { return static_cast<int>(row_of_.size()); }
  const std::vector<int>& row_of() const { return row_of_; }
  const std::vector<int>& content() const { return content_; }
  const std::vector<int>& column_of() const { return col_of_; }

  /// 1-based label stored at (row, col), both 0-based.
  int label_at(int row, int col) const;

  /// Rows of labels, 1-based, e.g. {{1,3,4,6},{2,5}}.
  std::vector<std::vector<int>> grid() const;

  std::string to_string() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.row_of_ == b.row_of_;
  }

 private:
  Partition shape_;
  std::vector<int> row_of_;
  std::vector<int> col_of_;
  std::vector<int> content_;
};

/// Outer product of the shifted content vector beta = content + rows(shape).
struct TensorContent {
  int n = 0;
  std::vector<std::int64_t> entries;  // row-major n x n

  std::int64_t at(int r, int s) const {
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(s)];
  }
  friend bool operator==(const TensorContent&, const TensorContent&) = default;
};

/// A half-integer stored as twice its value.
struct HalfInteger {
  int twice = 0;
  double value() const { return 0.5 * twice; }
  std::string to_string() const;
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

/// All partitions of n with at most max_rows rows, in reverse lexicographic
/// order (so (n) first).
std::vector<Partition> enumerate_partitions(int n, int max_rows);

/// Number of standard tableaux of the shape (hook length formula).
std::uint64_t dim_irrep(const Partition& shape);

/// All standard tableaux in last-letter order: tableaux with n in a lower row
/// come first, ties broken recursively on n-1, n-2, ...
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

TensorContent tensor_content(const StandardTableau& tableau);

std::vector<int> shifted_content(const StandardTableau& tableau);

/// SU(2) spin labels j_1..j_n; only defined for shapes with at most two rows.
std::vector<HalfInteger> spin_labels(const StandardTableau& tableau);

/// Partitions of n-1 reachable by removing one corner box, ordered by the
/// row of the removed box, top row first.
std::vector<Partition> branch_children(const Partition& shape);

}  // namespace sncqa
