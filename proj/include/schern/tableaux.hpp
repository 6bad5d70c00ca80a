#pragma once

#include "schern/numeric.hpp"
#include "schern/partition.hpp"

#include <span>
#include <vector>

namespace schern {

/// counts[i] is the number of cells holding entry i+1 in one tableau.
using TableauContent = std::vector<int>;

/// Pull-style enumeration of the semistandard Young tableaux of a shape with
/// entries in 1..n. Cells are filled column by column (top to bottom within a
/// column) with backtracking; state is O(|shape| + n).
///
/// A non-empty `first_row_prefix` pins the first cells of row 0, which splits
/// the tableau space into disjoint sub-streams (see first_row_prefixes).
class SsytStream {
 public:
  SsytStream(int n, const Partition& shape, std::span<const int> first_row_prefix = {});

  /// Advances to the next tableau. Returns false once exhausted.
  bool next();

  const TableauContent& content() const { return content_; }

  /// Entry at (row, col) of the current tableau, 1-based value.
  int entry(int row, int col) const;

  int n() const { return n_; }
  const Partition& shape() const { return shape_; }

 private:
  int lower_bound(std::size_t cell) const;
  int upper_bound(std::size_t cell) const;

  int n_;
  Partition shape_;
  std::vector<int> col_heights_;
  std::vector<int> col_start_;  // index of cell (0, col) in fill order
  std::vector<int> cell_row_;
  std::vector<int> cell_col_;
  std::vector<int> pinned_;  // 0 = free
  std::vector<int> values_;  // 0 = unset
  TableauContent content_;
  bool started_ = false;
  bool done_ = false;
};

/// Every valid assignment of the first min(prefix_len, shape[0]) entries of
/// row 0. The sub-streams they pin are disjoint and cover the whole space.
std::vector<std::vector<int>> first_row_prefixes(int n, const Partition& shape, int prefix_len);

/// Calls visit(const TableauContent&) once per tableau.
template <class Visitor>
void for_each_ssyt(int n, const Partition& shape, Visitor&& visit) {
  SsytStream stream(n, shape);
  while (stream.next()) visit(stream.content());
}

/// Number of tableaux, by exhausting the stream.
BigInt ssyt_count(int n, const Partition& shape);

}  // namespace schern
