#pragma once

#include "schern/numeric.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schern {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction; the empty partition is the trivial shape.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  // Zero past the last row.
  int operator[](int row) const {
    return row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  /// Comma-separated parts, e.g. "2,2,2". Accepts optional surrounding
  /// parentheses and the empty string / "()" for the empty partition.
  static Partition parse(std::string_view text);

  /// "(2,1,1)"; "()" for the empty partition.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// (1,1,...,1) with k ones.
Partition column(int k);

Partition conjugate(const Partition& shape);

/// Hook length of cell (row, col), 0-based. The cell must lie in the diagram.
int hook_length(const Partition& shape, int row, int col);

/// dim of the Schur functor S^shape applied to C^n, by the hook-content
/// formula. Zero when shape has more than n rows.
BigInt schur_dimension(int n, const Partition& shape);

/// All partitions of `total` in reverse lexicographic order.
std::vector<Partition> partitions_of(int total);

}  // namespace schern
