#include "schern/tableaux.hpp"

#include "schern/errors.hpp"

#include <algorithm>

namespace schern {

SsytStream::SsytStream(int n, const Partition& shape, std::span<const int> first_row_prefix)
    : n_(n), shape_(shape), content_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (static_cast<int>(first_row_prefix.size()) > shape[0])
    throw PreconditionError("first-row prefix longer than the first row");

  Partition cols = conjugate(shape);
  col_heights_.assign(cols.parts().begin(), cols.parts().end());
  for (int c = 0; c < cols.length(); ++c) {
    col_start_.push_back(static_cast<int>(cell_row_.size()));
    for (int r = 0; r < cols[c]; ++r) {
      cell_row_.push_back(r);
      cell_col_.push_back(c);
    }
  }
  pinned_.assign(cell_row_.size(), 0);
  for (std::size_t c = 0; c < first_row_prefix.size(); ++c)
    pinned_[static_cast<std::size_t>(col_start_[c])] = first_row_prefix[c];
  values_.assign(cell_row_.size(), 0);
}

int SsytStream::entry(int row, int col) const {
  return values_[static_cast<std::size_t>(col_start_[static_cast<std::size_t>(col)] + row)];
}

int SsytStream::lower_bound(std::size_t cell) const {
  int row = cell_row_[cell];
  int col = cell_col_[cell];
  int lo = 1;
  if (row > 0) lo = values_[cell - 1] + 1;  // strictly below the cell above
  if (col > 0) lo = std::max(lo, entry(row, col - 1));  // weakly right of the left cell
  if (pinned_[cell]) lo = std::max(lo, pinned_[cell]);
  return lo;
}

int SsytStream::upper_bound(std::size_t cell) const {
  int row = cell_row_[cell];
  int col = cell_col_[cell];
  // Leave room for the strictly increasing cells below.
  int hi = n_ - (col_heights_[static_cast<std::size_t>(col)] - 1 - row);
  if (pinned_[cell]) hi = std::min(hi, pinned_[cell]);
  return hi;
}

bool SsytStream::next() {
  if (done_) return false;
  const auto cells = static_cast<std::ptrdiff_t>(values_.size());
  std::ptrdiff_t k;
  if (!started_) {
    started_ = true;
    if (cells == 0) return true;  // the empty tableau, once
    k = 0;
  } else {
    if (cells == 0) {
      done_ = true;
      return false;
    }
    k = cells - 1;
  }

  while (k >= 0) {
    auto cell = static_cast<std::size_t>(k);
    int current = values_[cell];
    int candidate;
    if (current == 0) {
      candidate = lower_bound(cell);
    } else {
      --content_[static_cast<std::size_t>(current - 1)];
      candidate = current + 1;
    }
    if (candidate <= upper_bound(cell)) {
      values_[cell] = candidate;
      ++content_[static_cast<std::size_t>(candidate - 1)];
      if (k == cells - 1) return true;
      ++k;
      values_[static_cast<std::size_t>(k)] = 0;
    } else {
      values_[cell] = 0;
      --k;
    }
  }
  done_ = true;
  return false;
}

namespace {

void prefixes_rec(int n, const Partition& shape, const Partition& cols, int length,
                  std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  auto col = static_cast<int>(prefix.size());
  if (col == length) {
    out.push_back(prefix);
    return;
  }
  int lo = prefix.empty() ? 1 : prefix.back();
  int hi = n - (cols[col] - 1);
  for (int v = lo; v <= hi; ++v) {
    prefix.push_back(v);
    prefixes_rec(n, shape, cols, length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> first_row_prefixes(int n, const Partition& shape, int prefix_len) {
  std::vector<std::vector<int>> out;
  if (shape.length() > n) return out;
  int length = std::clamp(prefix_len, 0, shape[0]);
  std::vector<int> prefix;
  prefixes_rec(n, shape, conjugate(shape), length, prefix, out);
  return out;
}

BigInt ssyt_count(int n, const Partition& shape) {
  SsytStream stream(n, shape);
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

}  // namespace schern
