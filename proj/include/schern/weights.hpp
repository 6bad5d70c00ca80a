#pragma once

#include "schern/partition.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace schern {

/// SL_n / mu_d. d divides n; d = 1 is SL_n itself.
struct GroupSpec {
  int n = 2;
  int d = 1;

  /// Validates n >= 2, d >= 1, d | n.
  static GroupSpec make(int n, int d);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Dominant weight of SL_n: coeffs[i] is the multiplicity of the fundamental
/// weight alpha_{i+1}, so there are n-1 coefficients.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coeffs);

  /// The zero weight of SL_n.
  static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n - 1), 0)); }

  std::span<const int> coeffs() const { return coeffs_; }
  int rank() const { return static_cast<int>(coeffs_.size()) + 1; }  // the n of SL_n
  int coeff(int i) const { return coeffs_[static_cast<std::size_t>(i - 1)]; }  // 1-based

  int token_count() const;   // sum a_i
  int weighted_sum() const;  // sum i*a_i, equals |partition_of(w)|
  bool is_zero() const { return token_count() == 0; }

  /// "2a1+a3"; "0" for the zero weight.
  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<int> coeffs_;
};

Weight operator+(const Weight& lhs, const Weight& rhs);
Weight operator-(const Weight& lhs, const Weight& rhs);

/// Componentwise lhs <= rhs.
bool dominated_by(const Weight& lhs, const Weight& rhs);

/// lambda_j = sum_{i >= j} a_i.
Partition partition_of(const Weight& weight);

/// Inverse of partition_of. A full column of height n is removed first
/// (the determinant is trivial on SL_n). Throws when length(shape) > n.
Weight weight_of(const Partition& shape, int n);

/// |shape| = 0 mod d.
bool descends(const Partition& shape, GroupSpec spec);

/// sum i*a_i = 0 mod d.
bool in_monoid(const Weight& weight, GroupSpec spec);

/// Minimal generating set (Hilbert basis) of the dominant congruence monoid
/// { a : sum i*a_i = 0 mod d }. Sorted lexicographically descending.
std::vector<Weight> hilbert_basis(GroupSpec spec);

/// Every monoid element with all coefficients <= bound, including zero.
/// Throws CeilingExceeded when (bound+1)^(n-1) > candidate_ceiling.
std::vector<Weight> monoid_members_up_to(GroupSpec spec, int bound,
                                         std::uint64_t candidate_ceiling = 10'000'000);

}  // namespace schern
