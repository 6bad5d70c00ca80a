#pragma once

#include "schern/numeric.hpp"
#include "schern/partition.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace schern {

// c2(gamma_n^lambda) = n_lambda * c2(gamma_n) in H^4(BSL_n, Z). Two routes:
//  * enumeration: splitting principle over the weight basis indexed by
//    semistandard tableaux, keeping only degree <= 2 terms;
//  * closed form: n_lambda = dim * (lambda, lambda + 2 rho) / (n^2 - 1).

enum class Method { enumeration, closed_form, both };

// `automatic` is closed form, plus an enumeration cross-check whenever
// dim <= crosscheck_ceiling.
enum class MethodPolicy { automatic, enumeration, closed_form, both };

std::string_view to_string(Method method);
std::string_view to_string(MethodPolicy policy);

struct ChernOptions {
  MethodPolicy policy = MethodPolicy::automatic;
  std::uint64_t enumeration_ceiling = 10'000'000;
  std::uint64_t crosscheck_ceiling = 100'000;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct ChernResult {
  BigInt n_lambda;
  Method method = Method::closed_form;
  bool cross_checked = false;
  BigInt dim;
};

/// Symmetric-function bookkeeping in x_1..x_n truncated to degree 2:
/// constant, linear and quadratic coefficients, higher terms dropped.
class TruncatedQuadratic {
 public:
  explicit TruncatedQuadratic(int n);

  int variables() const { return n_; }

  /// *this *= (1 + sum_i root[i] x_i), then truncate.
  void multiply_by_root(std::span<const int> root);

  const BigInt& constant() const { return constant_; }
  const BigInt& linear(int i) const { return linear_[static_cast<std::size_t>(i)]; }
  /// Coefficient of x_i x_j (0-based; x_i^2 when i == j).
  const BigInt& quadratic(int i, int j) const;

  /// q - k (x_1 + ... + x_n)^2 with k the coefficient of x_1^2.
  TruncatedQuadratic minus_c1_squared() const;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  BigInt constant_{1};
  std::vector<BigInt> linear_;
  std::vector<BigInt> quadratic_;  // upper triangle, row-major
};

/// Removes a full column of height n (lambda_n from every part).
Partition determinant_reduced(int n, const Partition& shape);

/// The tableau product algorithm taken literally: multiply the truncated
/// quadratic by (1 + content) once per tableau, cancel c1^2, read off x1 x2.
BigInt c2_truncated_product(int n, const Partition& shape);

/// Streaming enumeration: sum over tableaux of m(1)^2 - m(1) m(2), split
/// over first-row prefixes when threads allow.
ChernResult c2_enumeration(int n, const Partition& shape, const ChernOptions& options = {});

/// (lambda, lambda + 2 rho) = sum_i lambda_i (lambda_i + n + 1 - 2i) - |lambda|^2 / n.
Rational casimir(int n, const Partition& shape);

ChernResult c2_closed_form(int n, const Partition& shape);

/// Front door. Throws CrossCheckFailure when two routes disagree.
ChernResult c2(int n, const Partition& shape, const ChernOptions& options = {});

/// Highest weight of the dual representation:
/// (lambda_1 - lambda_n, ..., lambda_1 - lambda_1), normalized.
Partition dual_partition(int n, const Partition& shape);

}  // namespace schern
