#include "schern/chern.hpp"

#include "schern/errors.hpp"
#include "schern/tableaux.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <thread>

namespace schern {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::enumeration: return "enumeration";
    case Method::closed_form: return "closed-form";
    case Method::both: return "both";
  }
  return "?";
}

std::string_view to_string(MethodPolicy policy) {
  switch (policy) {
    case MethodPolicy::automatic: return "auto";
    case MethodPolicy::enumeration: return "enumeration";
    case MethodPolicy::closed_form: return "closed-form";
    case MethodPolicy::both: return "both";
  }
  return "?";
}

// ---------------------------------------------------------------------------

TruncatedQuadratic::TruncatedQuadratic(int n)
    : n_(n),
      linear_(static_cast<std::size_t>(n)),
      quadratic_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2) {
  if (n < 1) throw PreconditionError("need at least one variable");
}

std::size_t TruncatedQuadratic::index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Row i of the upper triangle starts after rows 0..i-1.
  auto row = static_cast<std::size_t>(i);
  return row * static_cast<std::size_t>(n_) - row * (row - 1) / 2 + static_cast<std::size_t>(j - i);
}

const BigInt& TruncatedQuadratic::quadratic(int i, int j) const { return quadratic_[index(i, j)]; }

void TruncatedQuadratic::multiply_by_root(std::span<const int> root) {
  if (static_cast<int>(root.size()) != n_) throw PreconditionError("root has wrong arity");
  // Quadratic terms read the old linear part, so update them first.
  for (int i = 0; i < n_; ++i) {
    if (linear_[static_cast<std::size_t>(i)] == 0) continue;
    const BigInt& li = linear_[static_cast<std::size_t>(i)];
    for (int j = 0; j < n_; ++j) {
      int rj = root[static_cast<std::size_t>(j)];
      if (rj != 0) quadratic_[index(i, j)] += li * rj;
    }
  }
  for (int i = 0; i < n_; ++i) {
    int ri = root[static_cast<std::size_t>(i)];
    if (ri != 0) linear_[static_cast<std::size_t>(i)] += constant_ * ri;
  }
}

TruncatedQuadratic TruncatedQuadratic::minus_c1_squared() const {
  TruncatedQuadratic out = *this;
  BigInt k = quadratic(0, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) out.quadratic_[index(i, j)] -= (i == j ? k : 2 * k);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_rank(int n, const Partition& shape) {
  if (n < 2) throw PreconditionError("c2 needs n >= 2");
  if (shape.length() > n)
    throw PreconditionError("partition " + shape.to_string() + " has more than n = " +
                            std::to_string(n) + " rows");
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Sum of m(1)^2 - m(1) m(2) over one sub-stream.
BigInt streaming_sum(SsytStream& stream) {
  constexpr std::int64_t kFlush = std::int64_t{1} << 60;
  BigInt total = 0;
  std::int64_t acc = 0;
  while (stream.next()) {
    const auto& m = stream.content();
    std::int64_t m1 = m[0];
    std::int64_t m2 = m[1];
    acc += m1 * m1 - m1 * m2;
    if (acc > kFlush || acc < -kFlush) {
      total += acc;
      acc = 0;
    }
  }
  total += acc;
  return total;
}

constexpr std::uint64_t kParallelThreshold = 4096;

}  // namespace

Partition determinant_reduced(int n, const Partition& shape) {
  if (shape.length() < n) return shape;
  int drop = shape[n - 1];
  std::vector<int> parts;
  for (int part : shape.parts()) parts.push_back(part - drop);
  return Partition(std::move(parts));
}

BigInt c2_truncated_product(int n, const Partition& shape) {
  require_rank(n, shape);
  TruncatedQuadratic q(n);
  SsytStream stream(n, determinant_reduced(n, shape));
  while (stream.next()) q.multiply_by_root(stream.content());
  return q.minus_c1_squared().quadratic(0, 1);
}

ChernResult c2_enumeration(int n, const Partition& shape, const ChernOptions& options) {
  require_rank(n, shape);
  Partition reduced = determinant_reduced(n, shape);
  ChernResult result;
  result.method = Method::enumeration;
  result.dim = schur_dimension(n, reduced);
  if (result.dim > options.enumeration_ceiling)
    throw CeilingExceeded("dim " + result.dim.str() + " of " + shape.to_string() +
                          " exceeds the enumeration ceiling " +
                          std::to_string(options.enumeration_ceiling) + "; use the closed form");

  unsigned threads = resolve_threads(options.threads);
  if (threads <= 1 || result.dim < kParallelThreshold || reduced.empty()) {
    SsytStream stream(n, reduced);
    result.n_lambda = streaming_sum(stream);
  } else {
    auto prefixes = first_row_prefixes(n, reduced, std::min(reduced[0], 2));
    std::vector<BigInt> partial(prefixes.size());
    std::atomic<std::size_t> next_prefix{0};
    auto worker = [&] {
      for (std::size_t i = next_prefix++; i < prefixes.size(); i = next_prefix++) {
        SsytStream stream(n, reduced, prefixes[i]);
        partial[i] = streaming_sum(stream);
      }
    };
    std::vector<std::future<void>> jobs;
    unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(prefixes.size()));
    for (unsigned t = 0; t < workers; ++t) jobs.push_back(std::async(std::launch::async, worker));
    for (auto& job : jobs) job.get();
    result.n_lambda = 0;
    for (const auto& p : partial) result.n_lambda += p;
  }
  if (result.n_lambda < 0) throw InternalError("negative n_lambda from enumeration");
  return result;
}

Rational casimir(int n, const Partition& shape) {
  require_rank(n, shape);
  BigInt quadratic = 0;
  for (int i = 0; i < shape.length(); ++i) {
    int part = shape[i];
    quadratic += BigInt(part) * (part + n + 1 - 2 * (i + 1));
  }
  BigInt total = shape.size();
  return Rational(quadratic) - Rational(total * total, BigInt(n));
}

ChernResult c2_closed_form(int n, const Partition& shape) {
  require_rank(n, shape);
  Partition reduced = determinant_reduced(n, shape);
  ChernResult result;
  result.method = Method::closed_form;
  result.dim = schur_dimension(n, reduced);
  Rational value = Rational(result.dim) * casimir(n, reduced) / Rational(BigInt(n) * n - 1);
  if (denominator(value) != 1)
    throw InternalError("closed form for " + shape.to_string() + " is not integral");
  result.n_lambda = numerator(value);
  if (result.n_lambda < 0) throw InternalError("negative n_lambda from closed form");
  return result;
}

ChernResult c2(int n, const Partition& shape, const ChernOptions& options) {
  auto run_both = [&] {
    ChernResult closed = c2_closed_form(n, shape);
    ChernResult enumerated = c2_enumeration(n, shape, options);
    if (closed.n_lambda != enumerated.n_lambda)
      throw CrossCheckFailure("c2(" + std::to_string(n) + ", " + shape.to_string() +
                                  "): enumeration " + enumerated.n_lambda.str() +
                                  " != closed form " + closed.n_lambda.str(),
                              enumerated.n_lambda, closed.n_lambda);
    closed.method = Method::both;
    closed.cross_checked = true;
    return closed;
  };

  switch (options.policy) {
    case MethodPolicy::enumeration: return c2_enumeration(n, shape, options);
    case MethodPolicy::closed_form: return c2_closed_form(n, shape);
    case MethodPolicy::both: return run_both();
    case MethodPolicy::automatic: break;
  }
  require_rank(n, shape);
  BigInt dim = schur_dimension(n, determinant_reduced(n, shape));
  if (dim <= options.crosscheck_ceiling && dim <= options.enumeration_ceiling) return run_both();
  return c2_closed_form(n, shape);
}

Partition dual_partition(int n, const Partition& shape) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (shape.length() > n)
    throw PreconditionError("partition " + shape.to_string() + " has more than n rows");
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = shape[0] - shape[n - 1 - i];
  return Partition(std::move(parts));
}

}  // namespace schern
