#include "schern/weights.hpp"

#include "schern/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace schern {

GroupSpec GroupSpec::make(int n, int d) {
  if (n < 2) throw PreconditionError("n must be at least 2");
  if (d < 1) throw PreconditionError("d must be positive");
  if (n % d != 0)
    throw PreconditionError("d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  return GroupSpec{n, d};
}

Weight::Weight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  for (int a : coeffs_)
    if (a < 0) throw PreconditionError("weight coefficients must be nonnegative");
}

int Weight::token_count() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

int Weight::weighted_sum() const {
  int total = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) total += static_cast<int>(i + 1) * coeffs_[i];
  return total;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (coeffs_[i] > 1) out += std::to_string(coeffs_[i]);
    out += 'a';
    out += std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

namespace {

Weight combine(const Weight& lhs, const Weight& rhs, int sign) {
  if (lhs.rank() != rhs.rank()) throw PreconditionError("weights of different rank");
  std::vector<int> out(lhs.coeffs().begin(), lhs.coeffs().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * rhs.coeffs()[i];
  return Weight(std::move(out));
}

}  // namespace

Weight operator+(const Weight& lhs, const Weight& rhs) { return combine(lhs, rhs, 1); }
Weight operator-(const Weight& lhs, const Weight& rhs) { return combine(lhs, rhs, -1); }

bool dominated_by(const Weight& lhs, const Weight& rhs) {
  if (lhs.rank() != rhs.rank()) return false;
  for (std::size_t i = 0; i < lhs.coeffs().size(); ++i)
    if (lhs.coeffs()[i] > rhs.coeffs()[i]) return false;
  return true;
}

Partition partition_of(const Weight& weight) {
  auto a = weight.coeffs();
  std::vector<int> parts(a.size(), 0);
  int running = 0;
  for (std::size_t j = a.size(); j-- > 0;) {
    running += a[j];
    parts[j] = running;
  }
  return Partition(std::move(parts));
}

Weight weight_of(const Partition& shape, int n) {
  if (n < 2) throw PreconditionError("n must be at least 2");
  if (shape.length() > n)
    throw PreconditionError("partition " + shape.to_string() + " has more than n = " +
                            std::to_string(n) + " rows");
  // a_{n-1} = lambda_{n-1} - lambda_n, so full columns of height n drop out.
  std::vector<int> coeffs(static_cast<std::size_t>(n - 1), 0);
  for (int j = 0; j < n - 1; ++j) coeffs[static_cast<std::size_t>(j)] = shape[j] - shape[j + 1];
  return Weight(std::move(coeffs));
}

bool descends(const Partition& shape, GroupSpec spec) { return shape.size() % spec.d == 0; }

bool in_monoid(const Weight& weight, GroupSpec spec) {
  return weight.rank() == spec.n && weight.weighted_sum() % spec.d == 0;
}

std::vector<Weight> hilbert_basis(GroupSpec spec) {
  const int n = spec.n;
  const int d = spec.d;
  if (d > 64) throw CeilingExceeded("hilbert_basis supports d <= 64");
  std::vector<Weight> basis;

  // Atoms are the zero-sum sequences over Z/d (labels 1..n-1 reduced mod d)
  // with no proper nonempty zero-sum subsequence. Grow nondecreasing label
  // sequences, tracking the residues reached by nonempty subsequences. A
  // sequence whose total is 0 is an atom iff no subsequence of the sequence
  // before the last label already summed to 0: any zero-sum proper
  // subsequence using the last label has a zero-sum complement without it.
  // Atoms have at most d tokens, which the recursion depth respects.
  std::vector<int> coeffs(static_cast<std::size_t>(n - 1), 0);
  auto rotate = [d](std::uint64_t mask, int shift) -> std::uint64_t {
    if (shift == 0) return mask;
    std::uint64_t full = d == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << d) - 1);
    return ((mask << shift) | (mask >> (d - shift))) & full;
  };
  std::function<void(int, std::uint64_t, int, int)> grow = [&](int start, std::uint64_t reached,
                                                               int total, int tokens) {
    if (tokens == d) return;
    for (int label = start; label < n; ++label) {
      int r = label % d;
      std::uint64_t next = reached | rotate(reached, r) | (std::uint64_t{1} << r);
      int next_total = (total + r) % d;
      ++coeffs[static_cast<std::size_t>(label - 1)];
      if (next_total == 0) {
        basis.emplace_back(coeffs);
      } else if (!(next & 1u)) {
        grow(label, next, next_total, tokens + 1);
      }
      --coeffs[static_cast<std::size_t>(label - 1)];
    }
  };
  grow(1, 0, 0, 0);

  std::sort(basis.begin(), basis.end(), std::greater<>{});
  return basis;
}

std::vector<Weight> monoid_members_up_to(GroupSpec spec, int bound,
                                         std::uint64_t candidate_ceiling) {
  if (bound < 0) throw PreconditionError("bound must be nonnegative");
  const int dims = spec.n - 1;
  // (bound+1)^(n-1) without overflow.
  std::uint64_t candidates = 1;
  for (int i = 0; i < dims; ++i) {
    if (candidates > candidate_ceiling / static_cast<std::uint64_t>(bound + 1))
      throw CeilingExceeded("monoid enumeration exceeds the candidate ceiling");
    candidates *= static_cast<std::uint64_t>(bound + 1);
  }
  std::vector<Weight> out;
  std::vector<int> coeffs(static_cast<std::size_t>(dims), 0);
  while (true) {
    Weight w(coeffs);
    if (w.weighted_sum() % spec.d == 0) out.push_back(std::move(w));
    int i = 0;
    while (i < dims && coeffs[static_cast<std::size_t>(i)] == bound) coeffs[static_cast<std::size_t>(i++)] = 0;
    if (i == dims) break;
    ++coeffs[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace schern
