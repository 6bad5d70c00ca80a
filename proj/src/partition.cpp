#include "schern/partition.hpp"

#include "schern/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace schern {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw PreconditionError("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw PreconditionError("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  // Zeros are only meaningful as trailing padding.
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] == 0 && parts[i + 1] != 0)
      throw PreconditionError("partition parts must be weakly decreasing");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

Partition column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

Partition conjugate(const Partition& shape) {
  std::vector<int> cols(static_cast<std::size_t>(shape[0]), 0);
  for (int part : shape.parts())
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

int hook_length(const Partition& shape, int row, int col) {
  int arm = shape[row] - col - 1;
  int leg = 0;
  for (int r = row + 1; r < shape.length() && shape[r] > col; ++r) ++leg;
  return arm + leg + 1;
}

BigInt schur_dimension(int n, const Partition& shape) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (shape.length() > n) return 0;
  // One exact quotient of two products: contents over hooks.
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (int i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      numerator *= n + j - i;
      denominator *= hook_length(shape, i, j);
    }
  }
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) throw InternalError("hook-content quotient is not integral");
  return quotient;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int total) {
  if (total < 0) throw PreconditionError("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(total, total, prefix, out);
  return out;
}

}  // namespace schern
