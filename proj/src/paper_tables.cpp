#include "schern/repring.hpp"

#include <utility>

namespace schern {

namespace {

// terms: (fundamental weight index, multiplicity)
PaperRow row(int n, std::initializer_list<std::pair<int, int>> terms, Partition partition,
             long long n_lambda) {
  std::vector<int> coeffs(static_cast<std::size_t>(n - 1), 0);
  for (auto [index, mult] : terms) coeffs[static_cast<std::size_t>(index - 1)] = mult;
  return PaperRow{std::move(coeffs), std::move(partition), BigInt(n_lambda)};
}

std::vector<PaperTable> build_tables() {
  PaperTable sl8{"sl8-mu2", GroupSpec{8, 2},
                 "published table of second Chern classes of generators of R[SL8/mu2]",
                 {}};
  sl8.rows = {
      row(8, {{1, 2}}, {2}, 16),
      row(8, {{2, 1}}, {1, 1}, 6),
      row(8, {{3, 2}}, {2, 2, 2}, 700),
      row(8, {{4, 1}}, {1, 1, 1, 1}, 20),
      row(8, {{5, 2}}, {2, 2, 2, 2, 2}, 700),
      row(8, {{6, 1}}, {1, 1, 1, 1, 1, 1}, 6),
      row(8, {{7, 2}}, {2, 2, 2, 2, 2, 2, 2}, 10),
      row(8, {{1, 1}, {3, 1}}, {2, 1, 1}, 156),
      row(8, {{1, 1}, {5, 1}}, {2, 1, 1, 1, 1}, 170),
      row(8, {{1, 1}, {7, 1}}, {2, 1, 1, 1, 1, 1, 1}, 16),
      row(8, {{3, 1}, {5, 1}}, {2, 2, 2, 1, 1}, 1344),
      row(8, {{3, 1}, {7, 1}}, {2, 2, 2, 1, 1, 1, 1}, 170),
      row(8, {{5, 1}, {7, 1}}, {2, 2, 2, 2, 2, 1, 1}, 156),
  };

  PaperTable sl9{"sl9-mu3", GroupSpec{9, 3},
                 "published table of second Chern classes of generators of R[SL9/mu3]",
                 {}};
  sl9.rows = {
      row(9, {{1, 3}}, {3}, 165),
      row(9, {{2, 3}}, {3, 3}, 3465),
      row(9, {{3, 1}}, {1, 1, 1}, 21),
      row(9, {{4, 3}}, {3, 3, 3, 3}, 116424),
      row(9, {{5, 3}}, {3, 3, 3, 3, 3}, 116424),
      row(9, {{6, 1}}, {1, 1, 1, 1, 1, 1}, 21),
      row(9, {{7, 3}}, {3, 3, 3, 3, 3, 3, 3}, 3465),
      row(9, {{8, 3}}, {3, 3, 3, 3, 3, 3, 3, 3}, 66),
      row(9, {{1, 1}, {2, 1}}, {2, 1}, 78),
      row(9, {{1, 1}, {5, 1}}, {2, 1, 1, 1, 1}, 420),
      row(9, {{1, 1}, {8, 1}}, {2, 1, 1, 1, 1, 1, 1, 1}, 18),
      row(9, {{1, 2}, {4, 1}}, {3, 1, 1, 1}, 2541),
      row(9, {{1, 2}, {7, 1}}, {3, 1, 1, 1, 1, 1, 1}, 693),
      row(9, {{2, 1}, {4, 1}}, {2, 2, 1, 1}, 1701),
      row(9, {{2, 1}, {7, 1}}, {2, 2, 1, 1, 1, 1, 1}, 486),
      row(9, {{2, 2}, {5, 1}}, {3, 3, 1, 1, 1}, 37125),
      row(9, {{2, 2}, {8, 1}}, {3, 3, 1, 1, 1, 1, 1, 1}, 2541),
      row(9, {{4, 1}, {5, 1}}, {2, 2, 2, 2, 1}, 5292),
      row(9, {{4, 1}, {8, 1}}, {2, 2, 2, 2, 1, 1, 1, 1}, 420),
      row(9, {{4, 2}, {7, 1}}, {3, 3, 3, 3, 1, 1, 1}, 117810),
      row(9, {{5, 1}, {7, 1}}, {2, 2, 2, 2, 2, 1, 1}, 1701),
      row(9, {{5, 2}, {8, 1}}, {3, 3, 3, 3, 3, 1, 1, 1}, 29106),
      row(9, {{7, 1}, {8, 1}}, {2, 2, 2, 2, 2, 2, 2, 1}, 78),
  };
  return {std::move(sl8), std::move(sl9)};
}

}  // namespace

const std::vector<PaperTable>& paper_tables() {
  static const std::vector<PaperTable> tables = build_tables();
  return tables;
}

const PaperTable* paper_table(GroupSpec spec) {
  for (const auto& table : paper_tables())
    if (table.spec == spec) return &table;
  return nullptr;
}

}  // namespace schern
