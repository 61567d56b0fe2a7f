#include <doctest.h>

#include <algorithm>

#include "polytc/tables.hpp"

using namespace polytc;

TEST_CASE("residue table matches the reference") {
  auto table = reproduce_bigtable();
  auto diff = diff_bigtable(table);
  CHECK(diff.cells == 300);
  CHECK(diff.matching == 300);
  CHECK(diff.mismatches.empty());
  CHECK(bigtable_coverage_gaps(table).empty());
  CHECK(bigtable_reference().size() == 30);
}

TEST_CASE("a flipped cell is reported") {
  auto table = reproduce_bigtable();
  table.marks[3][2] = table.marks[3][2] == 'x' ? '.' : 'x';
  auto diff = diff_bigtable(table);
  CHECK(diff.matching == 299);
  CHECK(diff.mismatches.size() == 1);
}

TEST_CASE("psi table rows verify") {
  auto verdicts = verify_table_tt();
  REQUIRE(verdicts.size() == 27);
  for (const auto& v : verdicts) {
    INFO(v.row.label());
    CHECK(v.verified);
    CHECK_FALSE(v.checks.empty());
  }
  CHECK(verdicts.front().row.label() == table_tt_reference().front().label());
  CHECK(verdicts.back().row.label() == "43, 52, 61");
}

TEST_CASE("psi table row 321, 43, 52") {
  const TtRow* row = nullptr;
  for (const auto& r : table_tt_reference()) {
    if (r.label() == "321, 43, 52") row = &r;
  }
  REQUIRE(row);
  std::vector<Subset> expect{Subset{},          Subset::of({1}),    Subset::of({2}),
                             Subset::of({5}),   Subset::of({1, 2}), Subset::of({1, 3}),
                             Subset::of({1, 4}), Subset::of({2, 5})};
  auto listed = row->psi_ones;
  std::sort(listed.begin(), listed.end());
  std::sort(expect.begin(), expect.end());
  CHECK(listed == expect);
}
