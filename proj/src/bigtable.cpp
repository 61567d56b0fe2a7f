#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "polytc/parity.hpp"
#include "polytc/tables.hpp"

namespace polytc {

namespace {

// m = 2^e + m' with 2 <= m' <= 2^e - 1, e = floor(log2 m).
std::optional<int> generic_offset(int m) {
  if (m < 1) return std::nullopt;
  const int pow = 1 << (std::bit_width(static_cast<unsigned>(m)) - 1);
  const int mp = m - pow;
  if (mp < 2 || mp > pow - 1) return std::nullopt;
  return mp;
}

}  // namespace

std::optional<int> BigTableColumn::alpha(int m) const {
  if (m < 4 || mclass_of(m) != mclass) return std::nullopt;
  std::optional<int> a;
  if (label == "thm1" || label == "thm2" || label == "thm3" || label == "thm4") {
    auto mp = generic_offset(m);
    if (!mp) return std::nullopt;
    if (label == "thm1") a = 2 * *mp - 3;
    else if (label == "thm2") a = 2 * *mp - 2;
    else a = 2 * *mp - 1;
  } else if (label.starts_with("thm5")) {
    a = m - variant;
  } else if (label == "thm6") {
    a = m - 1;
  } else if (label.starts_with("thm7")) {
    a = m - 1 + variant;
  }
  if (!a || *a < 0 || r_exponent(m, *a) < 0) return std::nullopt;
  return a;
}

int BigTableColumn::r_exponent(int m, int alpha) const {
  return expansion == Expansion::w2_squared ? 2 * m - 4 - alpha : 2 * m - 3 - alpha;
}

ProductSpec BigTableColumn::product(int m, int w1, int w2, int w3) const {
  auto a = alpha(m);
  if (!a) throw std::invalid_argument(label + " does not apply at m = " + std::to_string(m));
  const int e2 = expansion == Expansion::w2_squared ? 2 : 1;
  return ProductSpec::make(r_exponent(m, *a), {{w1, *a}, {w2, e2}, {w3, 1}});
}

const std::vector<BigTableColumn>& bigtable_columns() {
  using E = Expansion;
  static const std::vector<BigTableColumn> cols{
      {"thm1", 0, MClass::generic, E::w2_squared, 0},
      {"thm2", 0, MClass::generic, E::w2_squared, 0},
      {"thm3", 0, MClass::generic, E::w2_squared, 0},
      {"thm4", 0, MClass::generic, E::w2_single, 0},
      {"thm5(3)", 1, MClass::power, E::w2_squared, 3},
      {"thm5(2)", 1, MClass::power, E::w2_squared, 2},
      {"thm5(1)", 1, MClass::power, E::w2_squared, 1},
      {"thm6", 1, MClass::power, E::w2_single, 0},
      {"thm7(1)", 2, MClass::power_plus_one, E::w2_squared, 1},
      {"thm7(-1)", 2, MClass::power_plus_one, E::w2_squared, -1},
  };
  return cols;
}

std::vector<std::vector<bool>> column_qbars(const BigTableColumn& column, int m_max) {
  std::set<std::vector<bool>> seen;
  for (int m = 4; m <= m_max; ++m) {
    if (auto a = column.alpha(m)) seen.insert(qbar(column.expansion, m, *a));
  }
  return {seen.begin(), seen.end()};
}

std::string qbar_string(const std::vector<bool>& q) {
  std::string s;
  for (bool b : q) s += b ? '1' : '0';
  return s;
}

bool proposition_covered(const ResidueCase& rc) {
  return rc == ResidueCase{1, 1, 1} || rc == ResidueCase{2, 4, 1};
}

std::vector<ResidueCase> bigtable_rows() {
  std::vector<ResidueCase> rows;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 1; c <= 2; ++c) {
        ResidueCase rc{a, b, c};
        if (!proposition_covered(rc)) rows.push_back(rc);
      }
    }
  }
  return rows;
}

const std::vector<std::string>& bigtable_reference() {
  static const std::vector<std::string> ref{
      "..x...x.x.", "...x...xxx", "..xx..xxx.", ".xxx.xxxxx", ".xxx.xxxxx", ".xxx.xxxx.",
      ".xxx.xxxxx", "x...xxxxxx", "x...x.xxx.", ".x..xxxxxx", "..xxxxxxxx", "x...x...xx",
      "x...xxxxxx", ".x.x.x.xx.", ".xxx.xxxxx", "..xxxxxxx.", "xxxxx.xxxx", "xx.xxx.xxx",
      ".x...x...x", ".xxxxxxxxx", "xx.xxxxxxx", "xx.xxxxxxx", "xxxxxxxxxx", "x.xxx.xxxx",
      "xxxxxx...x", "xx.xxx.xxx", "xxxxxxxxxx", "x.xxxxxxxx", "xxxxxxxxxx", "xxxxxxxxxx",
  };
  return ref;
}

BigTable reproduce_bigtable() {
  BigTable table;
  table.rows = bigtable_rows();
  const auto& cols = bigtable_columns();
  std::vector<std::vector<std::vector<bool>>> qbars;
  for (const auto& c : cols) qbars.push_back(column_qbars(c));
  for (const auto& rc : table.rows) {
    std::string marks;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      bool all = !qbars[j].empty();
      for (const auto& q : qbars[j]) {
        if (!type_system_solvable(rc, cols[j].expansion, cols[j].mclass, q)) {
          all = false;
          break;
        }
      }
      marks += all ? 'x' : '.';
    }
    table.marks.push_back(marks);
  }
  return table;
}

TableDiff diff_bigtable(const BigTable& table) {
  TableDiff diff;
  const auto& ref = bigtable_reference();
  const auto rows = bigtable_rows();
  const auto& cols = bigtable_columns();
  if (table.rows != rows) {
    diff.mismatches.push_back("row labels differ from the reference layout");
    return diff;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      ++diff.cells;
      if (table.marks[i][j] == ref[i][j]) {
        ++diff.matching;
      } else {
        diff.mismatches.push_back(rows[i].to_string() + " " + cols[j].label + ": computed '" +
                                  table.marks[i][j] + "', reference '" + ref[i][j] + "'");
      }
    }
  }
  return diff;
}

std::vector<std::string> bigtable_coverage_gaps(const BigTable& table) {
  std::vector<std::string> gaps;
  const auto& cols = bigtable_columns();
  const char* names[] = {"generic", "m=2^e", "m=2^e+1"};
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    for (int block = 0; block < 3; ++block) {
      bool hit = false;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].block == block && table.marks[i][j] == 'x') hit = true;
      }
      if (!hit && !proposition_covered(table.rows[i])) {
        gaps.push_back(table.rows[i].to_string() + " has no column in block " + names[block]);
      }
    }
  }
  return gaps;
}

bool concrete_cell_check(const ResidueCase& rc, const BigTableColumn& column) {
  const FamilyParams p{rc.a, rc.b, rc.c, 1};
  std::set<std::vector<bool>> pending;
  for (const auto& q : column_qbars(column)) pending.insert(q);
  for (int m = 4; m <= 1100 && !pending.empty(); ++m) {
    auto alpha = column.alpha(m);
    if (!alpha) continue;
    auto q = qbar(column.expansion, m, *alpha);
    if (!pending.count(q)) continue;
    const int n = m + 3;
    if (n <= family_span(Family::three_term, p)) continue;
    if (n > LengthVector::kMaxSides) return false;
    auto code = family_code(Family::three_term, p, n);
    CohomologyPresentation pres(code);
    auto phi = duality_functional(pres);
    auto spec = column.product(m, 1, p.a + 1, p.a + p.b + 1);
    if (!find_psi(pres, phi, spec)) return false;
    pending.erase(q);
  }
  return pending.empty();
}

std::string check_exceptional_row(const ResidueCase& rc, int n) {
  const FamilyParams p{rc.a, rc.b, rc.c, 1};
  const bool first = rc == ResidueCase{1, 1, 1};
  if (!first && rc != ResidueCase{2, 4, 1}) return "not an exceptional row";
  auto code = family_code(Family::three_term, p, n);
  CohomologyPresentation pres(code);
  const int m = pres.m();
  if (first && m <= 4) return "needs m > 4";
  auto phi = duality_functional(pres);
  for (std::size_t c = 0; c < phi.columns.size(); ++c) {
    auto w = pattern_of(Family::three_term, p, phi.columns[c]);
    bool expected = w.size() == 3 ||
                    (!first && (w == TypePattern::of({2, 2}) || w == TypePattern::of({2, 3})));
    if (phi.phi.get(c) != expected) return "phi differs at " + phi.columns[c].to_string();
  }
  auto space = psi_space(pres);
  Gf2Vector psi(space.columns.size());
  for (std::size_t c = 0; c < space.columns.size(); ++c) {
    if (space.columns[c].size() == 2) psi.set(c);
  }
  if (!space.contains(psi)) return "psi does not kill the relations";
  const int eps = is_power_of_two(static_cast<std::uint64_t>(m - 2)) ? 1 : 2;
  const int w1 = 1, w2 = p.a + 1, w3 = p.a + p.b + 1;
  auto spec = first ? ProductSpec::make(m - 6 + eps, {{w1, m - eps}, {w2, 2}, {w3, 3}})
                    : ProductSpec::make(m - 5 + eps, {{w1, 2}, {w2, 2}, {w3, m - eps}});
  if (!pair(pres, phi, psi, spec)) return "pairing with " + spec.to_string() + " is 0";
  return "";
}

}  // namespace polytc
