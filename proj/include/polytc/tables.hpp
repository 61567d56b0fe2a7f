#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polytc/certificates.hpp"
#include "polytc/parametric.hpp"

namespace polytc {

// ---- Table of × marks for the family <{n, a+b+c, a+b, a}>. ----

struct BigTableColumn {
  std::string label;  // "thm1", "thm5(3)", ...
  int block;          // 0: m, m-1 not 2-powers; 1: m = 2^e; 2: m = 2^e+1
  MClass mclass;
  Expansion expansion;
  int variant;        // ε where the column has one, else 0

  /// Exponent of w1 at this m, or nullopt when the column does not apply.
  std::optional<int> alpha(int m) const;
  /// Exponent of R̄ that brings the degree to 2m-1.
  int r_exponent(int m, int alpha) const;
  ProductSpec product(int m, int w1, int w2, int w3) const;
};

const std::vector<BigTableColumn>& bigtable_columns();
/// Distinct q̄ vectors over 4 <= m <= m_max in the column's class, sorted.
std::vector<std::vector<bool>> column_qbars(const BigTableColumn& column, int m_max = 1100);
std::string qbar_string(const std::vector<bool>& q);

/// The 30 residue rows, in order, without (1,1,1) and (2,4,1).
std::vector<ResidueCase> bigtable_rows();
/// Rows left out because other products handle them.
bool proposition_covered(const ResidueCase& rc);
/// Reference × pattern, one string of 'x'/'.' per row, columns as in bigtable_columns().
const std::vector<std::string>& bigtable_reference();

struct BigTable {
  std::vector<ResidueCase> rows;
  std::vector<std::string> marks;
};
BigTable reproduce_bigtable();

struct TableDiff {
  int cells = 0;
  int matching = 0;
  std::vector<std::string> mismatches;
};
TableDiff diff_bigtable(const BigTable& table);
/// One line per (row, block) with no × in that block.
std::vector<std::string> bigtable_coverage_gaps(const BigTable& table);

/// Instantiates the smallest parameters of the residue class and, for each q̄
/// of the column, the smallest m producing it; checks that a ψ exists for
/// the column's product on the concrete code.
bool concrete_cell_check(const ResidueCase& rc, const BigTableColumn& column);

/// The stated products and ψ of the two exceptional rows on a concrete code:
/// (a,b,c) = (1,1,1) or (2,4,1) and the given n. Returns an empty string on
/// success, otherwise what failed.
std::string check_exceptional_row(const ResidueCase& rc, int n);

// ---- The table of explicit ψ for single sets of gees. ----

struct TtRow {
  std::vector<Subset> gees;
  std::vector<Subset> psi_ones;
  std::string label() const;  // "321, 42"
};
/// The 27 reference rows in order; the last one is <43, 52, 61>.
const std::vector<TtRow>& table_tt_reference();

struct TtCheck {
  int n = 0;
  bool realizable = false;
  bool psi_in_space = false;
  bool phi_facts = false;
  bool expression = false;  // the closed pairing expression equals 1
  bool engine = false;      // the concrete expansion pairs to 1
  std::string product;
  /// Listed supports that are not subgees (their monomials vanish).
  std::vector<Subset> ignored;
  bool ok() const { return realizable && psi_in_space && phi_facts && expression && engine; }
};

struct TtVerdict {
  TtRow row;
  std::vector<TtCheck> checks;  // realizable n only
  bool verified = false;
};
std::vector<TtVerdict> verify_table_tt(const std::vector<int>& ns = {7, 8, 9, 10});

}  // namespace polytc
