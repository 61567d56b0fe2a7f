#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polytc/cohomology.hpp"

namespace polytc {

/// A multiset of type labels 1..4, stored as counts. The empty pattern is R^k.
struct TypePattern {
  std::array<int, 4> counts{};

  static TypePattern of(std::initializer_list<int> labels);
  /// "1,2,3", "2,2" or "0" for the empty pattern.
  static TypePattern parse(const std::string& text);
  int u(int label) const { return counts[label - 1]; }
  int size() const;
  std::string to_string() const;
  auto operator<=>(const TypePattern&) const = default;
};

/// Gene families whose indices split into consecutive type intervals.
enum class Family {
  two_term,    // gee {a+b, a}
  three_term,  // gee {a+b+c, a+b, a}
  two_pair,    // gees {a+b+c, a+b} and {a+b+c+d, a}
  type_one,    // gees {1+b+c, 1+b, 1} and {1+b+c+d, 1}; a is fixed to 1
};
std::string to_string(Family family);
const std::vector<Family>& all_families();

struct FamilyParams {
  int a = 1;
  int b = 1;
  int c = 1;
  int d = 1;
};

/// Throws std::invalid_argument if a parameter the family uses is < 1 (and,
/// for type_one, if a != 1).
void check_params(Family family, const FamilyParams& p);
std::vector<Subset> family_gees(Family family, const FamilyParams& p);
/// Largest element of any gee; codes need n above it.
int family_span(Family family, const FamilyParams& p);
GeneticCode family_code(Family family, const FamilyParams& p, int n);
/// Type label of a V index, or 0 when the index lies beyond every interval.
int type_of(Family family, const FamilyParams& p, int index);
TypePattern pattern_of(Family family, const FamilyParams& p, Subset s);

/// Values of φ on every monomial pattern of the family, reduced mod 2.
std::map<TypePattern, bool> phi_closed_form(Family family, const FamilyParams& p);

/// Compares the closed form with duality_functional on the concrete code.
/// Returns one line per mismatching degree-m monomial (empty when they agree).
std::vector<std::string> phi_mismatches(Family family, const FamilyParams& p, int n);

// ---- The type-counted systems for the family <{n, a+b+c, a+b, a}>. ----

/// Residues ā, b̄ in 1..4 (4 standing for 0 mod 4) and c̄ in 1..2.
struct ResidueCase {
  int a = 1;
  int b = 1;
  int c = 1;
  /// Large representatives used for every binomial: (ā+4, b̄+4, c̄+2).
  FamilyParams representative() const { return {a + 4, b + 4, c + 2, 1}; }
  std::string to_string() const;
  auto operator<=>(const ResidueCase&) const = default;
};

enum class MClass { generic, power, power_plus_one };  // m = 2^e; m-1 = 2^e
std::string to_string(MClass mclass);
MClass mclass_of(int m);

/// Which exponent pattern for w2: w1^α w2^2 w3 R^{2m-4-α} or w1^α w2 w3 R^{2m-3-α}.
enum class Expansion { w2_squared, w2_single };

/// The 14 monomial patterns (unknowns), and the 10 patterns of gees of size >= 2
/// (relations in degree m-1).
const std::vector<TypePattern>& unknown_patterns();
const std::vector<TypePattern>& relation_patterns();

struct TensorTerm {
  /// Index t of the coefficient q_t, or -1 for an unconditional term.
  int q;
  TypePattern left;
  TypePattern right;
};
/// The bidegree-(m, m-1) component of the product in the given m-class.
std::vector<TensorTerm> expansion_terms(Expansion expansion, MClass mclass);
/// q_t = C(2m-4-α, m-t), t = 0..4, or q'_t = C(2m-3-α, m-t), t = 0..3.
std::vector<bool> qbar(Expansion expansion, int m, int alpha);

/// Relation rows (one per relation pattern) over the 14 unknowns: entry
/// C(a-u1, u1') C(b-u2, u2') C(c-u3, u3') mod 2.
Gf2Matrix type_relations(const ResidueCase& rc);
/// ψ ↦ (φ⊗ψ)(product) on uniform ψ, with φ from the closed form.
Gf2Vector type_pairing_row(const ResidueCase& rc, Expansion expansion, MClass mclass,
                           const std::vector<bool>& q);

struct TypeSystem {
  Gf2Matrix matrix;
  Gf2Vector target;
};
/// Relation rows followed by the pairing row; target is 1 on the pairing row.
TypeSystem build_type_system(const ResidueCase& rc, Expansion expansion, MClass mclass,
                             const std::vector<bool>& q);
bool type_system_solvable(const ResidueCase& rc, Expansion expansion, MClass mclass,
                          const std::vector<bool>& q);

}  // namespace polytc
