#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "polytc/combinatorics.hpp"
#include "polytc/gf2.hpp"

namespace polytc {

/// Raised when an invariant that must hold for every closed manifold fails
/// (e.g. the top-degree functional is not unique).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// R^{degree - |support|} V_support. The empty support is R^degree.
struct Monomial {
  int degree = 0;
  Subset support;
  int r_exponent() const { return degree - support.size(); }
  auto operator<=>(const Monomial&) const = default;
};

/// Mod-2 cohomology of the planar polygon space of a genetic code, presented
/// by generators R, V_1, ..., V_{n-1} in degree 1. Monomials divisible by the
/// same V's coincide, V_S vanishes unless S is a subgee, and for each subgee S
/// with |S| >= n-2-d the degree-d sum of R^{d-|T|} V_T over subgees T disjoint
/// from S vanishes.
class CohomologyPresentation {
 public:
  explicit CohomologyPresentation(GeneticCode code);

  const GeneticCode& code() const { return code_; }
  int n() const { return code_.n(); }
  int m() const { return code_.m(); }

  /// Supports of the spanning monomials of H^d (subgees of size <= d),
  /// ordered lexicographically by element tuple.
  const std::vector<Subset>& basis(int d) const;
  std::optional<std::size_t> index(int d, Subset support) const;

  /// Subgees S labelling the degree-d relations, in basis order.
  std::vector<Subset> relation_labels(int d) const;
  /// One row per relation label, one column per basis(d) entry; entry 1 iff
  /// the supports are disjoint.
  Gf2Matrix relations(int d) const;

  /// Normal form of R^{r_exp} * prod V_i^{e_i}; nullopt when the monomial is
  /// zero (support not a subgee, or degree above m).
  std::optional<Monomial> normal_form(const std::map<int, int>& v_exponents, int r_exp) const;

  int spanning_count(int d) const { return static_cast<int>(basis(d).size()); }
  int relation_rank(int d) const;
  /// dim H^d.
  int betti(int d) const;

 private:
  void check_degree(int d) const;

  GeneticCode code_;
  std::vector<std::vector<Subset>> basis_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index_;
};

/// The Poincaré-duality evaluation H^m -> Z/2 as a vector over basis(m).
struct DualityFunctional {
  std::vector<Subset> columns;
  Gf2Vector phi;
  bool value(Subset support) const;
};

/// All functionals H^{m-1} -> Z/2 killing the degree-(m-1) relations.
struct PsiSpace {
  std::vector<Subset> columns;
  std::vector<Gf2Vector> basis;
  Gf2Matrix relations;
  bool contains(const Gf2Vector& psi) const;
  /// Functional with value 1 exactly on the listed supports.
  Gf2Vector from_supports(const std::vector<Subset>& ones) const;
};

/// Unique nonzero null vector of the degree-m relations. Throws IntegrityError
/// if the null space is not one-dimensional.
DualityFunctional duality_functional(const CohomologyPresentation& pres);
/// Requires m >= 2.
PsiSpace psi_space(const CohomologyPresentation& pres);

struct BettiRow {
  int degree;
  int spanning;
  int rank;
  int betti;
};
std::vector<BettiRow> betti_table(const CohomologyPresentation& pres);

}  // namespace polytc
