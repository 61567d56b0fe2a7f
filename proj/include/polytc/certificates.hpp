#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polytc/cohomology.hpp"

namespace polytc {

/// A product of zero-divisors R̄^r ∏ V̄_i^{e_i}, where v̄ = v⊗1 + 1⊗v.
struct ProductSpec {
  int r = 0;
  /// V-index -> positive exponent.
  std::map<int, int> v;

  static ProductSpec make(int r, std::map<int, int> v);
  int degree() const;
  /// "V1^3 V2 R^2"
  std::string to_string() const;
  bool operator==(const ProductSpec&) const = default;
};

/// One bidegree component of the expanded product, as the set of
/// (left basis index, right basis index) pairs with coefficient 1.
struct TensorComponent {
  int left_degree = 0;
  int right_degree = 0;
  std::vector<std::pair<std::size_t, std::size_t>> terms;  // sorted
};

/// The component of the product in H^p ⊗ H^{deg-p}, with each side written
/// in the spanning monomials of the presentation (no relations applied).
TensorComponent expand(const CohomologyPresentation& pres, const ProductSpec& spec, int p);

/// The linear form ψ ↦ (φ⊗ψ)(product) on functionals over basis(m-1).
/// Throws std::invalid_argument unless the degree is 2m-1.
Gf2Vector pairing_row(const CohomologyPresentation& pres, const DualityFunctional& phi,
                      const ProductSpec& spec);
bool pair(const CohomologyPresentation& pres, const DualityFunctional& phi, const Gf2Vector& psi,
          const ProductSpec& spec);
/// Some ψ killing the degree-(m-1) relations with pairing 1, or nullopt.
std::optional<Gf2Vector> find_psi(const CohomologyPresentation& pres, const DualityFunctional& phi,
                                  const ProductSpec& spec);

/// Maximal runs of consecutive live indices (those i with {i} a subgee) such
/// that each adjacent transposition inside the run preserves the subgee set.
std::vector<std::vector<int>> symmetry_classes(const GeneticCode& code);

struct Certificate {
  GeneticCode code;
  LengthVector lengths;
  ProductSpec product;
  /// Supports of the degree-(m-1) monomials on which ψ is 1, in basis order.
  std::vector<Subset> psi;
  /// Which product family produced it ("first", "high", "general", ...).
  std::string family;

  int lower_bound() const { return 2 * code.m(); }
  int upper_bound() const { return 2 * code.n() - 5; }
  static constexpr const char* kClaim = "TC>=2n-6";
};

enum class AbstainReason { projective, torus, exhausted, budget };
std::string to_string(AbstainReason reason);

struct CertifyOptions {
  /// Maximum number of ψ solvability checks in the general search.
  std::uint64_t budget = 1'000'000;
  int max_support = 4;
  bool families = true;
  bool general_search = true;
};

struct CertifyResult {
  std::optional<Certificate> certificate;
  std::optional<AbstainReason> abstain;
  std::uint64_t evaluations = 0;
};

/// Searches the named product families first, then exponent vectors over at
/// most `max_support` distinct V indices (symmetry-reduced). Requires m >= 2
/// and a realizable code; throws std::invalid_argument otherwise.
CertifyResult certify(const GeneticCode& code, const CertifyOptions& options = {});

enum class BoundMethod { certificate, torus, projective, abstain };
std::string to_string(BoundMethod method);

struct BoundsReport {
  std::optional<int> lower;
  int upper = 0;
  BoundMethod method = BoundMethod::abstain;
  std::optional<Certificate> certificate;
  /// "TC >= 8 (upper 9)", "torus: TC = n-2 = 5", ...
  std::string summary() const;
};

BoundsReport bounds_report(const GeneticCode& code, const CertifyOptions& options = {});

struct VerifyResult {
  bool ok = false;
  std::string message;
};

/// Re-derives everything from scratch: the lengths realize the code, the
/// degree is 2m-1, ψ kills the relations and the pairing is 1.
VerifyResult verify_certificate(const Certificate& cert);

}  // namespace polytc
