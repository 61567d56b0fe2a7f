#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polytc/subset.hpp"

namespace polytc {

/// Side lengths l_1 <= ... <= l_n of a planar polygon, as exact positive rationals.
class LengthVector {
 public:
  static constexpr int kMaxSides = 26;

  explicit LengthVector(std::vector<mpq_class> lengths);
  static LengthVector from_integers(const std::vector<long>& lengths);
  /// Parses "1,1,4/3,2".
  static LengthVector parse(const std::string& text);

  int n() const { return static_cast<int>(lengths_.size()); }
  const std::vector<mpq_class>& lengths() const { return lengths_; }
  const mpq_class& operator[](int i) const { return lengths_[i - 1]; }
  mpq_class total() const;
  mpq_class sum(Subset s) const;
  LengthVector scaled(const mpq_class& factor) const;
  /// Smallest positive integer multiple, for printing.
  std::vector<mpz_class> as_integers() const;
  std::string to_string() const;

  bool operator==(const LengthVector&) const = default;

 private:
  std::vector<mpq_class> lengths_;
};

/// First subset (in increasing mask order) summing to exactly half the total, if any.
std::optional<Subset> half_sum_subset(const LengthVector& lengths);
bool is_generic(const LengthVector& lengths);
/// l_n < l_1 + ... + l_{n-1}.
bool is_nonempty(const LengthVector& lengths);

/// Throws std::invalid_argument for non-generic lengths.
bool is_short(Subset s, const LengthVector& lengths);

/// An antichain of genes, each containing n. Genes are kept in canonical
/// order: ascending lexicographic order of their decreasing element lists.
class GeneticCode {
 public:
  static constexpr int kMinN = 4;

  /// Throws std::invalid_argument if a gene misses n, leaves [n], or the genes
  /// are not an antichain.
  GeneticCode(int n, std::vector<Subset> genes);
  /// Builds from gees (genes without n).
  static GeneticCode from_gees(int n, const std::vector<Subset>& gees);
  /// Accepts "<7521,762>", "7521,762", "765" (n inferred) or a JSON-ish
  /// "[[7,5,2,1],[7,6,2]]" (n inferred). `n` overrides inference, and is
  /// required for the empty code.
  static GeneticCode parse(const std::string& text, std::optional<int> n = std::nullopt);

  int n() const { return n_; }
  int m() const { return n_ - 3; }
  const std::vector<Subset>& genes() const { return genes_; }
  std::vector<Subset> gees() const;
  /// All S ⊆ [n-1] with S <= some gee, in lexicographic order of element tuples.
  const std::vector<Subset>& subgees() const { return subgees_; }
  bool is_subgee(Subset s) const;

  /// "<7521,762>" for n <= 9, otherwise the JSON gene list.
  std::string to_string() const;
  /// Text without angle brackets (file-name safe), "empty" for <>.
  std::string canonical_name() const;

  bool operator==(const GeneticCode& other) const {
    return n_ == other.n_ && genes_ == other.genes_;
  }
  /// Canonical list order: by n, then lexicographic on the gene lists.
  bool operator<(const GeneticCode& other) const;

 private:
  int n_;
  std::vector<Subset> genes_;
  std::vector<Subset> subgees_;
};

/// Short/long classification of every subset of [n].
class ShortnessOracle {
 public:
  static ShortnessOracle from_lengths(const LengthVector& lengths);
  static ShortnessOracle from_code(const GeneticCode& code);

  int n() const { return n_; }
  bool is_short(Subset s) const;
  bool is_long(Subset s) const { return !is_short(s); }

 private:
  int n_ = 0;
  std::vector<bool> short_;  // indexed by mask
};

/// Maximal short subsets containing n. Throws for non-generic or empty spaces.
GeneticCode genetic_code(const LengthVector& lengths);

enum class CandidateStatus { ok, conflict, not_antichain, malformed };

struct CandidateVerdict {
  CandidateStatus status;
  /// For conflicts: the smallest (by size, then mask) set [n-1] \ H, H a gee,
  /// lying below a gene. It is forced to be both short and long.
  std::optional<Subset> witness;
  std::string message;
};

CandidateVerdict validate_candidate(int n, std::span<const Subset> genes);
CandidateVerdict validate_candidate(const GeneticCode& code);

/// Whether the gees g and h can coexist: neither [n-1] \ h <= g ∪ {n} nor the
/// symmetric condition holds. With g == h this is the single-gee condition.
bool gees_compatible(int n, Subset g, Subset h);

/// Generic exact lengths realizing the code, or nullopt if the strict linear
/// system is infeasible (always nullopt for the empty code).
std::optional<LengthVector> realize(const GeneticCode& code);

struct EnumerateOptions {
  /// Worker threads used for the realizability filter.
  int jobs = 1;
};

struct EnumerationResult {
  std::vector<GeneticCode> codes;
  /// Candidates that validated but had no realizing lengths.
  std::vector<GeneticCode> unrealizable;
};

/// All realizable nonempty genetic codes for n-gons, in canonical order.
/// Supports 4 <= n <= 9.
EnumerationResult enumerate_codes(int n, const EnumerateOptions& options = {});

/// Valid candidates (pairwise-compatible antichains of gees), canonical order,
/// including the empty code.
std::vector<GeneticCode> enumerate_candidates(int n);

/// The code <{n}> whose space is RP^{n-3}.
GeneticCode projective_code(int n);
/// The code <{n, n-3, n-4, ..., 1}> whose space is the torus (S^1)^{n-3}.
GeneticCode torus_code(int n);

}  // namespace polytc
