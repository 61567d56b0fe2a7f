#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace polytc {

/// A subset of [n] = {1, ..., n}, stored as a bitmask (element i is bit i-1).
class Subset {
 public:
  static constexpr int kMaxElement = 64;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}

  static Subset of(std::initializer_list<int> elements);
  static Subset of(const std::vector<int>& elements);
  /// [lo, hi], empty when lo > hi.
  static Subset range(int lo, int hi);
  static Subset full(int n) { return range(1, n); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  /// Largest element, 0 for the empty set.
  constexpr int max_element() const { return 64 - std::countl_zero(mask_); }
  constexpr int min_element() const { return mask_ ? std::countr_zero(mask_) + 1 : 0; }

  Subset with(int i) const { return Subset(mask_ | bit(i)); }
  Subset without(int i) const { return Subset(mask_ & ~bit(i)); }
  /// Complement inside [n].
  Subset complement(int n) const { return Subset(full(n).mask_ & ~mask_); }
  constexpr bool disjoint(Subset other) const { return (mask_ & other.mask_) == 0; }
  constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }

  /// Elements in increasing order.
  std::vector<int> elements() const;
  /// Elements in decreasing order (the way genes are written).
  std::vector<int> elements_desc() const;

  constexpr auto operator<=>(const Subset&) const = default;

  /// "{1,3,4}"
  std::string to_string() const;
  /// Concatenated digits in decreasing order ("7521"); requires max element <= 9.
  std::string digits() const;

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }
  std::uint64_t mask_ = 0;
};

/// The dominance order: S <= T iff T contains t_1 < ... < t_k with s_i <= t_i,
/// where S = {s_1 < ... < s_k}. Decided by comparing suffix counts
/// |S ∩ [x, ∞)| <= |T ∩ [x, ∞)| for every x.
bool dominated(Subset s, Subset t);

/// Sets covered by s in the dominance order, restricted to subsets of [limit]:
/// drop element 1, or move some element i down to i-1 when i-1 is absent.
std::vector<Subset> lower_covers(Subset s);
/// Sets covering s: add 1 when absent, or move some i up to i+1 <= limit when absent.
std::vector<Subset> upper_covers(Subset s, int limit);

/// Lexicographic comparison of the increasing element tuples.
bool lex_less(Subset a, Subset b);
/// Lexicographic comparison of the decreasing element tuples.
bool desc_lex_less(Subset a, Subset b);

}  // namespace polytc
