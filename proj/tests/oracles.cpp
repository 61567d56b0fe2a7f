#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

namespace oracle {

bool leq(Subset s, Subset t) {
  auto a = s.elements_desc();
  auto b = t.elements_desc();
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool is_short(Subset s, const std::vector<long>& lengths) {
  long total = 0, part = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    total += lengths[i];
    if (s.contains(static_cast<int>(i) + 1)) part += lengths[i];
  }
  return 2 * part < total;
}

std::vector<Subset> genes(const std::vector<long>& lengths) {
  const int n = static_cast<int>(lengths.size());
  std::vector<Subset> shorts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s(mask);
    if (s.contains(n) && is_short(s, lengths)) shorts.push_back(s);
  }
  std::vector<Subset> out;
  for (Subset s : shorts) {
    bool maximal = std::none_of(shorts.begin(), shorts.end(),
                                [&](Subset t) { return t != s && leq(s, t); });
    if (maximal) out.push_back(s);
  }
  return out;
}

bool is_subgee(const GeneticCode& code, Subset s) {
  if (s.contains(code.n())) return false;
  for (Subset g : code.genes()) {
    if (leq(s, g.without(code.n()))) return true;
  }
  return false;
}

std::vector<Subset> subgees(const GeneticCode& code) {
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (code.n() - 1)); ++mask) {
    if (is_subgee(code, Subset(mask))) out.emplace_back(mask);
  }
  return out;
}

int span_rank(const std::vector<std::uint64_t>& rows) {
  std::unordered_set<std::uint64_t> span{0};
  for (std::uint64_t r : rows) {
    std::vector<std::uint64_t> next(span.begin(), span.end());
    for (std::uint64_t v : next) span.insert(v ^ r);
  }
  return std::countr_zero(span.size());
}

int quotient_dimension(const GeneticCode& code, int d) {
  const int n = code.n();
  auto sg = subgees(code);
  std::vector<Subset> cols;
  for (Subset t : sg) {
    if (t.size() <= d) cols.push_back(t);
  }
  std::vector<std::uint64_t> rows;
  for (Subset s : sg) {
    if (s.size() < n - 2 - d) continue;
    std::uint64_t row = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (s.disjoint(cols[c])) row |= std::uint64_t{1} << c;
    }
    rows.push_back(row);
  }
  return static_cast<int>(cols.size()) - span_rank(rows);
}

namespace {

struct Side {
  int r = 0;
  std::map<int, int> v;
};

// Index of the reduced monomial in the library basis, or nothing if it is zero.
std::optional<std::size_t> reduce(const polytc::CohomologyPresentation& pres, const Side& side) {
  int degree = side.r;
  std::uint64_t mask = 0;
  for (auto [i, e] : side.v) {
    if (e == 0) continue;
    degree += e;
    mask |= std::uint64_t{1} << (i - 1);
  }
  if (degree > pres.m()) return std::nullopt;
  Subset s(mask);
  if (!is_subgee(pres.code(), s)) return std::nullopt;
  const auto& basis = pres.basis(degree);
  auto it = std::find(basis.begin(), basis.end(), s);
  if (it == basis.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

std::set<std::pair<std::size_t, std::size_t>> product_component(
    const polytc::CohomologyPresentation& pres, const polytc::ProductSpec& spec, int p) {
  std::vector<int> factors(spec.r, 0);
  for (auto [i, e] : spec.v) factors.insert(factors.end(), e, i);
  const int k = static_cast<int>(factors.size());
  std::set<std::pair<std::size_t, std::size_t>> acc;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
    if (std::popcount(choice) != p) continue;
    Side left, right;
    for (int j = 0; j < k; ++j) {
      Side& side = (choice >> j) & 1u ? left : right;
      if (factors[j] == 0) ++side.r;
      else ++side.v[factors[j]];
    }
    auto l = reduce(pres, left);
    auto r = reduce(pres, right);
    if (!l || !r) continue;
    auto key = std::make_pair(*l, *r);
    if (!acc.erase(key)) acc.insert(key);
  }
  return acc;
}

}  // namespace oracle
