#include "polytc/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "polytc/feasibility.hpp"

namespace polytc {

// ---------------------------------------------------------------------------
// LengthVector

LengthVector::LengthVector(std::vector<mpq_class> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.size() < 3 || lengths_.size() > static_cast<std::size_t>(kMaxSides)) {
    throw std::invalid_argument("length vector needs between 3 and " +
                                std::to_string(kMaxSides) + " entries");
  }
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    lengths_[i].canonicalize();
    if (lengths_[i] <= 0) throw std::invalid_argument("lengths must be positive");
    if (i > 0 && lengths_[i] < lengths_[i - 1]) {
      throw std::invalid_argument("lengths must be nondecreasing");
    }
  }
}

LengthVector LengthVector::from_integers(const std::vector<long>& lengths) {
  std::vector<mpq_class> q;
  q.reserve(lengths.size());
  for (long v : lengths) q.emplace_back(v);
  return LengthVector(std::move(q));
}

LengthVector LengthVector::parse(const std::string& text) {
  std::vector<mpq_class> q;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char c) { return std::isspace(c) || c == '[' || c == ']' || c == '(' || c == ')'; }),
               item.end());
    if (item.empty()) continue;
    mpq_class v;
    if (v.set_str(item, 10) != 0) throw std::invalid_argument("bad length: " + item);
    v.canonicalize();
    q.push_back(v);
  }
  return LengthVector(std::move(q));
}

mpq_class LengthVector::total() const {
  mpq_class t = 0;
  for (const auto& l : lengths_) t += l;
  return t;
}

mpq_class LengthVector::sum(Subset s) const {
  mpq_class t = 0;
  for (int i : s.elements()) {
    if (i > n()) throw std::invalid_argument("subset exceeds [n]");
    t += lengths_[i - 1];
  }
  return t;
}

LengthVector LengthVector::scaled(const mpq_class& factor) const {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<mpq_class> q = lengths_;
  for (auto& v : q) v *= factor;
  return LengthVector(std::move(q));
}

std::vector<mpz_class> LengthVector::as_integers() const {
  mpz_class denom = 1;
  for (const auto& l : lengths_) denom = lcm(denom, mpz_class(l.get_den()));
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& l : lengths_) {
    mpz_class v = mpz_class(l.get_num()) * (denom / l.get_den());
    g = gcd(g, v);
    out.push_back(v);
  }
  for (auto& v : out) v /= g;
  return out;
}

std::string LengthVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) s += ',';
    s += lengths_[i].get_str();
  }
  return s;
}

namespace {

/// 2*sum(S) - total for every S ⊆ [n], scaled to integers; visits masks in
/// Gray-code order and calls visit(mask, sign) with sign = sgn(2 sum - total).
template <typename Visit>
void for_each_subset_sign(const LengthVector& lengths, Visit&& visit) {
  const int n = lengths.n();
  mpz_class denom = 1;
  for (const auto& l : lengths.lengths()) denom = lcm(denom, mpz_class(l.get_den()));
  std::vector<mpz_class> ints;
  mpz_class total = 0;
  for (const auto& l : lengths.lengths()) {
    ints.push_back(mpz_class(l.get_num()) * (denom / l.get_den()));
    total += ints.back();
  }
  const bool fits = total.fits_slong_p() &&
                    total < mpz_class(std::numeric_limits<long>::max() / 4);
  const std::uint64_t count = std::uint64_t{1} << n;
  if (fits) {
    std::vector<long> v;
    for (const auto& z : ints) v.push_back(z.get_si());
    long tot = total.get_si();
    long twice = 0;
    std::uint64_t gray = 0;
    visit(gray, twice - tot);
    for (std::uint64_t k = 1; k < count; ++k) {
      int bit = std::countr_zero(k);
      gray ^= std::uint64_t{1} << bit;
      twice += (gray >> bit & 1u) ? 2 * v[bit] : -2 * v[bit];
      visit(gray, twice - tot);
    }
  } else {
    mpz_class twice = 0;
    std::uint64_t gray = 0;
    visit(gray, sgn(twice - total));
    for (std::uint64_t k = 1; k < count; ++k) {
      int bit = std::countr_zero(k);
      gray ^= std::uint64_t{1} << bit;
      if (gray >> bit & 1u) twice += 2 * ints[bit];
      else twice -= 2 * ints[bit];
      visit(gray, sgn(twice - total));
    }
  }
}

}  // namespace

std::optional<Subset> half_sum_subset(const LengthVector& lengths) {
  std::optional<std::uint64_t> best;
  for_each_subset_sign(lengths, [&](std::uint64_t mask, auto diff) {
    if (diff == 0 && (!best || mask < *best)) best = mask;
  });
  if (!best) return std::nullopt;
  return Subset(*best);
}

bool is_generic(const LengthVector& lengths) { return !half_sum_subset(lengths).has_value(); }

bool is_nonempty(const LengthVector& lengths) {
  return 2 * lengths[lengths.n()] < lengths.total();
}

bool is_short(Subset s, const LengthVector& lengths) {
  if (auto bad = half_sum_subset(lengths)) {
    throw std::invalid_argument("non-generic lengths: subset " + bad->to_string() +
                                " sums to half the total");
  }
  return 2 * lengths.sum(s) < lengths.total();
}

// ---------------------------------------------------------------------------
// GeneticCode

namespace {

std::vector<Subset> down_closure(const std::vector<Subset>& tops) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<Subset> stack;
  for (Subset t : tops) {
    if (seen.insert(t.mask()).second) stack.push_back(t);
  }
  std::vector<Subset> out;
  while (!stack.empty()) {
    Subset s = stack.back();
    stack.pop_back();
    out.push_back(s);
    for (Subset lower : lower_covers(s)) {
      if (seen.insert(lower.mask()).second) stack.push_back(lower);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

void check_code_shape(int n, const std::vector<Subset>& genes) {
  if (n < GeneticCode::kMinN || n > Subset::kMaxElement) {
    throw std::invalid_argument("genetic codes need 4 <= n <= 64, got n = " + std::to_string(n));
  }
  for (Subset g : genes) {
    if (!g.contains(n) || g.max_element() > n) {
      throw std::invalid_argument("gene " + g.to_string() + " must contain n and lie in [n]");
    }
  }
}

}  // namespace

GeneticCode::GeneticCode(int n, std::vector<Subset> genes) : n_(n), genes_(std::move(genes)) {
  check_code_shape(n_, genes_);
  std::sort(genes_.begin(), genes_.end(), desc_lex_less);
  for (std::size_t i = 0; i < genes_.size(); ++i) {
    for (std::size_t j = 0; j < genes_.size(); ++j) {
      if (i != j && dominated(genes_[i], genes_[j])) {
        throw std::invalid_argument("genes are not an antichain: " + genes_[i].to_string() +
                                    " <= " + genes_[j].to_string());
      }
    }
  }
  subgees_ = down_closure(gees());
}

GeneticCode GeneticCode::from_gees(int n, const std::vector<Subset>& gees) {
  std::vector<Subset> genes;
  for (Subset g : gees) {
    if (g.max_element() >= n) throw std::invalid_argument("gee must lie in [n-1]");
    genes.push_back(g.with(n));
  }
  return GeneticCode(n, std::move(genes));
}

std::vector<Subset> GeneticCode::gees() const {
  std::vector<Subset> out;
  for (Subset g : genes_) out.push_back(g.without(n_));
  return out;
}

bool GeneticCode::is_subgee(Subset s) const {
  return std::binary_search(subgees_.begin(), subgees_.end(), s, lex_less);
}

std::string GeneticCode::to_string() const {
  if (n_ <= 9) {
    std::string s = "<";
    for (std::size_t i = 0; i < genes_.size(); ++i) {
      if (i) s += ',';
      s += genes_[i].digits();
    }
    return s + ">";
  }
  std::string s = "[";
  for (std::size_t i = 0; i < genes_.size(); ++i) {
    if (i) s += ',';
    s += '[';
    auto e = genes_[i].elements_desc();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(e[k]);
    }
    s += ']';
  }
  return s + "]";
}

std::string GeneticCode::canonical_name() const {
  if (genes_.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < genes_.size(); ++i) {
    if (i) s += (n_ <= 9 ? "," : "_");
    if (n_ <= 9) {
      s += genes_[i].digits();
    } else {
      auto e = genes_[i].elements_desc();
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) s += '.';
        s += std::to_string(e[k]);
      }
    }
  }
  return s;
}

bool GeneticCode::operator<(const GeneticCode& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return std::lexicographical_compare(genes_.begin(), genes_.end(), other.genes_.begin(),
                                      other.genes_.end(), desc_lex_less);
}

GeneticCode GeneticCode::parse(const std::string& text, std::optional<int> n) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  std::vector<std::vector<int>> genes;
  if (!t.empty() && t.front() == '[') {
    // [[7,5,2,1],[7,6,2]]
    std::vector<int> cur;
    std::string num;
    int depth = 0;
    for (char c : t) {
      if (c == '[') {
        ++depth;
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        num += c;
      } else if (c == ',' || c == ']') {
        if (!num.empty()) {
          cur.push_back(std::stoi(num));
          num.clear();
        }
        if (c == ']') {
          if (depth == 2) genes.push_back(cur);
          --depth;
        }
      } else {
        throw std::invalid_argument("bad code text: " + text);
      }
    }
  } else {
    if (!t.empty() && t.front() == '<') t.erase(t.begin());
    if (!t.empty() && t.back() == '>') t.pop_back();
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::vector<int> gene;
      for (char c : item) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
          throw std::invalid_argument("bad gene '" + item + "' in code " + text);
        }
        gene.push_back(c - '0');
      }
      genes.push_back(gene);
    }
  }
  int inferred = 0;
  for (const auto& g : genes) {
    for (int i : g) inferred = std::max(inferred, i);
  }
  const int size = n.value_or(inferred);
  if (size == 0) throw std::invalid_argument("empty code needs an explicit n");
  std::vector<Subset> subsets;
  for (const auto& g : genes) subsets.push_back(Subset::of(g));
  return GeneticCode(size, std::move(subsets));
}

// ---------------------------------------------------------------------------
// ShortnessOracle

ShortnessOracle ShortnessOracle::from_lengths(const LengthVector& lengths) {
  if (auto bad = half_sum_subset(lengths)) {
    throw std::invalid_argument("non-generic lengths: subset " + bad->to_string() +
                                " sums to half the total");
  }
  ShortnessOracle o;
  o.n_ = lengths.n();
  o.short_.assign(std::size_t{1} << o.n_, false);
  for_each_subset_sign(lengths, [&](std::uint64_t mask, auto diff) { o.short_[mask] = diff < 0; });
  return o;
}

ShortnessOracle ShortnessOracle::from_code(const GeneticCode& code) {
  const int n = code.n();
  if (n > 30) throw std::invalid_argument("shortness table limited to n <= 30");
  ShortnessOracle o;
  o.n_ = n;
  const std::uint64_t count = std::uint64_t{1} << n;
  o.short_.assign(count, false);
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (Subset s : code.subgees()) o.short_[s.mask() | top] = true;
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    o.short_[mask] = !o.short_[(count - 1) ^ mask];
  }
  return o;
}

bool ShortnessOracle::is_short(Subset s) const {
  if (s.max_element() > n_) throw std::invalid_argument("subset exceeds [n]");
  return short_[s.mask()];
}

GeneticCode genetic_code(const LengthVector& lengths) {
  const int n = lengths.n();
  if (n < GeneticCode::kMinN) throw std::invalid_argument("genetic codes need n >= 4");
  if (auto bad = half_sum_subset(lengths)) {
    throw std::invalid_argument("non-generic lengths: subset " + bad->to_string() +
                                " sums to half the total");
  }
  if (!is_nonempty(lengths)) {
    throw std::invalid_argument("empty polygon space: l_n >= l_1 + ... + l_{n-1}");
  }
  auto oracle = ShortnessOracle::from_lengths(lengths);
  std::vector<Subset> genes;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    Subset s(mask);
    if (!oracle.is_short(s.with(n))) continue;
    bool maximal = true;
    for (Subset up : upper_covers(s, n - 1)) {
      if (oracle.is_short(up.with(n))) {
        maximal = false;
        break;
      }
    }
    if (maximal) genes.push_back(s.with(n));
  }
  return GeneticCode(n, std::move(genes));
}

// ---------------------------------------------------------------------------
// Validation

bool gees_compatible(int n, Subset g, Subset h) {
  const Subset rest = Subset::full(n - 1);
  return !dominated(Subset(rest.mask() & ~h.mask()), g.with(n)) &&
         !dominated(Subset(rest.mask() & ~g.mask()), h.with(n));
}

CandidateVerdict validate_candidate(int n, std::span<const Subset> genes) {
  if (n < GeneticCode::kMinN || n > Subset::kMaxElement) {
    return {CandidateStatus::malformed, std::nullopt, "n out of range"};
  }
  for (Subset g : genes) {
    if (!g.contains(n) || g.max_element() > n) {
      return {CandidateStatus::malformed, std::nullopt,
              "gene " + g.to_string() + " must contain n and lie in [n]"};
    }
  }
  for (std::size_t i = 0; i < genes.size(); ++i) {
    for (std::size_t j = 0; j < genes.size(); ++j) {
      if (i != j && dominated(genes[i], genes[j])) {
        return {CandidateStatus::not_antichain, std::nullopt,
                "genes " + genes[i].to_string() + " <= " + genes[j].to_string()};
      }
    }
  }
  const Subset rest = Subset::full(n - 1);
  std::optional<Subset> witness;
  for (Subset g : genes) {
    for (Subset h : genes) {
      Subset x(rest.mask() & ~h.without(n).mask());
      if (!dominated(x, g)) continue;
      if (!witness || x.size() < witness->size() ||
          (x.size() == witness->size() && x.mask() < witness->mask())) {
        witness = x;
      }
    }
  }
  if (witness) {
    return {CandidateStatus::conflict, witness,
            witness->to_string() + " would be both long and short"};
  }
  return {CandidateStatus::ok, std::nullopt, "ok"};
}

CandidateVerdict validate_candidate(const GeneticCode& code) {
  return validate_candidate(code.n(), code.genes());
}

// ---------------------------------------------------------------------------
// Realizability

std::optional<LengthVector> realize(const GeneticCode& code) {
  const int n = code.n();
  if (code.genes().empty()) return std::nullopt;
  if (validate_candidate(code).status != CandidateStatus::ok) return std::nullopt;
  if (n > LengthVector::kMaxSides) throw std::invalid_argument("realize: n too large");

  const auto& subgees = code.subgees();
  std::unordered_set<std::uint64_t> members;
  for (Subset s : subgees) members.insert(s.mask());

  // Minimal long sets containing n, as X ∪ {n} with X ⊆ [n-1] outside the down-set.
  std::unordered_set<std::uint64_t> minimal_long;
  for (Subset s : subgees) {
    for (Subset up : upper_covers(s, n - 1)) {
      if (members.count(up.mask())) continue;
      bool minimal = true;
      for (Subset low : lower_covers(up)) {
        if (!members.count(low.mask())) {
          minimal = false;
          break;
        }
      }
      if (minimal) minimal_long.insert(up.mask());
    }
  }
  std::vector<std::uint64_t> longs(minimal_long.begin(), minimal_long.end());
  std::sort(longs.begin(), longs.end());

  RationalMatrix a;
  std::vector<mpq_class> b;
  auto add_row = [&](std::vector<mpq_class> row, int rhs) {
    a.push_back(std::move(row));
    b.emplace_back(rhs);
  };
  {
    std::vector<mpq_class> row(n);
    row[0] = 1;
    add_row(row, 1);
  }
  for (int i = 1; i < n; ++i) {
    std::vector<mpq_class> row(n);
    row[i] = 1;
    row[i - 1] = -1;
    add_row(row, 0);
  }
  auto margin_row = [&](Subset s, int sign) {
    std::vector<mpq_class> row(n);
    for (int i = 1; i <= n; ++i) row[i - 1] = s.contains(i) ? sign : -sign;
    add_row(row, 1);
  };
  for (Subset g : code.genes()) margin_row(g, -1);
  for (std::uint64_t mask : longs) margin_row(Subset(mask).with(n), +1);

  auto point = feasible_point(a, b);
  if (!point) return std::nullopt;
  LengthVector lengths(std::move(*point));
  auto ints = lengths.as_integers();
  std::vector<mpq_class> q;
  for (const auto& z : ints) q.emplace_back(z);
  LengthVector integral(std::move(q));
  if (!is_generic(integral) || !is_nonempty(integral) || !(genetic_code(integral) == code)) {
    return std::nullopt;
  }
  return integral;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<GeneticCode> enumerate_candidates(int n) {
  if (n < GeneticCode::kMinN || n > 12) {
    throw std::invalid_argument("candidate enumeration supports 4 <= n <= 12");
  }
  std::vector<Subset> vertices;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    if (gees_compatible(n, Subset(mask), Subset(mask))) vertices.emplace_back(mask);
  }
  std::sort(vertices.begin(), vertices.end(), desc_lex_less);

  std::vector<GeneticCode> out;
  std::vector<Subset> chosen;
  auto admissible = [&](Subset g) {
    for (Subset h : chosen) {
      if (dominated(g, h) || dominated(h, g) || !gees_compatible(n, g, h)) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    out.push_back(GeneticCode::from_gees(n, chosen));
    for (std::size_t j = start; j < vertices.size(); ++j) {
      if (!admissible(vertices[j])) continue;
      chosen.push_back(vertices[j]);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

EnumerationResult enumerate_codes(int n, const EnumerateOptions& options) {
  if (n < GeneticCode::kMinN || n > 9) {
    throw std::invalid_argument("enumerate_codes supports 4 <= n <= 9, got " + std::to_string(n));
  }
  std::vector<GeneticCode> candidates;
  for (auto& c : enumerate_candidates(n)) {
    if (!c.genes().empty()) candidates.push_back(std::move(c));
  }
  std::vector<char> realizable(candidates.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      realizable[i] = realize(candidates[i]).has_value();
    }
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  EnumerationResult result;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (realizable[i]) result.codes.push_back(candidates[i]);
    else result.unrealizable.push_back(candidates[i]);
  }
  return result;
}

GeneticCode projective_code(int n) { return GeneticCode(n, {Subset::of({n})}); }

GeneticCode torus_code(int n) {
  return GeneticCode(n, {Subset::range(1, n - 3).with(n)});
}

}  // namespace polytc
