#include "polytc/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytc {

namespace {

void check_element(int i) {
  if (i < 1 || i > Subset::kMaxElement) {
    throw std::invalid_argument("subset element out of range: " + std::to_string(i));
  }
}

}  // namespace

Subset Subset::of(std::initializer_list<int> elements) {
  return of(std::vector<int>(elements));
}

Subset Subset::of(const std::vector<int>& elements) {
  std::uint64_t mask = 0;
  for (int i : elements) {
    check_element(i);
    mask |= bit(i);
  }
  return Subset(mask);
}

Subset Subset::range(int lo, int hi) {
  lo = std::max(lo, 1);
  if (hi < lo) return Subset();
  check_element(hi);
  std::uint64_t upto_hi = hi == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
  std::uint64_t below_lo = (std::uint64_t{1} << (lo - 1)) - 1;
  return Subset(upto_hi & ~below_lo);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::vector<int> Subset::elements_desc() const {
  auto out = elements();
  std::reverse(out.begin(), out.end());
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::string Subset::digits() const {
  if (max_element() > 9) throw std::invalid_argument("digit form needs elements <= 9");
  std::string s;
  for (int i : elements_desc()) s += static_cast<char>('0' + i);
  return s;
}

bool dominated(Subset s, Subset t) {
  int top = std::max(s.max_element(), t.max_element());
  int count_s = 0;
  int count_t = 0;
  for (int x = top; x >= 1; --x) {
    count_s += s.contains(x);
    count_t += t.contains(x);
    if (count_s > count_t) return false;
  }
  return true;
}

std::vector<Subset> lower_covers(Subset s) {
  std::vector<Subset> out;
  if (s.contains(1)) out.push_back(s.without(1));
  for (int i : s.elements()) {
    if (i > 1 && !s.contains(i - 1)) out.push_back(s.without(i).with(i - 1));
  }
  return out;
}

std::vector<Subset> upper_covers(Subset s, int limit) {
  std::vector<Subset> out;
  if (limit >= 1 && !s.contains(1)) out.push_back(s.with(1));
  for (int i : s.elements()) {
    if (i + 1 <= limit && !s.contains(i + 1)) out.push_back(s.without(i).with(i + 1));
  }
  return out;
}

bool lex_less(Subset a, Subset b) {
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool desc_lex_less(Subset a, Subset b) {
  auto ea = a.elements_desc();
  auto eb = b.elements_desc();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace polytc
