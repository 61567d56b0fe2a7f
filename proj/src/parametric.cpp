#include "polytc/parametric.hpp"

#include <sstream>
#include <stdexcept>

#include "polytc/parity.hpp"

namespace polytc {

TypePattern TypePattern::of(std::initializer_list<int> labels) {
  TypePattern p;
  for (int l : labels) {
    if (l < 1 || l > 4) throw std::invalid_argument("type labels are 1..4");
    ++p.counts[l - 1];
  }
  return p;
}

TypePattern TypePattern::parse(const std::string& text) {
  TypePattern p;
  if (text == "0" || text.empty()) return p;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int l = std::stoi(tok);
    if (l < 1 || l > 4) throw std::invalid_argument("type labels are 1..4: " + text);
    ++p.counts[l - 1];
  }
  return p;
}

int TypePattern::size() const { return counts[0] + counts[1] + counts[2] + counts[3]; }

std::string TypePattern::to_string() const {
  std::string s;
  for (int l = 1; l <= 4; ++l) {
    for (int k = 0; k < counts[l - 1]; ++k) {
      if (!s.empty()) s += ',';
      s += std::to_string(l);
    }
  }
  return s.empty() ? "0" : s;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::two_term: return "two-term";
    case Family::three_term: return "three-term";
    case Family::two_pair: return "two-pair";
    case Family::type_one: return "type-one";
  }
  return "unknown";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> f{Family::two_term, Family::three_term, Family::two_pair,
                                     Family::type_one};
  return f;
}

namespace {

// Interval ends of the types: type t covers (ends[t-1], ends[t]].
std::vector<int> interval_ends(Family family, const FamilyParams& p) {
  switch (family) {
    case Family::two_term: return {0, p.a, p.a + p.b};
    case Family::three_term: return {0, p.a, p.a + p.b, p.a + p.b + p.c};
    case Family::two_pair:
    case Family::type_one: return {0, p.a, p.a + p.b, p.a + p.b + p.c, p.a + p.b + p.c + p.d};
  }
  return {0};
}

TypePattern pat(std::initializer_list<int> labels) { return TypePattern::of(labels); }

}  // namespace

void check_params(Family family, const FamilyParams& p) {
  auto need = [](int v, const char* name) {
    if (v < 1) throw std::invalid_argument(std::string("parameter ") + name + " must be >= 1");
  };
  need(p.a, "a");
  need(p.b, "b");
  if (family != Family::two_term) need(p.c, "c");
  if (family == Family::two_pair || family == Family::type_one) need(p.d, "d");
  if (family == Family::type_one && p.a != 1) throw std::invalid_argument("type-one family has a = 1");
}

std::vector<Subset> family_gees(Family family, const FamilyParams& p) {
  check_params(family, p);
  const int a = p.a, b = p.b, c = p.c, d = p.d;
  switch (family) {
    case Family::two_term: return {Subset::of({a, a + b})};
    case Family::three_term: return {Subset::of({a, a + b, a + b + c})};
    case Family::two_pair: return {Subset::of({a + b, a + b + c}), Subset::of({a, a + b + c + d})};
    case Family::type_one:
      return {Subset::of({1, 1 + b, 1 + b + c}), Subset::of({1, 1 + b + c + d})};
  }
  return {};
}

int family_span(Family family, const FamilyParams& p) { return interval_ends(family, p).back(); }

GeneticCode family_code(Family family, const FamilyParams& p, int n) {
  if (n <= family_span(family, p)) {
    throw std::invalid_argument("n must exceed " + std::to_string(family_span(family, p)));
  }
  return GeneticCode::from_gees(n, family_gees(family, p));
}

int type_of(Family family, const FamilyParams& p, int index) {
  auto ends = interval_ends(family, p);
  for (std::size_t t = 1; t < ends.size(); ++t) {
    if (index > ends[t - 1] && index <= ends[t]) return static_cast<int>(t);
  }
  return 0;
}

TypePattern pattern_of(Family family, const FamilyParams& p, Subset s) {
  TypePattern out;
  for (int i : s.elements()) {
    int t = type_of(family, p, i);
    if (t == 0) throw std::invalid_argument("index " + std::to_string(i) + " has no type");
    ++out.counts[t - 1];
  }
  return out;
}

std::map<TypePattern, bool> phi_closed_form(Family family, const FamilyParams& p) {
  check_params(family, p);
  const long long a = p.a, b = p.b, c = p.c, d = p.d;
  auto C2 = choose2_parity;
  std::map<TypePattern, bool> phi;
  switch (family) {
    case Family::two_term:
      phi[pat({1, 1})] = phi[pat({1, 2})] = true;
      phi[pat({2})] = odd(a - 1);
      phi[pat({1})] = odd(a + b);
      phi[pat({})] = odd((a - 1) * b) ^ C2(a - 1);
      break;
    case Family::three_term:
      for (auto w : {pat({1, 1, 1}), pat({1, 1, 2}), pat({1, 1, 3}), pat({1, 2, 2}), pat({1, 2, 3})}) {
        phi[w] = true;
      }
      phi[pat({2, 2})] = phi[pat({2, 3})] = odd(a - 1);
      phi[pat({1, 3})] = odd(a + b);
      phi[pat({1, 1})] = phi[pat({1, 2})] = odd(a + b + c - 1);
      phi[pat({3})] = odd((a - 1) * (b - 1)) ^ C2(a);
      phi[pat({2})] = odd((a - 1) * (b + c)) ^ C2(a);
      phi[pat({1})] = odd((a - 1) * (a + b + c - 1)) ^ C2(a - 1) ^ C2(b) ^ odd((b - 1) * (c - 1));
      phi[pat({})] = (C2(a) && odd(a + b + c - 1)) ^ (odd(a - 1) && (C2(b) ^ odd((b - 1) * (c - 1))));
      break;
    case Family::two_pair:
      for (auto w : {pat({1, 1}), pat({1, 2}), pat({1, 3}), pat({1, 4}), pat({2, 2}), pat({2, 3})}) {
        phi[w] = true;
      }
      phi[pat({4})] = odd(a + 1);
      phi[pat({3})] = odd(a + b + 1);
      phi[pat({2})] = odd(a + b + c);
      phi[pat({1})] = odd(a + b + c + d);
      phi[pat({})] = C2(a - 1) ^ C2(b) ^ odd(b * c) ^ odd((a + 1) * (b + c + d));
      break;
    case Family::type_one:
      phi[pat({1, 4})] = phi[pat({1, 2, 2})] = phi[pat({1, 2, 3})] = true;
      phi[pat({1, 3})] = odd(b + 1);
      phi[pat({1, 2})] = odd(b + c);
      phi[pat({1})] = C2(b) ^ odd((b + 1) * (c + 1)) ^ odd(d);
      for (auto w : {pat({}), pat({2}), pat({3}), pat({4}), pat({2, 2}), pat({2, 3})}) phi[w] = false;
      break;
  }
  return phi;
}

std::vector<std::string> phi_mismatches(Family family, const FamilyParams& p, int n) {
  auto closed = phi_closed_form(family, p);
  CohomologyPresentation pres(family_code(family, p, n));
  auto phi = duality_functional(pres);
  std::vector<std::string> out;
  for (std::size_t c = 0; c < phi.columns.size(); ++c) {
    Subset s = phi.columns[c];
    auto w = pattern_of(family, p, s);
    auto it = closed.find(w);
    if (it == closed.end()) {
      out.push_back(s.to_string() + ": no closed form for pattern " + w.to_string());
    } else if (it->second != phi.phi.get(c)) {
      out.push_back(s.to_string() + " (pattern " + w.to_string() + "): closed form " +
                    std::to_string(it->second) + ", computed " + std::to_string(phi.phi.get(c)));
    }
  }
  return out;
}

std::string ResidueCase::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string to_string(MClass mclass) {
  switch (mclass) {
    case MClass::generic: return "generic";
    case MClass::power: return "m=2^e";
    case MClass::power_plus_one: return "m=2^e+1";
  }
  return "unknown";
}

MClass mclass_of(int m) {
  if (m >= 1 && is_power_of_two(static_cast<std::uint64_t>(m))) return MClass::power;
  if (m >= 2 && is_power_of_two(static_cast<std::uint64_t>(m - 1))) return MClass::power_plus_one;
  return MClass::generic;
}

const std::vector<TypePattern>& unknown_patterns() {
  static const std::vector<TypePattern> s{
      pat({}),        pat({1}),       pat({2}),       pat({3}),       pat({1, 1}),
      pat({1, 2}),    pat({1, 3}),    pat({2, 2}),    pat({2, 3}),    pat({1, 1, 1}),
      pat({1, 1, 2}), pat({1, 1, 3}), pat({1, 2, 2}), pat({1, 2, 3})};
  return s;
}

const std::vector<TypePattern>& relation_patterns() {
  static const std::vector<TypePattern> s{pat({1, 1}),    pat({1, 2}),    pat({1, 3}),
                                          pat({2, 2}),    pat({2, 3}),    pat({1, 1, 1}),
                                          pat({1, 1, 2}), pat({1, 1, 3}), pat({1, 2, 2}),
                                          pat({1, 2, 3})};
  return s;
}

std::vector<TensorTerm> expansion_terms(Expansion expansion, MClass mclass) {
  const auto y0 = pat({}), y1 = pat({1}), y2 = pat({2}), y3 = pat({3});
  const auto y12 = pat({1, 2}), y13 = pat({1, 3}), y23 = pat({2, 3}), y123 = pat({1, 2, 3});
  std::vector<TensorTerm> t;
  if (expansion == Expansion::w2_squared) {
    t = {{0, y0, y123},  {0, y1, y123},  {1, y123, y0}, {1, y123, y1}, {1, y3, y12},
         {1, y13, y12},  {2, y2, y13},   {2, y12, y3},  {3, y23, y1},  {3, y123, y1},
         {3, y13, y2},   {3, y13, y12},  {4, y1, y23},  {4, y1, y123}};
    if (mclass == MClass::power) t.push_back({-1, y1, y123});
    if (mclass == MClass::power_plus_one) {
      t.push_back({-1, y123, y1});
      t.push_back({-1, y13, y12});
    }
  } else {
    t = {{0, y0, y123},  {0, y1, y123},  {1, y123, y0}, {1, y123, y1}, {1, y3, y12},
         {1, y13, y12},  {1, y2, y13},   {1, y12, y13}, {2, y23, y1},  {2, y123, y1},
         {2, y13, y2},   {2, y13, y12},  {2, y12, y3},  {2, y12, y13}, {3, y1, y23},
         {3, y1, y123}};
    if (mclass == MClass::power) t.push_back({-1, y1, y123});
    if (mclass == MClass::power_plus_one) {
      throw std::invalid_argument("the single-w2 expansion is not used when m-1 is a 2-power");
    }
  }
  return t;
}

std::vector<bool> qbar(Expansion expansion, int m, int alpha) {
  const int top = expansion == Expansion::w2_squared ? 2 * m - 4 - alpha : 2 * m - 3 - alpha;
  const int count = expansion == Expansion::w2_squared ? 5 : 4;
  std::vector<bool> q(count);
  for (int t = 0; t < count; ++t) q[t] = binomial_parity(top, m - t);
  return q;
}

namespace {

std::size_t unknown_index(const TypePattern& w) {
  const auto& s = unknown_patterns();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == w) return i;
  }
  throw std::invalid_argument("pattern " + w.to_string() + " is not a monomial pattern");
}

}  // namespace

Gf2Matrix type_relations(const ResidueCase& rc) {
  const auto rep = rc.representative();
  const auto& rows = relation_patterns();
  const auto& cols = unknown_patterns();
  Gf2Matrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& u = rows[r];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& v = cols[c];
      bool coef = binomial_parity(rep.a - u.u(1), v.u(1)) && binomial_parity(rep.b - u.u(2), v.u(2)) &&
                  binomial_parity(rep.c - u.u(3), v.u(3));
      if (coef) m.set(r, c);
    }
  }
  return m;
}

Gf2Vector type_pairing_row(const ResidueCase& rc, Expansion expansion, MClass mclass,
                           const std::vector<bool>& q) {
  auto phi = phi_closed_form(Family::three_term, rc.representative());
  Gf2Vector row(unknown_patterns().size());
  for (const auto& term : expansion_terms(expansion, mclass)) {
    if (term.q >= 0 && !q.at(term.q)) continue;
    if (phi.at(term.left)) row.flip(unknown_index(term.right));
  }
  return row;
}

TypeSystem build_type_system(const ResidueCase& rc, Expansion expansion, MClass mclass,
                             const std::vector<bool>& q) {
  TypeSystem sys{type_relations(rc), {}};
  sys.matrix.append_row(type_pairing_row(rc, expansion, mclass, q));
  sys.target = Gf2Vector::unit(sys.matrix.rows(), sys.matrix.rows() - 1);
  return sys;
}

bool type_system_solvable(const ResidueCase& rc, Expansion expansion, MClass mclass,
                          const std::vector<bool>& q) {
  auto sys = build_type_system(rc, expansion, mclass, q);
  return solve(sys.matrix, sys.target).has_value();
}

}  // namespace polytc
