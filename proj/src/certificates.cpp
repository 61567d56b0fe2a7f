#include "polytc/certificates.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "polytc/parity.hpp"

namespace polytc {

ProductSpec ProductSpec::make(int r, std::map<int, int> v) {
  if (r < 0) throw std::invalid_argument("negative R exponent");
  ProductSpec p;
  p.r = r;
  for (auto [i, e] : v) {
    if (e < 0) throw std::invalid_argument("negative V exponent");
    if (i < 1) throw std::invalid_argument("V index must be positive");
    if (e > 0) p.v.emplace(i, e);
  }
  return p;
}

int ProductSpec::degree() const {
  int d = r;
  for (auto [i, e] : v) d += e;
  return d;
}

std::string ProductSpec::to_string() const {
  std::string s;
  auto term = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += name;
    if (e > 1) s += '^' + std::to_string(e);
  };
  for (auto [i, e] : v) term("V" + std::to_string(i), e);
  term("R", r);
  return s.empty() ? "1" : s;
}

namespace {

struct Factor {
  int index;
  int exponent;
};

class Expander {
 public:
  Expander(const CohomologyPresentation& pres, const ProductSpec& spec, int p)
      : pres_(pres), spec_(spec), p_(p), q_(spec.degree() - p) {
    for (auto [i, e] : spec.v) {
      if (i >= pres.n()) throw std::invalid_argument("V index outside [n-1]");
      factors_.push_back({i, e});
    }
  }

  TensorComponent run() {
    TensorComponent out{p_, q_, {}};
    if (p_ < 0 || q_ < 0 || p_ > pres_.m() || q_ > pres_.m()) return out;
    walk(0, Subset{}, Subset{}, 0);
    out.terms.assign(acc_.begin(), acc_.end());
    return out;
  }

 private:
  void walk(std::size_t k, Subset left, Subset right, int left_v) {
    if (k == factors_.size()) {
      const int kr = p_ - left_v;
      if (kr < 0 || kr > spec_.r || !lucas_binomial(spec_.r, kr)) return;
      auto li = pres_.index(p_, left);
      auto ri = pres_.index(q_, right);
      if (!li || !ri) return;
      auto key = std::make_pair(*li, *ri);
      if (!acc_.erase(key)) acc_.insert(key);
      return;
    }
    const auto [i, e] = factors_[k];
    for (int j = 0; j <= e && left_v + j <= p_; ++j) {
      if (!lucas_binomial(e, j)) continue;
      Subset l = j > 0 ? left.with(i) : left;
      Subset r = j < e ? right.with(i) : right;
      if (!pres_.code().is_subgee(l) || !pres_.code().is_subgee(r)) continue;
      walk(k + 1, l, r, left_v + j);
    }
  }

  const CohomologyPresentation& pres_;
  const ProductSpec& spec_;
  int p_;
  int q_;
  std::vector<Factor> factors_;
  std::set<std::pair<std::size_t, std::size_t>> acc_;
};

void require_certificate_degree(const CohomologyPresentation& pres, const ProductSpec& spec) {
  if (pres.m() < 2) throw std::invalid_argument("pairing needs m >= 2");
  if (spec.degree() != 2 * pres.m() - 1) {
    throw std::invalid_argument("product " + spec.to_string() + " has degree " +
                                std::to_string(spec.degree()) + ", expected " +
                                std::to_string(2 * pres.m() - 1));
  }
}

Subset swap_adjacent(Subset s, int i) {
  if (s.contains(i) == s.contains(i + 1)) return s;
  return Subset(s.mask() ^ (std::uint64_t{3} << (i - 1)));
}

bool is_torus(const GeneticCode& code) { return code == torus_code(code.n()); }
bool is_projective(const GeneticCode& code) { return code == projective_code(code.n()); }

// Membership test for the row space of the degree-(m-1) relations: a pairing
// row admits a ψ with value 1 iff it does not lie in that row space.
class RowSpace {
 public:
  explicit RowSpace(const Gf2Matrix& m) : ech_(row_reduce(m)) {}
  bool contains(Gf2Vector v) const {
    for (std::size_t i = 0; i < ech_.rank; ++i) {
      if (v.get(ech_.pivots[i])) v ^= ech_.reduced.row(i);
    }
    return v.is_zero();
  }

 private:
  RowEchelon ech_;
};

struct Candidate {
  std::string family;
  ProductSpec product;
};

int ceil_log2(int m) {
  int e = 0;
  while ((1 << e) < m) ++e;
  return e;
}

// Products taken from the closed-form arguments, instantiated on class
// representatives. Invalid instances (negative exponents, dead indices) are skipped.
std::vector<Candidate> family_products(const CohomologyPresentation& pres,
                                       const DualityFunctional& phi,
                                       const std::vector<std::vector<int>>& classes) {
  const int m = pres.m();
  const auto& code = pres.code();
  std::vector<Candidate> out;
  auto add = [&](std::string family, int r, std::vector<std::pair<int, int>> vs) {
    if (r < 0) return;
    std::map<int, int> v;
    for (auto [i, e] : vs) {
      if (i < 1 || i >= pres.n() || e < 0) return;
      if (e > 0 && !code.is_subgee(Subset::of({i}))) return;
      v[i] += e;
    }
    auto spec = ProductSpec::make(r, v);
    if (spec.degree() != 2 * m - 1) return;
    for (const auto& c : out) {
      if (c.product == spec) return;
    }
    out.push_back({std::move(family), std::move(spec)});
  };
  auto w = [&](std::size_t k) { return k <= classes.size() ? classes[k - 1].front() : 0; };

  add("first", m - 1, {{1, m}});

  const auto gees = code.gees();
  if (gees.size() >= 2) {
    for (Subset g : gees) {
      if (g.size() != 1) continue;
      const int b = g.min_element();
      for (std::size_t c = 0; c < phi.columns.size(); ++c) {
        Subset s = phi.columns[c];
        if (!phi.phi.get(c) || s.empty() || s.max_element() >= b) continue;
        auto el = s.elements();
        const int t = static_cast<int>(el.size());
        std::vector<std::pair<int, int>> vs{{el[0], m + 1 - t}};
        for (int k = 1; k < t; ++k) vs.push_back({el[k], 1});
        add("high", m - 1, vs);
        break;
      }
    }
  }

  const int e = ceil_log2(m);
  add("cohthm-a", (1 << e) - 1, {{1, 2 * m - 1 - (1 << e)}, {w(2), 1}});
  add("cohthm-b", m - 2, {{w(1), m - 1}, {w(2), 2}});
  add("cohthm-c", 0, {{w(1), m}, {w(2), m - 1}});

  add("N1", m - 3, {{1, m - 1}, {2, 2}, {3, 1}});
  add("N2", m - 4, {{1, m}, {2, 2}, {3, 1}});
  add("N1-types", m - 3, {{w(1), m - 1}, {w(2), 2}, {w(3), 1}});
  add("N2-types", m - 4, {{w(1), m}, {w(2), 2}, {w(3), 1}});

  auto w21 = [&](const std::string& name, int alpha) {
    add(name, 2 * m - 4 - alpha, {{w(1), alpha}, {w(2), 2}, {w(3), 1}});
  };
  auto w11 = [&](const std::string& name, int alpha) {
    add(name, 2 * m - 3 - alpha, {{w(1), alpha}, {w(2), 1}, {w(3), 1}});
  };
  for (int f = 1; (1 << f) < m; ++f) {
    const int mp = m - (1 << f);
    if (mp < 2 || mp > (1 << f) + 1) continue;
    w21("thm1", 2 * mp - 3);
    if (mp <= (1 << f) - 1) {
      w21("thm2", 2 * mp - 2);
      w21("thm3", 2 * mp - 1);
      w11("thm4", 2 * mp - 1);
    }
  }
  if (is_power_of_two(m)) {
    for (int eps = 3; eps >= 1; --eps) w21("thm5", m - eps);
    w11("thm6", m - 1);
  }
  if (m >= 2 && is_power_of_two(m - 1)) {
    w21("thm7", m);
    w21("thm7", m - 2);
  }
  const int eps = is_power_of_two(m - 2) ? 1 : 2;
  add("prop111", m - 6 + eps, {{w(1), m - eps}, {w(2), 2}, {w(3), 3}});
  add("prop241", m - 5 + eps, {{w(1), 2}, {w(2), 2}, {w(3), m - eps}});

  add("type1-extra", 2, {{w(1), 2}, {w(4), 3}});
  if (is_power_of_two(m)) add("type1-extra", m - 2, {{w(1), m}, {w(4), 1}});
  return out;
}

// Calls visit(spec) for symmetry-reduced exponent vectors over `k` distinct
// live indices, in lexicographic order of the index tuple and then of the
// exponent tuple (largest first). Stops when visit returns true.
template <typename Visit>
bool enumerate_general(const std::vector<std::vector<int>>& classes, int degree, int max_support,
                       Visit&& visit) {
  std::vector<int> live;
  std::vector<int> cls_of;
  std::vector<int> pos_in_cls;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t j = 0; j < classes[c].size(); ++j) {
      live.push_back(classes[c][j]);
      cls_of.push_back(static_cast<int>(c));
      pos_in_cls.push_back(static_cast<int>(j));
    }
  }
  for (int k = 1; k <= max_support && k <= static_cast<int>(live.size()); ++k) {
    // Index tuples (positions into `live`) where each class contributes a prefix.
    std::vector<int> chosen;
    std::vector<int> exps(k);
    bool stop = false;
    auto choose = [&](auto&& self, std::size_t start) -> void {
      if (stop) return;
      if (static_cast<int>(chosen.size()) == k) {
        auto fill = [&](auto&& fself, int slot, int remaining) -> void {
          if (stop) return;
          if (slot == k) {
            std::map<int, int> v;
            for (int s = 0; s < k; ++s) v[live[chosen[s]]] = exps[s];
            if (visit(ProductSpec::make(remaining, v))) stop = true;
            return;
          }
          int hi = remaining - (k - slot - 1);
          if (slot > 0 && cls_of[chosen[slot]] == cls_of[chosen[slot - 1]]) {
            hi = std::min(hi, exps[slot - 1]);
          }
          for (int e = hi; e >= 1; --e) {
            exps[slot] = e;
            fself(fself, slot + 1, remaining - e);
          }
        };
        fill(fill, 0, degree);
        return;
      }
      for (std::size_t i = start; i < live.size(); ++i) {
        bool prefix_ok = pos_in_cls[i] == 0 ||
                         (!chosen.empty() && chosen.back() == static_cast<int>(i) - 1 &&
                          cls_of[i - 1] == cls_of[i]);
        if (!prefix_ok) continue;
        chosen.push_back(static_cast<int>(i));
        self(self, i + 1);
        chosen.pop_back();
        if (stop) return;
      }
    };
    choose(choose, 0);
    if (stop) return true;
  }
  return false;
}

}  // namespace

TensorComponent expand(const CohomologyPresentation& pres, const ProductSpec& spec, int p) {
  return Expander(pres, spec, p).run();
}

Gf2Vector pairing_row(const CohomologyPresentation& pres, const DualityFunctional& phi,
                      const ProductSpec& spec) {
  require_certificate_degree(pres, spec);
  const int m = pres.m();
  Gf2Vector row(pres.basis(m - 1).size());
  for (auto [l, r] : expand(pres, spec, m).terms) {
    if (phi.phi.get(l)) row.flip(r);
  }
  return row;
}

bool pair(const CohomologyPresentation& pres, const DualityFunctional& phi, const Gf2Vector& psi,
          const ProductSpec& spec) {
  return pairing_row(pres, phi, spec).dot(psi);
}

std::optional<Gf2Vector> find_psi(const CohomologyPresentation& pres, const DualityFunctional& phi,
                                  const ProductSpec& spec) {
  auto row = pairing_row(pres, phi, spec);
  Gf2Matrix system = pres.relations(pres.m() - 1);
  system.append_row(row);
  Gf2Vector target(system.rows());
  target.set(system.rows() - 1);
  return solve(system, target);
}

std::vector<std::vector<int>> symmetry_classes(const GeneticCode& code) {
  const auto& subgees = code.subgees();
  std::set<std::uint64_t> members;
  for (Subset s : subgees) members.insert(s.mask());
  auto swap_preserves = [&](int i) {
    for (Subset s : subgees) {
      if (!members.count(swap_adjacent(s, i).mask())) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (int i = 1; i < code.n(); ++i) {
    if (!code.is_subgee(Subset::of({i}))) continue;
    if (!classes.empty() && classes.back().back() == i - 1 && swap_preserves(i - 1)) {
      classes.back().push_back(i);
    } else {
      classes.push_back({i});
    }
  }
  return classes;
}

std::string to_string(AbstainReason reason) {
  switch (reason) {
    case AbstainReason::projective: return "projective";
    case AbstainReason::torus: return "torus";
    case AbstainReason::exhausted: return "exhausted";
    case AbstainReason::budget: return "budget";
  }
  return "unknown";
}

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::certificate: return "certificate";
    case BoundMethod::torus: return "torus";
    case BoundMethod::projective: return "projective";
    case BoundMethod::abstain: return "abstain";
  }
  return "unknown";
}

CertifyResult certify(const GeneticCode& code, const CertifyOptions& options) {
  if (code.m() < 2) throw std::invalid_argument("certify needs n >= 5");
  auto lengths = realize(code);
  if (!lengths) throw std::invalid_argument(code.to_string() + " is not realizable");

  CertifyResult result;
  // RP^{m} and the torus have known cup-length obstructions; the search is not
  // run on them so that the report names the actual reason.
  if (is_projective(code)) {
    result.abstain = AbstainReason::projective;
    return result;
  }
  if (is_torus(code)) {
    result.abstain = AbstainReason::torus;
    return result;
  }

  CohomologyPresentation pres(code);
  auto phi = duality_functional(pres);
  const int m = pres.m();
  RowSpace relations(pres.relations(m - 1));
  const auto classes = symmetry_classes(code);

  auto attempt = [&](const std::string& family, const ProductSpec& spec) {
    ++result.evaluations;
    auto row = pairing_row(pres, phi, spec);
    if (row.is_zero() || relations.contains(row)) return false;
    auto psi = find_psi(pres, phi, spec);
    if (!psi) throw IntegrityError("row-space test and solver disagree on " + spec.to_string());
    std::vector<Subset> ones;
    for (auto idx : psi->support()) ones.push_back(pres.basis(m - 1)[idx]);
    result.certificate = Certificate{code, *lengths, spec, std::move(ones), family};
    return true;
  };

  if (options.families) {
    for (const auto& c : family_products(pres, phi, classes)) {
      if (attempt(c.family, c.product)) return result;
    }
  }
  if (options.general_search) {
    bool over_budget = false;
    enumerate_general(classes, 2 * m - 1, options.max_support, [&](const ProductSpec& spec) {
      if (result.evaluations >= options.budget) {
        over_budget = true;
        return true;
      }
      return attempt("general", spec);
    });
    if (result.certificate) return result;
    result.abstain = over_budget ? AbstainReason::budget : AbstainReason::exhausted;
    return result;
  }
  result.abstain = AbstainReason::exhausted;
  return result;
}

std::string BoundsReport::summary() const {
  const std::string up = std::to_string(upper);
  switch (method) {
    case BoundMethod::certificate: return "TC >= " + std::to_string(*lower) + " (upper " + up + ")";
    case BoundMethod::torus:
      return "torus: TC = n-2 = " + std::to_string(*lower);
    case BoundMethod::projective: return "projective space: no lower bound (upper " + up + ")";
    case BoundMethod::abstain: return "abstain: no certificate found (upper " + up + ")";
  }
  return "";
}

BoundsReport bounds_report(const GeneticCode& code, const CertifyOptions& options) {
  BoundsReport report;
  report.upper = 2 * code.n() - 5;
  auto res = certify(code, options);
  if (res.certificate) {
    report.method = BoundMethod::certificate;
    report.lower = res.certificate->lower_bound();
    report.certificate = std::move(res.certificate);
  } else if (res.abstain == AbstainReason::torus) {
    report.method = BoundMethod::torus;
    report.lower = code.n() - 2;
  } else if (res.abstain == AbstainReason::projective) {
    report.method = BoundMethod::projective;
  } else {
    report.method = BoundMethod::abstain;
  }
  return report;
}

VerifyResult verify_certificate(const Certificate& cert) {
  try {
    const auto& code = cert.code;
    if (code.m() < 2) return {false, "certificates need n >= 5"};
    auto verdict = validate_candidate(code);
    if (verdict.status != CandidateStatus::ok) return {false, "invalid code: " + verdict.message};
    if (cert.lengths.n() != code.n()) return {false, "length vector has wrong size"};
    if (!is_generic(cert.lengths)) return {false, "lengths are not generic"};
    if (!is_nonempty(cert.lengths)) return {false, "lengths give an empty space"};
    if (genetic_code(cert.lengths) != code) {
      return {false, "lengths realize " + genetic_code(cert.lengths).to_string() + ", not " +
                         code.to_string()};
    }
    CohomologyPresentation pres(code);
    if (cert.product.degree() != 2 * pres.m() - 1) return {false, "product degree is not 2m-1"};
    for (auto [i, e] : cert.product.v) {
      if (i < 1 || i >= code.n() || e < 1) return {false, "bad product exponent"};
    }
    auto phi = duality_functional(pres);
    auto space = psi_space(pres);
    auto psi = space.from_supports(cert.psi);
    if (!space.contains(psi)) return {false, "psi does not kill the degree-(m-1) relations"};
    if (!pair(pres, phi, psi, cert.product)) return {false, "pairing is 0"};
    return {true, "ok"};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

}  // namespace polytc
