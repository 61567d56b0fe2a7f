#include "polytc/cohomology.hpp"

#include <algorithm>

namespace polytc {

CohomologyPresentation::CohomologyPresentation(GeneticCode code) : code_(std::move(code)) {
  if (m() < 1) throw std::invalid_argument("cohomology needs n >= 4");
  basis_.resize(m() + 1);
  index_.resize(m() + 1);
  for (int d = 0; d <= m(); ++d) {
    for (Subset s : code_.subgees()) {
      if (s.size() <= d) {
        index_[d].emplace(s.mask(), basis_[d].size());
        basis_[d].push_back(s);
      }
    }
  }
}

void CohomologyPresentation::check_degree(int d) const {
  if (d < 0 || d > m()) {
    throw std::out_of_range("degree " + std::to_string(d) + " outside [0, " +
                            std::to_string(m()) + "]");
  }
}

const std::vector<Subset>& CohomologyPresentation::basis(int d) const {
  check_degree(d);
  return basis_[d];
}

std::optional<std::size_t> CohomologyPresentation::index(int d, Subset support) const {
  check_degree(d);
  auto it = index_[d].find(support.mask());
  if (it == index_[d].end()) return std::nullopt;
  return it->second;
}

std::vector<Subset> CohomologyPresentation::relation_labels(int d) const {
  check_degree(d);
  std::vector<Subset> out;
  for (Subset s : code_.subgees()) {
    if (s.size() >= n() - 2 - d) out.push_back(s);
  }
  return out;
}

Gf2Matrix CohomologyPresentation::relations(int d) const {
  const auto labels = relation_labels(d);
  const auto& cols = basis_[d];
  Gf2Matrix mat(labels.size(), cols.size());
  for (std::size_t r = 0; r < labels.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (labels[r].disjoint(cols[c])) mat.set(r, c);
    }
  }
  return mat;
}

std::optional<Monomial> CohomologyPresentation::normal_form(const std::map<int, int>& v_exponents,
                                                            int r_exp) const {
  if (r_exp < 0) throw std::invalid_argument("negative R exponent");
  Subset support;
  int degree = r_exp;
  for (auto [i, e] : v_exponents) {
    if (e < 0) throw std::invalid_argument("negative V exponent");
    if (e == 0) continue;
    if (i < 1 || i >= n()) throw std::invalid_argument("V index outside [n-1]");
    support = support.with(i);
    degree += e;
  }
  if (degree > m() || !code_.is_subgee(support)) return std::nullopt;
  return Monomial{degree, support};
}

int CohomologyPresentation::relation_rank(int d) const {
  return static_cast<int>(rank(relations(d)));
}

int CohomologyPresentation::betti(int d) const {
  return spanning_count(d) - relation_rank(d);
}

bool DualityFunctional::value(Subset support) const {
  auto it = std::lower_bound(columns.begin(), columns.end(), support, lex_less);
  if (it == columns.end() || *it != support) return false;
  return phi.get(static_cast<std::size_t>(it - columns.begin()));
}

bool PsiSpace::contains(const Gf2Vector& psi) const {
  return psi.size() == columns.size() && relations.multiply(psi).is_zero();
}

Gf2Vector PsiSpace::from_supports(const std::vector<Subset>& ones) const {
  Gf2Vector v(columns.size());
  for (Subset s : ones) {
    auto it = std::lower_bound(columns.begin(), columns.end(), s, lex_less);
    if (it == columns.end() || *it != s) {
      throw std::invalid_argument("support " + s.to_string() + " is not a degree-(m-1) monomial");
    }
    v.set(static_cast<std::size_t>(it - columns.begin()));
  }
  return v;
}

DualityFunctional duality_functional(const CohomologyPresentation& pres) {
  auto kernel = nullspace(pres.relations(pres.m()));
  if (kernel.size() != 1) {
    throw IntegrityError("top-degree functional space of " + pres.code().to_string() +
                         " has dimension " + std::to_string(kernel.size()) + ", expected 1");
  }
  return {pres.basis(pres.m()), std::move(kernel.front())};
}

PsiSpace psi_space(const CohomologyPresentation& pres) {
  if (pres.m() < 2) throw std::invalid_argument("psi_space needs m >= 2");
  auto rel = pres.relations(pres.m() - 1);
  auto kernel = nullspace(rel);
  return {pres.basis(pres.m() - 1), std::move(kernel), std::move(rel)};
}

std::vector<BettiRow> betti_table(const CohomologyPresentation& pres) {
  std::vector<BettiRow> rows;
  for (int d = 0; d <= pres.m(); ++d) {
    int span = pres.spanning_count(d);
    int rk = pres.relation_rank(d);
    rows.push_back({d, span, rk, span - rk});
  }
  return rows;
}

}  // namespace polytc
