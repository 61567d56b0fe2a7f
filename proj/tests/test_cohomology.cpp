#include <doctest.h>

#include "oracles.hpp"
#include "polytc/cohomology.hpp"

using namespace polytc;

namespace {

std::vector<int> betti_sequence(const GeneticCode& code) {
  CohomologyPresentation pres(code);
  std::vector<int> out;
  for (int d = 0; d <= pres.m(); ++d) out.push_back(pres.betti(d));
  return out;
}

Gf2Vector functional(const std::vector<Subset>& columns, std::initializer_list<Subset> ones) {
  Gf2Vector v(columns.size());
  for (Subset s : ones) {
    auto it = std::find(columns.begin(), columns.end(), s);
    REQUIRE(it != columns.end());
    v.set(static_cast<std::size_t>(it - columns.begin()));
  }
  return v;
}

}  // namespace

TEST_CASE("betti numbers of tori and projective spaces") {
  CHECK(betti_sequence(GeneticCode::parse("521")) == std::vector<int>{1, 2, 1});
  CHECK(betti_sequence(GeneticCode::parse("5")) == std::vector<int>{1, 1, 1});
  CHECK(betti_sequence(GeneticCode::parse("6321")) == std::vector<int>{1, 3, 3, 1});
  CHECK(betti_sequence(GeneticCode::parse("8")) == std::vector<int>(6, 1));
  CohomologyPresentation pres(GeneticCode::parse("765"));
  CHECK(pres.betti(0) == 1);
  CHECK_THROWS(pres.betti(5));
  CHECK_THROWS(pres.betti(-1));
}

TEST_CASE("spanning sets and relation labels") {
  CohomologyPresentation pres(GeneticCode::parse("765"));
  for (int d = 0; d <= pres.m(); ++d) {
    for (Subset s : pres.basis(d)) {
      CHECK(s.size() <= d);
      CHECK(oracle::is_subgee(pres.code(), s));
    }
    for (std::size_t i = 1; i < pres.basis(d).size(); ++i) {
      CHECK(lex_less(pres.basis(d)[i - 1], pres.basis(d)[i]));
    }
    for (Subset s : pres.relation_labels(d)) CHECK(s.size() >= pres.n() - 2 - d);
    auto rel = pres.relations(d);
    CHECK(rel.rows() == pres.relation_labels(d).size());
    CHECK(rel.cols() == pres.basis(d).size());
  }
  CHECK(pres.basis(1).front() == Subset{});
  CHECK(pres.index(2, Subset::of({1, 2})).has_value());
  CHECK_FALSE(pres.index(2, Subset::of({1, 2, 3})).has_value());
}

TEST_CASE("normal forms") {
  CohomologyPresentation pres(GeneticCode::parse("765"));
  auto v = pres.normal_form({{1, 3}, {2, 1}}, 0);
  REQUIRE(v);
  CHECK(v->degree == 4);
  CHECK(v->support == Subset::of({1, 2}));
  CHECK(v->r_exponent() == 2);
  auto rm = pres.normal_form({}, pres.m());
  REQUIRE(rm);
  CHECK(rm->support.empty());
  CHECK_FALSE(pres.normal_form({}, pres.m() + 1));

  CohomologyPresentation three(GeneticCode::parse("743,752,761"));
  CHECK_FALSE(three.normal_form({{1, 1}, {2, 1}, {3, 1}}, 0));
}

TEST_CASE("betti numbers equal a brute-force quotient dimension for n <= 6") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& code : enumerate_codes(n).codes) {
      CohomologyPresentation pres(code);
      for (int d = 0; d <= pres.m(); ++d) {
        INFO(code.to_string() << " d=" << d);
        CHECK(pres.betti(d) == oracle::quotient_dimension(code, d));
      }
    }
  }
}

TEST_CASE("Poincare duality for every code with n <= 7") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& code : enumerate_codes(n).codes) {
      auto b = betti_sequence(code);
      INFO(code.to_string());
      CHECK(std::equal(b.begin(), b.end(), b.rbegin()));
    }
  }
}

TEST_CASE("the duality functional is unique for every code with n <= 8") {
  for (int n = 5; n <= 8; ++n) {
    for (const auto& code : enumerate_codes(n).codes) {
      CohomologyPresentation pres(code);
      REQUIRE(pres.betti(pres.m()) == 1);
      auto phi = duality_functional(pres);
      CHECK_FALSE(phi.phi.is_zero());
      CHECK(pres.relations(pres.m()).multiply(phi.phi).is_zero());
    }
  }
}

TEST_CASE("the duality functional of <43,52,61>") {
  CohomologyPresentation pres(GeneticCode::parse("743,752,761"));
  auto phi = duality_functional(pres);
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      Subset s = Subset::of({i, j});
      if (pres.code().is_subgee(s)) CHECK(phi.value(s));
    }
  }
  CHECK_FALSE(phi.value(Subset::of({1, 2, 3})));
}

TEST_CASE("the duality functional of <7321>") {
  CohomologyPresentation pres(GeneticCode::parse("7321"));
  auto phi = duality_functional(pres);
  for (Subset s : phi.columns) {
    INFO(s.to_string());
    CHECK(phi.value(s) == (s.size() == 3));
  }
}

TEST_CASE("psi space membership") {
  CohomologyPresentation a(GeneticCode::parse("7321,742"));
  auto space = psi_space(a);
  CHECK(space.contains(
      functional(space.columns, {Subset::of({1}), Subset::of({1, 3}), Subset::of({1, 4})})));
  CHECK_FALSE(space.contains(functional(space.columns, {Subset::of({1, 3})})));
  for (const auto& b : space.basis) CHECK(space.relations.multiply(b).is_zero());

  CohomologyPresentation c(GeneticCode::parse("743,752,761"));
  auto s2 = psi_space(c);
  CHECK(s2.contains(functional(s2.columns, {Subset::of({1}), Subset::of({1, 6})})));
  CHECK(s2.from_supports({Subset::of({1}), Subset::of({1, 6})}) ==
        functional(s2.columns, {Subset::of({1}), Subset::of({1, 6})}));
}

TEST_CASE("psi space of the torus matches exhaustive enumeration") {
  CohomologyPresentation pres(torus_code(5));
  auto space = psi_space(pres);
  auto rel = pres.relations(1);
  const std::size_t k = space.columns.size();
  std::size_t members = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Gf2Vector psi(k);
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) psi.set(i);
    }
    const bool kills = rel.multiply(psi).is_zero();
    CHECK(space.contains(psi) == kills);
    members += kills;
  }
  CHECK(members == (std::size_t{1} << space.basis.size()));
}

TEST_CASE("single-gene relations in top degree") {
  // With one gee {a}, subtracting the relations for {i} and {j} leaves
  // R^{m-1}V_i + R^{m-1}V_j.
  const int n = 8, a = 4;
  CohomologyPresentation pres(GeneticCode::from_gees(n, {Subset::of({a})}));
  const int m = pres.m();
  auto labels = pres.relation_labels(m);
  auto rel = pres.relations(m);
  auto row_of = [&](Subset s) {
    auto it = std::find(labels.begin(), labels.end(), s);
    REQUIRE(it != labels.end());
    return rel.row(static_cast<std::size_t>(it - labels.begin()));
  };
  for (int i = 1; i <= a; ++i) {
    for (int j = i + 1; j <= a; ++j) {
      auto diff = row_of(Subset::of({i})) ^ row_of(Subset::of({j}));
      CHECK(diff == functional(pres.basis(m), {Subset::of({i}), Subset::of({j})}));
    }
  }
}

TEST_CASE("degenerate codes") {
  CohomologyPresentation p(GeneticCode::parse("<>", 6));
  CHECK_NOTHROW(p.betti(0));
  CohomologyPresentation proj(projective_code(6));
  CHECK(proj.basis(proj.m()).size() == 1);
  CHECK(duality_functional(proj).phi.count() == 1);
}
