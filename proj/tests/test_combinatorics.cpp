#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "polytc/combinatorics.hpp"

using namespace polytc;

namespace {

std::vector<long> random_lengths(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> pick(1, 40);
  std::vector<long> l(n);
  for (auto& x : l) x = pick(rng);
  std::sort(l.begin(), l.end());
  return l;
}

}  // namespace

TEST_CASE("subset order examples") {
  CHECK(dominated(Subset::of({1, 2}), Subset::of({2, 3})));
  CHECK_FALSE(dominated(Subset::of({1, 4}), Subset::of({2, 3})));
  CHECK(dominated(Subset::of({3, 4, 6}), Subset::of({3, 4, 6})));
  CHECK(dominated(Subset{}, Subset::of({1})));
}

TEST_CASE("suffix-count order agrees with greedy matching for n <= 8") {
  for (std::uint64_t s = 0; s < 256; ++s) {
    for (std::uint64_t t = 0; t < 256; ++t) {
      REQUIRE(dominated(Subset(s), Subset(t)) == oracle::leq(Subset(s), Subset(t)));
    }
  }
}

TEST_CASE("subset order is a partial order on [6]") {
  const std::uint64_t limit = 64;
  for (std::uint64_t a = 0; a < limit; ++a) {
    CHECK(dominated(Subset(a), Subset(a)));
    for (std::uint64_t b = 0; b < limit; ++b) {
      if (a != b && dominated(Subset(a), Subset(b))) REQUIRE_FALSE(dominated(Subset(b), Subset(a)));
      for (std::uint64_t c = 0; c < limit; ++c) {
        if (dominated(Subset(a), Subset(b)) && dominated(Subset(b), Subset(c))) {
          REQUIRE(dominated(Subset(a), Subset(c)));
        }
      }
    }
  }
}

TEST_CASE("genericity") {
  CHECK(is_generic(LengthVector::from_integers({1, 1, 1, 1, 1, 1, 1})));
  CHECK_FALSE(is_generic(LengthVector::from_integers({1, 1, 1, 1})));
  CHECK_FALSE(is_generic(LengthVector::from_integers({1, 2, 2, 3, 4})));
  auto half = half_sum_subset(LengthVector::from_integers({1, 2, 2, 3, 4}));
  REQUIRE(half);
  CHECK(LengthVector::from_integers({1, 2, 2, 3, 4}).sum(*half) * 2 == 12);
}

TEST_CASE("shortness") {
  auto ones = LengthVector::from_integers({1, 1, 1, 1, 1, 1, 1});
  CHECK(is_short(Subset::of({5, 6, 7}), ones));
  CHECK(is_short(Subset{}, ones));
  CHECK_FALSE(is_short(Subset::full(7), ones));
  CHECK_THROWS(is_short(Subset{}, LengthVector::from_integers({1, 1, 1, 1})));
}

TEST_CASE("genetic code examples") {
  CHECK(genetic_code(LengthVector::from_integers({1, 1, 1, 1, 1, 1, 1})).to_string() == "<765>");
  CHECK(genetic_code(LengthVector::from_integers({1, 1, 1, 1, 3})).to_string() == "<5>");
  CHECK(genetic_code(LengthVector::from_integers({1, 1, 4, 4, 4})).to_string() == "<521>");
  CHECK(genetic_code(LengthVector::from_integers({1, 1, 4, 4, 4})) == torus_code(5));
  CHECK_THROWS(genetic_code(LengthVector::from_integers({1, 1, 1, 1})));
  CHECK_THROWS(genetic_code(LengthVector::from_integers({1, 1, 1, 5})));
}

TEST_CASE("genetic code matches the brute-force definition on random lengths") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 400) {
    const int n = 4 + checked % 5;
    auto l = random_lengths(rng, n);
    auto lv = LengthVector::from_integers(l);
    if (!is_generic(lv) || !is_nonempty(lv)) continue;
    ++checked;
    auto code = genetic_code(lv);
    auto expect = oracle::genes(l);
    std::sort(expect.begin(), expect.end());
    auto got = code.genes();
    std::sort(got.begin(), got.end());
    REQUIRE(got == expect);

    // complements, monotonicity, scaling
    auto oracle_short = ShortnessOracle::from_lengths(lv);
    auto code_short = ShortnessOracle::from_code(code);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Subset s(mask);
      REQUIRE(oracle_short.is_short(s) != oracle_short.is_short(s.complement(n)));
      REQUIRE(oracle_short.is_short(s) == code_short.is_short(s));
      if (s.contains(n)) REQUIRE(oracle_short.is_short(s) == code.is_subgee(s.without(n)));
    }
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); a += 3) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); b += 5) {
        if (dominated(Subset(a), Subset(b)) && oracle_short.is_short(Subset(b))) {
          REQUIRE(oracle_short.is_short(Subset(a)));
        }
      }
    }
    REQUIRE(genetic_code(lv.scaled(mpq_class(7, 3))) == code);
  }
}

TEST_CASE("subgees are the down-set of the gees") {
  auto code = GeneticCode::parse("<7521,763>", 7);
  auto expect = oracle::subgees(code);
  CHECK(code.subgees().size() == expect.size());
  for (Subset s : expect) CHECK(code.is_subgee(s));
}

TEST_CASE("parsing and printing") {
  auto code = GeneticCode::parse("7521,762");
  CHECK(code.n() == 7);
  CHECK(code.to_string() == "<7521,762>");
  CHECK(code.canonical_name() == "7521,762");
  CHECK(GeneticCode::parse("[[7,5,2,1],[7,6,2]]") == code);
  CHECK(GeneticCode::parse("<>", 6).genes().empty());
  CHECK_THROWS_AS(GeneticCode::parse("7521,752"), std::invalid_argument);  // not an antichain
  CHECK_THROWS_AS(GeneticCode::parse("7521,62"), std::invalid_argument);   // gene without n
  CHECK_THROWS_AS(GeneticCode(3, {Subset::of({3})}), std::invalid_argument);
  auto big = GeneticCode::from_gees(12, {Subset::of({11, 2})});
  CHECK(big.to_string() == "[[12,11,2]]");
}

TEST_CASE("candidate validation") {
  CHECK(validate_candidate(GeneticCode::parse("7521,762")).status == CandidateStatus::ok);
  CHECK(validate_candidate(GeneticCode::parse("8521,863")).status == CandidateStatus::ok);
  auto bad = validate_candidate(GeneticCode::parse("7521,763"));
  REQUIRE(bad.status == CandidateStatus::conflict);
  CHECK(*bad.witness == Subset::of({3, 4, 6}));
  std::vector<Subset> chain{Subset::of({7, 5, 2, 1}), Subset::of({7, 5, 2})};
  CHECK(validate_candidate(7, chain).status == CandidateStatus::not_antichain);
}

TEST_CASE("realize round-trips") {
  for (const char* text : {"765", "5", "521", "7521,762", "8521,863", "7321,742"}) {
    auto code = GeneticCode::parse(text);
    auto l = realize(code);
    REQUIRE(l);
    CHECK(is_generic(*l));
    CHECK(genetic_code(*l) == code);
  }
}

TEST_CASE("enumeration for small n") {
  auto six = enumerate_codes(6);
  CHECK(six.codes.size() == 20);
  CHECK(six.unrealizable.empty());
  CHECK(std::is_sorted(six.codes.begin(), six.codes.end()));
  CHECK(std::find(six.codes.begin(), six.codes.end(), projective_code(6)) != six.codes.end());
  CHECK(std::find(six.codes.begin(), six.codes.end(), torus_code(6)) != six.codes.end());
  for (const auto& c : six.codes) {
    CHECK(validate_candidate(c).status == CandidateStatus::ok);
    auto l = realize(c);
    REQUIRE(l);
    CHECK(genetic_code(*l) == c);
  }
  CHECK(enumerate_codes(5).codes.size() == 6);
  CHECK(enumerate_codes(4).codes.size() == 2);
  CHECK(enumerate_codes(7, {4}).codes == enumerate_codes(7, {1}).codes);
  CHECK_THROWS(enumerate_codes(3));
  CHECK_THROWS(enumerate_codes(10));
}

TEST_CASE("enumeration agrees with codes of random length vectors") {
  // Every code seen from random lengths must be in the enumerated list.
  auto seven = enumerate_codes(7).codes;
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto lv = LengthVector::from_integers(random_lengths(rng, 7));
    if (!is_generic(lv) || !is_nonempty(lv)) continue;
    auto c = genetic_code(lv);
    if (c.genes().empty()) continue;
    REQUIRE(std::binary_search(seven.begin(), seven.end(), c));
  }
}
