#include <doctest.h>

#include <algorithm>

#include "polytc/serialization.hpp"

using namespace polytc;
using nlohmann::json;

TEST_CASE("code JSON") {
  auto code = GeneticCode::parse("7521,762");
  auto j = code_to_json(code);
  CHECK(j["n"] == 7);
  CHECK(j["genes"] == json::parse("[[7,5,2,1],[7,6,2]]"));
  CHECK(code_from_json(j) == code);
  CHECK_THROWS(code_from_json(json::parse(R"({"n": 7})")));
}

TEST_CASE("monomial keys") {
  CHECK(monomial_key(Subset{}) == "0");
  CHECK(monomial_key(Subset::of({3, 1})) == "1,3");
  CHECK(parse_monomial_key("1,3") == Subset::of({1, 3}));
  CHECK(parse_monomial_key("0") == Subset{});
  CHECK_THROWS(parse_monomial_key("1,x"));
}

TEST_CASE("certificate JSON round trip is exact") {
  for (const char* text : {"765", "7521,762", "8521,863"}) {
    auto cert = *certify(GeneticCode::parse(text)).certificate;
    auto j = certificate_to_json(cert);
    auto back = certificate_from_json(j);
    CHECK(back.code == cert.code);
    CHECK(back.lengths == cert.lengths);
    CHECK(back.product == cert.product);
    CHECK(back.psi == cert.psi);
    CHECK(certificate_to_json(back).dump() == j.dump());
    CHECK(verify_certificate(back).ok);
    CHECK(j["manifest"] == "manifest.json");
    CHECK(j["claim"] == "TC>=2n-6");
  }
}

TEST_CASE("certificates with a wrong claim are rejected") {
  auto j = certificate_to_json(*certify(GeneticCode::parse("765")).certificate);
  auto bad = j;
  bad["claim"] = "TC>=2n-5";
  CHECK_THROWS(certificate_from_json(bad));
  bad = j;
  bad["bound"]["lower"] = 9;
  CHECK_THROWS(certificate_from_json(bad));
}

TEST_CASE("emitters") {
  auto codes = enumerate_codes(6).codes;
  auto md = betti_text(codes, Format::md);
  CHECK(std::count(md.begin(), md.end(), '\n') == 22);
  CHECK(md.find("| no |") == std::string::npos);
  auto csv = betti_text(codes, Format::csv);
  CHECK(csv.rfind("code,betti,palindromic\n", 0) == 0);
  auto js = json::parse(betti_text(codes, Format::json));
  CHECK(js.size() == 20);

  CohomologyPresentation pres(GeneticCode::parse("765"));
  auto rel = json::parse(relation_matrix_text(pres, pres.m(), Format::json));
  CHECK(rel.is_object());
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS(parse_format("xml"));
}
