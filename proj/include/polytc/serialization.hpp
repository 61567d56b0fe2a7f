#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "polytc/certificates.hpp"
#include "polytc/tables.hpp"

namespace polytc {

/// {"n": 7, "genes": [[7,5,2,1],[7,6,2]]}
nlohmann::json code_to_json(const GeneticCode& code);
GeneticCode code_from_json(const nlohmann::json& j);

/// "0" for the empty support, otherwise "1,3".
std::string monomial_key(Subset support);
Subset parse_monomial_key(const std::string& key);

nlohmann::json product_to_json(const ProductSpec& p);
ProductSpec product_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);
/// Throws std::invalid_argument on malformed input, including a claim other
/// than Certificate::kClaim.
Certificate certificate_from_json(const nlohmann::json& j);

enum class Format { json, csv, md };
Format parse_format(const std::string& text);

std::string betti_text(const std::vector<GeneticCode>& codes, Format format);
std::string relation_matrix_text(const CohomologyPresentation& pres, int degree, Format format);
std::string bigtable_text(const BigTable& table, Format format);
std::string table_tt_text(const std::vector<TtVerdict>& verdicts, Format format);

}  // namespace polytc
