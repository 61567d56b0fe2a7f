#include "polytc/serialization.hpp"

#include <sstream>
#include <stdexcept>

namespace polytc {

using nlohmann::json;

json code_to_json(const GeneticCode& code) {
  json genes = json::array();
  for (Subset g : code.genes()) genes.push_back(g.elements_desc());
  return {{"n", code.n()}, {"genes", genes}};
}

GeneticCode code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("genes")) {
    throw std::invalid_argument("code JSON needs \"n\" and \"genes\"");
  }
  const int n = j.at("n").get<int>();
  std::vector<Subset> genes;
  for (const auto& g : j.at("genes")) genes.push_back(Subset::of(g.get<std::vector<int>>()));
  return GeneticCode(n, genes);
}

std::string monomial_key(Subset support) {
  if (support.empty()) return "0";
  std::string s;
  for (int i : support.elements()) {
    if (!s.empty()) s += ',';
    s += std::to_string(i);
  }
  return s;
}

Subset parse_monomial_key(const std::string& key) {
  if (key == "0") return Subset{};
  std::vector<int> el;
  std::stringstream in(key);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 1 || v > Subset::kMaxElement) {
      throw std::invalid_argument("bad monomial key \"" + key + "\"");
    }
    el.push_back(v);
  }
  if (el.empty()) throw std::invalid_argument("empty monomial key");
  return Subset::of(el);
}

json product_to_json(const ProductSpec& p) {
  json v = json::object();
  for (auto [i, e] : p.v) v[std::to_string(i)] = e;
  return {{"R", p.r}, {"V", v}};
}

ProductSpec product_from_json(const json& j) {
  std::map<int, int> v;
  for (const auto& [k, e] : j.at("V").items()) v[std::stoi(k)] = e.get<int>();
  return ProductSpec::make(j.at("R").get<int>(), v);
}

json certificate_to_json(const Certificate& cert) {
  json lengths = json::array();
  for (const auto& z : cert.lengths.as_integers()) {
    if (z.fits_slong_p()) lengths.push_back(z.get_si());
    else lengths.push_back(z.get_str());
  }
  json psi = json::array();
  for (Subset s : cert.psi) psi.push_back(monomial_key(s));
  return {{"code", code_to_json(cert.code)},
          {"code_text", cert.code.to_string()},
          {"lengths", lengths},
          {"product", product_to_json(cert.product)},
          {"psi", psi},
          {"claim", Certificate::kClaim},
          {"bound", {{"lower", cert.lower_bound()}, {"upper", cert.upper_bound()}}},
          {"family", cert.family},
          {"manifest", "manifest.json"}};
}

Certificate certificate_from_json(const json& j) {
  try {
    if (j.at("claim").get<std::string>() != Certificate::kClaim) {
      throw std::invalid_argument("unsupported claim");
    }
    auto code = code_from_json(j.at("code"));
    std::vector<mpq_class> lengths;
    for (const auto& x : j.at("lengths")) {
      mpz_class z;
      if (x.is_string()) z = mpz_class(x.get<std::string>());
      else z = x.get<long>();
      lengths.emplace_back(z);
    }
    std::vector<Subset> psi;
    for (const auto& k : j.at("psi")) psi.push_back(parse_monomial_key(k.get<std::string>()));
    Certificate cert{code, LengthVector(lengths), product_from_json(j.at("product")), psi,
                     j.value("family", std::string("unknown"))};
    if (j.contains("bound")) {
      const auto& b = j.at("bound");
      if (b.at("lower").get<int>() != cert.lower_bound() ||
          b.at("upper").get<int>() != cert.upper_bound()) {
        throw std::invalid_argument("bound does not match the code");
      }
    }
    return cert;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "md") return Format::md;
  throw std::invalid_argument("format must be json, csv or md");
}

namespace {

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += sep;
    s += cells[i];
  }
  return s;
}

// Renders a header and rows as CSV or a markdown table.
std::string grid(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, Format format) {
  std::string out;
  if (format == Format::csv) {
    out += join(header, ",") + "\n";
    for (const auto& r : rows) out += join(r, ",") + "\n";
    return out;
  }
  out += "| " + join(header, " | ") + " |\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& r : rows) out += "| " + join(r, " | ") + " |\n";
  return out;
}

std::string csv_quote(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

std::string betti_text(const std::vector<GeneticCode>& codes, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& code : codes) {
      CohomologyPresentation pres(code);
      json rows = json::array();
      for (const auto& r : betti_table(pres)) {
        rows.push_back({{"degree", r.degree}, {"spanning", r.spanning}, {"rank", r.rank},
                        {"betti", r.betti}});
      }
      arr.push_back({{"code", code.to_string()}, {"rows", rows}});
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& code : codes) {
    CohomologyPresentation pres(code);
    auto table = betti_table(pres);
    std::vector<std::string> b;
    bool palindromic = true;
    for (std::size_t d = 0; d < table.size(); ++d) {
      b.push_back(std::to_string(table[d].betti));
      if (table[d].betti != table[table.size() - 1 - d].betti) palindromic = false;
    }
    std::string name = format == Format::csv ? csv_quote(code.to_string()) : code.to_string();
    rows.push_back({name, join(b, " "), palindromic ? "yes" : "no"});
  }
  return grid({"code", "betti", "palindromic"}, rows, format);
}

std::string relation_matrix_text(const CohomologyPresentation& pres, int degree, Format format) {
  const auto& cols = pres.basis(degree);
  const auto labels = pres.relation_labels(degree);
  const auto mat = pres.relations(degree);
  if (format == Format::json) {
    json columns = json::array(), rows = json::array();
    for (Subset s : cols) columns.push_back(monomial_key(s));
    for (std::size_t r = 0; r < labels.size(); ++r) {
      rows.push_back({{"relation", monomial_key(labels[r])}, {"bits", mat.row(r).to_string()}});
    }
    return json{{"code", pres.code().to_string()},
                {"degree", degree},
                {"rank", pres.relation_rank(degree)},
                {"columns", columns},
                {"rows", rows}}
               .dump(2) +
           "\n";
  }
  std::vector<std::string> header{"relation"};
  for (Subset s : cols) header.push_back(format == Format::csv ? csv_quote(monomial_key(s)) : monomial_key(s));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < labels.size(); ++r) {
    std::vector<std::string> row{format == Format::csv ? csv_quote(monomial_key(labels[r]))
                                                        : monomial_key(labels[r])};
    for (std::size_t c = 0; c < cols.size(); ++c) row.push_back(mat.get(r, c) ? "1" : "0");
    rows.push_back(std::move(row));
  }
  return grid(header, rows, format);
}

std::string bigtable_text(const BigTable& table, Format format) {
  const auto& cols = bigtable_columns();
  if (format == Format::json) {
    json rows = json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const auto& rc = table.rows[i];
      rows.push_back({{"a", rc.a}, {"b", rc.b}, {"c", rc.c}, {"marks", table.marks[i]}});
    }
    json columns = json::array();
    for (const auto& c : cols) columns.push_back(c.label);
    return json{{"columns", columns}, {"rows", rows}}.dump(2) + "\n";
  }
  std::vector<std::string> header{"a", "b", "c"};
  for (const auto& c : cols) header.push_back(c.label);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& rc = table.rows[i];
    std::vector<std::string> row{std::to_string(rc.a), std::to_string(rc.b), std::to_string(rc.c)};
    for (char ch : table.marks[i]) row.push_back(ch == 'x' ? "x" : "");
    rows.push_back(std::move(row));
  }
  return grid(header, rows, format);
}

std::string table_tt_text(const std::vector<TtVerdict>& verdicts, Format format) {
  auto psi_list = [](const TtRow& row) {
    std::vector<std::string> keys;
    for (Subset s : row.psi_ones) keys.push_back(monomial_key(s));
    return keys;
  };
  auto checked_ns = [](const TtVerdict& v) {
    std::vector<std::string> ns;
    for (const auto& c : v.checks) ns.push_back(std::to_string(c.n));
    return ns;
  };
  if (format == Format::json) {
    json rows = json::array();
    for (const auto& v : verdicts) {
      json checks = json::array();
      for (const auto& c : v.checks) {
        json ignored = json::array();
        for (Subset s : c.ignored) ignored.push_back(monomial_key(s));
        checks.push_back({{"n", c.n},
                          {"psi_in_space", c.psi_in_space},
                          {"phi_facts", c.phi_facts},
                          {"expression", c.expression},
                          {"engine", c.engine},
                          {"product", c.product},
                          {"ignored_supports", ignored}});
      }
      rows.push_back({{"gees", v.row.label()}, {"psi", psi_list(v.row)}, {"verified", v.verified},
                      {"checks", checks}});
    }
    return rows.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : verdicts) {
    const std::string sep = format == Format::csv ? " " : ", ";
    std::string gees = v.row.label();
    std::string psi = join(psi_list(v.row), format == Format::csv ? " " : "; ");
    if (format == Format::csv) gees = csv_quote(gees);
    rows.push_back({gees, psi, join(checked_ns(v), sep), v.verified ? "verified" : "FAILED"});
  }
  return grid({"gees", "psi = 1 on", "n checked", "status"}, rows, format);
}

}  // namespace polytc
