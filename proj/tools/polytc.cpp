#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "polytc/serialization.hpp"
#include "store.hpp"

using namespace polytc;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kAbstain = 2;
constexpr int kInvalid = 3;
constexpr int kVerifyFailed = 4;
constexpr const char* kVersion = "1.0.0";

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LengthVector parse_lengths(const std::string& text) {
  LengthVector lengths = [&] {
    try {
      return LengthVector::parse(text);
    } catch (const std::exception& e) {
      throw InvalidInput(e.what());
    }
  }();
  if (auto half = half_sum_subset(lengths)) {
    throw InvalidInput("lengths are not generic: subset " + half->to_string() + " sums to half");
  }
  if (!is_nonempty(lengths)) throw InvalidInput("lengths give an empty polygon space");
  return lengths;
}

GeneticCode parse_code(const std::string& text, std::optional<int> n) {
  try {
    auto code = GeneticCode::parse(text, n);
    auto verdict = validate_candidate(code);
    if (verdict.status != CandidateStatus::ok) throw InvalidInput(verdict.message);
    return code;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
}

json manifest(const std::string& command, json inputs, const json& outputs, double ms) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"outputs", outputs},
          {"version", kVersion},
          {"elapsed_ms", static_cast<long long>(ms)}};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---- code / validate ----

int cmd_code(const std::string& lengths_text, const std::string& format) {
  auto lengths = parse_lengths(lengths_text);
  auto code = genetic_code(lengths);
  if (format == "json") std::cout << code_to_json(code).dump() << "\n";
  else std::cout << code.to_string() << "\n";
  return kOk;
}

int cmd_validate(const std::string& text, std::optional<int> n) {
  GeneticCode code = [&] {
    try {
      return GeneticCode::parse(text, n);
    } catch (const std::exception& e) {
      throw InvalidInput(e.what());
    }
  }();
  auto verdict = validate_candidate(code);
  switch (verdict.status) {
    case CandidateStatus::ok: {
      std::cout << "ok " << code.to_string();
      if (auto l = realize(code)) std::cout << " realized by " << l->to_string();
      else std::cout << " (no realizing lengths)";
      std::cout << "\n";
      return kOk;
    }
    case CandidateStatus::conflict:
      std::cout << "conflict: " << verdict.witness->to_string() << " would be both short and long\n";
      return kInvalid;
    default:
      std::cout << "invalid: " << verdict.message << "\n";
      return kInvalid;
  }
}

// ---- enumerate ----

int cmd_enumerate(int n, bool allow_n9, const std::string& out, int jobs, bool list) {
  if (n < 4 || n > 9 || (n == 9 && !allow_n9)) {
    throw InvalidInput("enumerate supports 4 <= n <= 8 (n = 9 with --allow-n9)");
  }
  auto t0 = std::chrono::steady_clock::now();
  auto result = enumerate_codes(n, {jobs});
  if (list) {
    for (const auto& c : result.codes) std::cout << c.to_string() << "\n";
  }
  for (const auto& c : result.unrealizable) {
    std::cout << "valid but unrealizable: " << c.to_string() << "\n";
  }
  std::cout << "n=" << n << ": " << result.codes.size() << " genetic codes\n";
  if (!out.empty()) {
    store::Store st(out);
    json outputs = json::array();
    const std::string dir = "n=" + std::to_string(n) + "/";
    for (const auto& c : result.codes) {
      json doc = code_to_json(c);
      doc["text"] = c.to_string();
      if (auto l = realize(c)) {
        json lengths = json::array();
        for (const auto& z : l->as_integers()) lengths.push_back(z.get_si());
        doc["lengths"] = lengths;
      }
      doc["manifest"] = "manifest.json";
      st.put(dir + c.canonical_name() + ".json", doc);
    }
    outputs.push_back(dir);
    st.set_count(n, result.codes.size());
    st.write_manifest(manifest("enumerate", {{"n", n}, {"jobs", jobs}}, outputs, elapsed_ms(t0)));
    st.commit();
  }
  return kOk;
}

// ---- certify ----

int exit_for(const BoundsReport& r) {
  return r.method == BoundMethod::certificate || r.method == BoundMethod::torus ? kOk : kAbstain;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) {
    std::cout << "verification failed: not valid JSON\n";
    return kVerifyFailed;
  }
  try {
    auto cert = certificate_from_json(doc);
    auto v = verify_certificate(cert);
    if (!v.ok) {
      std::cout << "verification failed: " << v.message << "\n";
      return kVerifyFailed;
    }
    // The stored document must be exactly what the certificate serializes to.
    if (certificate_to_json(cert) != doc) {
      std::cout << "verification failed: document has fields that differ from its canonical form\n";
      return kVerifyFailed;
    }
    std::cout << "verified " << cert.code.to_string() << ": TC >= " << cert.lower_bound()
              << " (upper " << cert.upper_bound() << ")\n";
    return kOk;
  } catch (const std::exception& e) {
    std::cout << "verification failed: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

int cmd_certify_one(const GeneticCode& code, std::optional<LengthVector> lengths,
                    const CertifyOptions& opts, const std::string& out, const std::string& format) {
  if (code.m() < 2) throw InvalidInput("certify needs n >= 5");
  if (!realize(code)) throw InvalidInput(code.to_string() + " is not realizable");
  auto t0 = std::chrono::steady_clock::now();
  auto report = bounds_report(code, opts);
  if (report.certificate && lengths) report.certificate->lengths = *lengths;
  std::cout << report.summary() << "\n";
  if (report.certificate) {
    const auto& c = *report.certificate;
    std::cout << "product " << c.product.to_string() << " (" << c.family << "), psi = 1 on "
              << c.psi.size() << " monomials\n";
    if (format == "json") std::cout << certificate_to_json(c).dump(2) << "\n";
    if (!out.empty()) {
      store::Store st(out);
      const std::string rel = "certs/" + code.canonical_name() + ".json";
      st.put(rel, certificate_to_json(c));
      st.write_manifest(manifest("certify", {{"code", code.to_string()}, {"budget", opts.budget}},
                                 json::array({rel}), elapsed_ms(t0)));
      st.commit();
      std::cout << "wrote " << (st.root() / rel).string() << "\n";
    }
  }
  return exit_for(report);
}

int cmd_certify_all(int n, const CertifyOptions& opts, int jobs, const std::string& out) {
  if (n < 5 || n > 8) throw InvalidInput("batch certification supports 5 <= n <= 8");
  auto t0 = std::chrono::steady_clock::now();
  auto codes = enumerate_codes(n, {jobs}).codes;
  std::vector<BoundsReport> reports(codes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < codes.size(); i = next++) reports[i] = bounds_report(codes[i], opts);
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < std::max(1, jobs); ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::size_t certified = 0;
  std::vector<std::string> abstained;
  std::unique_ptr<store::Store> st;
  if (!out.empty()) st = std::make_unique<store::Store>(out);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto& r = reports[i];
    std::cout << codes[i].to_string() << "\t" << r.summary();
    if (r.certificate) {
      ++certified;
      std::cout << "\t" << r.certificate->family;
      if (st) st->put("certs/" + codes[i].canonical_name() + ".json", certificate_to_json(*r.certificate));
    } else {
      abstained.push_back(codes[i].to_string() + " (" + to_string(r.method) + ")");
    }
    std::cout << "\n";
  }
  std::cout << certified << "/" << codes.size() << " certified";
  if (!abstained.empty()) {
    std::cout << "; no certificate for";
    for (const auto& a : abstained) std::cout << " " << a;
  }
  std::cout << "\n";
  if (st) {
    st->write_manifest(manifest("certify", {{"n", n}, {"budget", opts.budget}, {"jobs", jobs}},
                                json::array({"certs/"}), elapsed_ms(t0)));
    st->commit();
  }
  return kOk;
}

// ---- tables ----

int cmd_tables(bool tt, bool big, std::optional<int> betti_n, const std::string& relations,
               std::optional<int> degree, bool diff, const std::string& format_text) {
  const Format format = parse_format(format_text);
  int rc = kOk;
  int chosen = int(tt) + int(big) + int(betti_n.has_value()) + int(!relations.empty());
  if (chosen != 1) throw InvalidInput("choose exactly one of --tt, --big, --betti, --relations");
  if (big) {
    auto table = reproduce_bigtable();
    if (diff) {
      auto d = diff_bigtable(table);
      for (const auto& m : d.mismatches) std::cout << "mismatch " << m << "\n";
      for (const auto& g : bigtable_coverage_gaps(table)) std::cout << "uncovered " << g << "\n";
      std::cout << d.matching << "/" << d.cells << " cells match\n";
      if (d.matching != d.cells || !bigtable_coverage_gaps(table).empty()) rc = kVerifyFailed;
    } else {
      std::cout << bigtable_text(table, format);
    }
  } else if (tt) {
    auto verdicts = verify_table_tt();
    if (diff) {
      int ok = 0;
      for (const auto& v : verdicts) {
        if (v.verified) ++ok;
        else std::cout << "failed " << v.row.label() << "\n";
        for (const auto& c : v.checks) {
          for (Subset s : c.ignored) {
            std::cout << "note " << v.row.label() << ": listed support " << s.to_string()
                      << " is not a subgee (n=" << c.n << ")\n";
          }
        }
      }
      std::cout << ok << "/" << verdicts.size() << " rows verified\n";
      if (ok != static_cast<int>(verdicts.size())) rc = kVerifyFailed;
    } else {
      std::cout << table_tt_text(verdicts, format);
    }
  } else if (betti_n) {
    if (*betti_n < 4 || *betti_n > 8) throw InvalidInput("--betti supports 4 <= n <= 8");
    std::cout << betti_text(enumerate_codes(*betti_n).codes, format);
  } else {
    auto code = parse_code(relations, std::nullopt);
    CohomologyPresentation pres(code);
    const int d = degree.value_or(pres.m());
    if (d < 0 || d > pres.m()) throw InvalidInput("degree outside [0, m]");
    std::cout << relation_matrix_text(pres, d, format);
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genetic codes, cohomology and topological-complexity certificates of planar polygon spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* code = app.add_subcommand("code", "Genetic code of a length vector");
  std::string lengths_pos, lengths_opt, code_format = "text";
  code->add_option("vector", lengths_pos, "comma-separated lengths, e.g. 1,1,1,1,1,1,1");
  code->add_option("--lengths", lengths_opt, "same as the positional argument");
  code->add_option("--format", code_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* validate = app.add_subcommand("validate", "Check a candidate genetic code");
  std::string candidate;
  std::optional<int> validate_n;
  validate->add_option("code", candidate, "e.g. 7521,763")->required();
  validate->add_option("--n", validate_n, "ambient n when it cannot be inferred");

  auto* enumerate = app.add_subcommand("enumerate", "List all genetic codes for n-gons");
  int enum_n = 0, jobs = 1;
  bool allow_n9 = false, list = false;
  std::string out;
  enumerate->add_option("--n", enum_n, "number of sides")->required();
  enumerate->add_flag("--allow-n9", allow_n9, "permit n = 9");
  enumerate->add_flag("--list", list, "print every code");
  enumerate->add_option("--out", out, "store directory");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* certify = app.add_subcommand("certify", "Search for a TC >= 2n-6 certificate");
  std::string cert_code, cert_lengths, verify_path, cert_format = "text";
  std::optional<int> cert_n;
  std::uint64_t budget = CertifyOptions{}.budget;
  certify->add_option("--code", cert_code, "genetic code, e.g. 765");
  certify->add_option("--lengths", cert_lengths, "length vector");
  certify->add_option("--n", cert_n, "certify every code for this n");
  certify->add_option("--verify", verify_path, "re-check a stored certificate");
  certify->add_option("--budget", budget, "general-search budget (pairing evaluations)");
  certify->add_option("--out", out, "store directory");
  certify->add_option("--jobs", jobs, "worker threads for --n")->check(CLI::PositiveNumber);
  certify->add_option("--format", cert_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* tables = app.add_subcommand("tables", "Reproduce the reference tables");
  bool tt = false, big = false, diff = false;
  std::optional<int> betti_n, degree;
  std::string relations, table_format = "md";
  tables->add_flag("--tt", tt, "the table of explicit psi");
  tables->add_flag("--big", big, "the table of x marks for <n, a+b+c, a+b, a>");
  tables->add_option("--betti", betti_n, "Betti numbers of every code for this n");
  tables->add_option("--relations", relations, "relation matrix of a code");
  tables->add_option("--degree", degree, "degree for --relations (default m)");
  tables->add_flag("--diff", diff, "compare with the bundled reference");
  tables->add_option("--format", table_format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (code->parsed()) {
      const std::string text = !lengths_opt.empty() ? lengths_opt : lengths_pos;
      if (text.empty()) throw InvalidInput("give a length vector");
      return cmd_code(text, code_format);
    }
    if (validate->parsed()) return cmd_validate(candidate, validate_n);
    if (enumerate->parsed()) return cmd_enumerate(enum_n, allow_n9, out, jobs, list);
    if (certify->parsed()) {
      CertifyOptions opts;
      opts.budget = budget;
      const int sources = int(!cert_code.empty()) + int(!cert_lengths.empty()) +
                          int(cert_n.has_value()) + int(!verify_path.empty());
      if (sources != 1) throw InvalidInput("give exactly one of --code, --lengths, --n, --verify");
      if (!verify_path.empty()) return cmd_verify(verify_path);
      if (cert_n) return cmd_certify_all(*cert_n, opts, jobs, out);
      if (!cert_lengths.empty()) {
        auto lengths = parse_lengths(cert_lengths);
        return cmd_certify_one(genetic_code(lengths), lengths, opts, out, cert_format);
      }
      return cmd_certify_one(parse_code(cert_code, std::nullopt), std::nullopt, opts, out, cert_format);
    }
    if (tables->parsed()) return cmd_tables(tt, big, betti_n, relations, degree, diff, table_format);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
