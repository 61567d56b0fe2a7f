#include "store.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace polytc::store {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

Store::Store(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_);
  const auto idx = root_ / "index.json";
  if (fs::exists(idx)) {
    std::ifstream in(idx);
    index_ = nlohmann::json::parse(in, nullptr, false);
    if (index_.is_discarded() || !index_.is_object()) index_ = nlohmann::json::object();
  }
  if (!index_.contains("entries")) index_["entries"] = nlohmann::json::object();
  if (!index_.contains("counts")) index_["counts"] = nlohmann::json::object();
}

std::string Store::put(const std::string& relative, const nlohmann::json& doc) {
  const std::string text = doc.dump(2) + "\n";
  write_atomic(root_ / relative, text);
  auto d = digest(text);
  index_["entries"][relative] = d;
  return d;
}

void Store::set_count(int n, std::size_t count) { index_["counts"]["n=" + std::to_string(n)] = count; }

void Store::write_manifest(const nlohmann::json& manifest) {
  write_atomic(root_ / "manifest.json", manifest.dump(2) + "\n");
}

void Store::commit() { write_atomic(root_ / "index.json", index_.dump(2) + "\n"); }

}  // namespace polytc::store
