#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <string>

namespace polytc::store {

std::uint64_t fnv1a64(const std::string& bytes);
std::string digest(const std::string& bytes);  // "fnv1a64:<16 hex digits>"

/// Writes to a sibling temporary file, then renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Directory layout: n=<n>/<code>.json, certs/<code>.json, index.json,
/// manifest.json. The index maps each relative path to its digest and keeps
/// per-n code counts; entries from earlier runs are kept.
class Store {
 public:
  explicit Store(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  /// Writes `doc` (pretty-printed, trailing newline) and records its digest.
  std::string put(const std::string& relative, const nlohmann::json& doc);
  void set_count(int n, std::size_t count);
  void write_manifest(const nlohmann::json& manifest);
  /// Flushes index.json.
  void commit();

 private:
  std::filesystem::path root_;
  nlohmann::json index_;
};

}  // namespace polytc::store
