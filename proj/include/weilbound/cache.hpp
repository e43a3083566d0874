#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace weilbound {

/// Writes `content` to a sibling temp file and renames it over `path`, so
/// readers see either the old file or the complete new one.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

/// On-disk artifact cache: one file per key, named by the digest of the key.
/// The key itself is stored as the first line and checked on load.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& artifact) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace weilbound
