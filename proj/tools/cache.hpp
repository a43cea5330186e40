#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace gelfand::cli {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

/// Text blobs keyed by a hash of (subcommand, arguments, version).
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, bool enabled);

  std::optional<std::string> load(const std::string& key) const;
  /// Writes to a temporary file in the same directory, then renames it.
  void store(const std::string& key, const std::string& text) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  bool enabled_;
};

/// $GELFAND_CACHE_DIR, else $XDG_CACHE_HOME/gelfand, else ~/.cache/gelfand.
std::filesystem::path default_cache_dir();

}  // namespace gelfand::cli
