#pragma once

#include <filesystem>
#include <string>

#include "exalg/chevalley.hpp"

namespace exalg {

struct CacheInfo {
  std::filesystem::path path;
  std::string convention_version;
  std::string root_order_hash;
  std::string content_hash;
  std::size_t bytes = 0;
};

// $EXALG_CACHE_DIR, else $XDG_CACHE_HOME/exalg, else ~/.cache/exalg.
std::filesystem::path default_cache_dir();
std::filesystem::path cache_file(const std::filesystem::path& dir);

std::string blake2b_hex(const std::string& data);
std::string root_order_hash(const RootSystemE7& rs);

// Writes atomically (temp file, then rename); rewriting identical content is a no-op.
CacheInfo cache_build(const std::filesystem::path& dir);
// Reads the header and checks every hash; throws CacheError.
CacheInfo cache_info(const std::filesystem::path& dir);
bool cache_clean(const std::filesystem::path& dir);

// Structure constants and Rep56 from a verified cache, building it first when absent.
E7Group load_group(const std::filesystem::path& dir);

}  // namespace exalg
