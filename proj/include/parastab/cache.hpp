#pragma once

// On-disk cache of Schubert bases keyed by (type, rank, Levi subset). Files
// are versioned JSON with a SHA-256 checksum of the payload; unreadable or
// corrupted files are rebuilt and rewritten atomically.

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "parastab/stability.hpp"

namespace parastab::cache {

inline constexpr const char* kCacheVersion = "1";

std::filesystem::path entry_path(const std::filesystem::path& dir, const ParabolicData& pd);

nlohmann::json serialize(const ChowBasis& cb);
/// Throws InputError when the document is malformed or fails its checksum.
ChowBasis deserialize(std::shared_ptr<const ParabolicData> pd, const nlohmann::json& doc);

/// Loads the entry if present and valid; nullopt otherwise.
std::optional<ChowBasis> load(const std::filesystem::path& dir,
                              std::shared_ptr<const ParabolicData> pd);
/// Writes to a temporary file in `dir` and renames it into place.
void store(const std::filesystem::path& dir, const ChowBasis& cb);

/// Basis provider reading through the cache in `dir`.
BasisProvider provider(std::filesystem::path dir, std::size_t cap = kDefaultCap);

std::string sha256_hex(const std::string& data);

}  // namespace parastab::cache
