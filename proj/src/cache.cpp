#include "parastab/cache.hpp"

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <openssl/evp.h>

namespace parastab::cache {

using nlohmann::json;
namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

namespace {

json key_of(const ParabolicData& pd) {
  const RootSystem& rs = pd.roots();
  return {{"type", std::string(1, static_cast<char>(rs.type().family()))},
          {"rank", rs.rank()},
          {"levi", pd.levi().labels(rs.rank())}};
}

}  // namespace

fs::path entry_path(const fs::path& dir, const ParabolicData& pd) {
  const RootSystem& rs = pd.roots();
  std::string name = "schubert_" + rs.type().name() + "_S";
  const auto labels = pd.levi().labels(rs.rank());
  if (labels.empty()) name += "none";
  for (std::size_t i = 0; i < labels.size(); ++i) name += (i ? "-" : "") + std::to_string(labels[i]);
  return dir / (name + ".json");
}

json serialize(const ChowBasis& cb) {
  const RootSystem& rs = cb.parabolic().roots();
  json lengths = json::array(), words = json::array(), edges = json::array();
  for (std::size_t w = 0; w < cb.size(); ++w) {
    lengths.push_back(cb.length(w));
    words.push_back(cb.word(w));
  }
  for (const HasseEdge& e : cb.edges())
    edges.push_back({e.from, e.to, rs.root(e.gamma).coords});
  json payload = {{"lengths", lengths}, {"words", words}, {"edges", edges}};
  return {{"format", "parastab-schubert-basis"},
          {"version", kCacheVersion},
          {"key", key_of(cb.parabolic())},
          {"payload", payload},
          {"checksum", sha256_hex(payload.dump())}};
}

ChowBasis deserialize(std::shared_ptr<const ParabolicData> pd, const json& doc) {
  try {
    if (doc.at("format") != "parastab-schubert-basis" || doc.at("version") != kCacheVersion)
      throw InputError("cache entry has an unknown format");
    if (doc.at("key") != key_of(*pd)) throw InputError("cache entry key mismatch");
    const json& payload = doc.at("payload");
    if (doc.at("checksum").get<std::string>() != sha256_hex(payload.dump()))
      throw InputError("cache entry checksum mismatch");
    auto words = payload.at("words").get<std::vector<std::vector<int>>>();
    auto lengths = payload.at("lengths").get<std::vector<int>>();
    std::vector<HasseEdge> edges;
    for (const json& e : payload.at("edges")) {
      Root gamma{e.at(2).get<IntVec>()};
      edges.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                       pd->roots().index_of(gamma)});
    }
    return ChowBasis::from_parts(std::move(pd), std::move(words), std::move(lengths),
                                 std::move(edges));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed cache entry: ") + e.what());
  }
}

std::optional<ChowBasis> load(const fs::path& dir, std::shared_ptr<const ParabolicData> pd) {
  const fs::path path = entry_path(dir, *pd);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json doc = json::parse(in);
    return deserialize(std::move(pd), doc);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store(const fs::path& dir, const ChowBasis& cb) {
  fs::create_directories(dir);
  const fs::path target = entry_path(dir, cb.parabolic());
  std::random_device rd;
  const fs::path tmp =
      target.string() + ".tmp" + std::to_string(rd()) + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << serialize(cb).dump();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

BasisProvider provider(fs::path dir, std::size_t cap) {
  return [dir = std::move(dir), cap](std::shared_ptr<const ParabolicData> pd) {
    if (auto hit = load(dir, pd)) return std::make_shared<const ChowBasis>(std::move(*hit));
    auto built = std::make_shared<const ChowBasis>(ChowBasis::build(pd, cap));
    try {
      store(dir, *built);
    } catch (const std::exception&) {
      // Best-effort: an unwritable directory leaves the cache cold.
    }
    return built;
  };
}

}  // namespace parastab::cache
