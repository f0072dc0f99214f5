#include "exalg/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>
#include <sodium.h>

#include "exalg/errors.hpp"

namespace exalg {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path default_cache_dir() {
  if (const char* d = std::getenv("EXALG_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "exalg";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "exalg";
  return fs::temp_directory_path() / "exalg";
}

fs::path cache_file(const fs::path& dir) { return dir / "e7-chevalley.json"; }

std::string blake2b_hex(const std::string& data) {
  if (sodium_init() < 0) throw CacheError("libsodium initialisation failed");
  unsigned char out[crypto_generichash_BYTES];
  crypto_generichash(out, sizeof out, reinterpret_cast<const unsigned char*>(data.data()), data.size(), nullptr, 0);
  char hex[2 * crypto_generichash_BYTES + 1];
  sodium_bin2hex(hex, sizeof hex, out, sizeof out);
  return hex;
}

std::string root_order_hash(const RootSystemE7& rs) {
  std::string joined;
  for (const auto& r : rs.roots()) joined += root_string(r) + "\n";
  return blake2b_hex(joined);
}

namespace {

json payload_of(const StructureConstants& sc, const Rep56& rep) {
  json p;
  p["structure_constants"] = sc.table;
  json weights = json::array();
  for (const auto& w : rep.weights) weights.push_back(w);
  p["rep56"]["weights"] = weights;
  p["rep56"]["level"] = rep.level;
  json gens = json::array();
  for (const auto& g : rep.gens) gens.push_back({{"row", g.row}, {"val", g.val}});
  p["rep56"]["gens"] = gens;
  return p;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  CacheInfo info;
  json payload;
};

Loaded load_verified(const fs::path& dir) {
  fs::path path = cache_file(dir);
  if (!fs::exists(path)) throw CacheError("no cache at " + path.string());
  std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CacheError("unreadable cache " + path.string() + ": " + e.what());
  }
  Loaded l;
  l.info.path = path;
  l.info.bytes = text.size();
  try {
    l.info.convention_version = doc.at("header").at("convention_version").get<std::string>();
    l.info.root_order_hash = doc.at("header").at("root_order_hash").get<std::string>();
    l.info.content_hash = doc.at("header").at("content_hash").get<std::string>();
    l.payload = doc.at("payload");
  } catch (const json::exception& e) {
    throw CacheError("malformed cache header in " + path.string() + ": " + e.what());
  }
  if (l.info.convention_version != kConventionVersion)
    throw CacheError("cache " + path.string() + " has convention " + l.info.convention_version);
  if (l.info.root_order_hash != root_order_hash(e7()))
    throw CacheError("root order hash mismatch in " + path.string());
  if (blake2b_hex(l.payload.dump()) != l.info.content_hash)
    throw CacheError("content hash mismatch in " + path.string());
  return l;
}

}  // namespace

CacheInfo cache_build(const fs::path& dir) {
  const auto& G = E7Group::instance();
  json payload = payload_of(G.structure_constants(), G.rep());
  json doc;
  doc["header"] = {{"convention_version", kConventionVersion},
                   {"root_order_hash", root_order_hash(G.roots())},
                   {"content_hash", blake2b_hex(payload.dump())}};
  doc["payload"] = payload;
  std::string text = doc.dump() + "\n";
  fs::path path = cache_file(dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CacheError("cannot create " + dir.string() + ": " + ec.message());
  bool write = !fs::exists(path);
  if (!write && read_file(path) != text) {
    cache_info(dir);  // a tampered or foreign file fails here and is left in place
    write = true;
  }
  if (write) {
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw CacheError("cannot write " + tmp.string());
      out << text;
      if (!out) throw CacheError("short write to " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) throw CacheError("cannot rename into " + path.string() + ": " + ec.message());
  }
  return cache_info(dir);
}

CacheInfo cache_info(const fs::path& dir) { return load_verified(dir).info; }

bool cache_clean(const fs::path& dir) {
  std::error_code ec;
  bool removed = fs::remove(cache_file(dir), ec);
  if (ec) throw CacheError("cannot remove " + cache_file(dir).string() + ": " + ec.message());
  return removed;
}

E7Group load_group(const fs::path& dir) {
  if (!fs::exists(cache_file(dir))) cache_build(dir);
  Loaded l = load_verified(dir);
  const auto& rs = e7();
  try {
    StructureConstants sc;
    sc.n_roots = static_cast<int>(rs.roots().size());
    sc.table = l.payload.at("structure_constants").get<std::vector<int>>();
    Rep56 rep;
    for (const auto& w : l.payload.at("rep56").at("weights")) rep.weights.push_back(w.get<Weight>());
    rep.level = l.payload.at("rep56").at("level").get<std::vector<int>>();
    for (const auto& g : l.payload.at("rep56").at("gens")) {
      MonomialMap m;
      m.row = g.at("row").get<std::array<int, kRepDim>>();
      m.val = g.at("val").get<std::array<int, kRepDim>>();
      rep.gens.push_back(m);
    }
    if (sc.table.size() != static_cast<std::size_t>(sc.n_roots * sc.n_roots) || rep.weights.size() != kRepDim ||
        rep.gens.size() != rs.roots().size())
      throw CacheError("cache payload has the wrong shape");
    return E7Group(rs, std::move(sc), std::move(rep));
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed cache payload: ") + e.what());
  }
}

}  // namespace exalg
