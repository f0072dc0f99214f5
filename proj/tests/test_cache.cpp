#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "exalg/cache.hpp"
#include "exalg/errors.hpp"

using namespace exalg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("exalg-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("blake2b") {
  CHECK(blake2b_hex("").size() == 64);
  CHECK(blake2b_hex("abc") == blake2b_hex("abc"));
  CHECK(blake2b_hex("abc") != blake2b_hex("abd"));
}

TEST_CASE("build, info, clean") {
  TempDir d;
  CHECK_THROWS_AS(cache_info(d.path), CacheError);
  CacheInfo a = cache_build(d.path);
  CHECK(a.convention_version == kConventionVersion);
  auto stamp = fs::last_write_time(cache_file(d.path));
  CacheInfo b = cache_build(d.path);
  CHECK(a.content_hash == b.content_hash);
  CHECK(fs::last_write_time(cache_file(d.path)) == stamp);
  CHECK(cache_info(d.path).content_hash == a.content_hash);
  CHECK(cache_clean(d.path));
  CHECK_FALSE(cache_clean(d.path));
  CHECK_FALSE(fs::exists(cache_file(d.path)));
}

TEST_CASE("tampering is detected") {
  TempDir d;
  cache_build(d.path);
  std::string text;
  {
    std::ifstream in(cache_file(d.path));
    std::getline(in, text);
  }
  auto pos = text.find("\"structure_constants\":[");
  REQUIRE(pos != std::string::npos);
  pos += 23;
  text[pos] = text[pos] == '0' ? '1' : '0';
  {
    std::ofstream out(cache_file(d.path), std::ios::trunc);
    out << text << "\n";
  }
  CHECK_THROWS_AS(cache_info(d.path), CacheError);
  CHECK_THROWS_AS(cache_build(d.path), CacheError);
  CHECK_THROWS_AS(load_group(d.path), CacheError);
}

TEST_CASE("loaded group matches a fresh build") {
  TempDir d;
  E7Group g = load_group(d.path);
  CHECK(fs::exists(cache_file(d.path)));
  const E7Group& ref = E7Group::instance();
  CHECK(g.structure_constants().table == ref.structure_constants().table);
  CHECK(g.rep().weights == ref.rep().weights);
  CHECK(g.theta() == ref.theta());
  CHECK(g.compute_Q(1).table_row() == "A5A1T1U15");
}
