#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "pong/errors.hpp"
#include "pong/suites.hpp"
#include "pong/table_cache.hpp"

using namespace pong;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("pong-cache-test-" + std::to_string(std::random_device{}()));
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::trunc);
  out << text;
}

}  // namespace

TEST_CASE("structure table contents") {
  const PongTable t = build_pong_table({3, 1}, 2);
  CHECK(t.generators == enumerate_generators({3, 1}, 2));
  REQUIRE(t.differentials.size() == t.generators.size());
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    CHECK(t.differentials[i] == diff(PongElement::generator(t.generators[i])));
  }
  for (const auto& p : t.products) {
    const auto term = multiply_generators(t.generators[p.left], t.generators[p.right]);
    REQUIRE(term);
    CHECK(term->generator == p.generator);
    CHECK(term->monomial == p.monomial);
  }
  CHECK(pong_table_from_json(to_json(t)) == t);

  const AsteroidsTable a = build_asteroids_table({3, 2}, 2);
  CHECK(asteroids_table_from_json(to_json(a)) == a);
}

TEST_CASE("tables with wrong stored data are rejected") {
  Json j = to_json(build_pong_table({3, 1}, 1));
  j["generators"][0]["maslov"] = 7;
  CHECK_THROWS_AS(pong_table_from_json(j), InvalidArgument);
  Json k = to_json(build_pong_table({3, 1}, 1));
  k["products"][0]["left"] = 10000;
  CHECK_THROWS_AS(pong_table_from_json(k), InvalidArgument);
  CHECK_THROWS_AS(asteroids_table_from_json(to_json(build_pong_table({3, 1}, 1))), InvalidArgument);
}

TEST_CASE("cache hit, corruption and version mismatch") {
  TempDir dir;
  std::ostringstream warnings;
  TableCache cache(dir.path, &warnings);
  const auto file = cache.path_for("pong", {3, 1}, 2);
  CHECK(file.filename() == "pong-m3-k1-d2.json");

  const PongTable built = cache.pong({3, 1}, 2);
  CHECK(cache.rebuilds() == 1);
  REQUIRE(std::filesystem::exists(file));
  const std::string original = read_file(file);

  CHECK(cache.pong({3, 1}, 2) == built);
  CHECK(cache.hits() == 1);
  CHECK(warnings.str().empty());

  // Truncated file.
  write_file(file, original.substr(0, original.size() / 2));
  CHECK(cache.pong({3, 1}, 2) == built);
  CHECK(cache.rebuilds() == 2);
  CHECK(warnings.str().find("warning") != std::string::npos);
  CHECK(read_file(file) == original);

  // A valid document whose contents no longer match the checksum.
  Json doc = parse_json(original);
  doc["table"]["products"][0]["monomial"][1] = 5;
  write_file(file, dump(doc));
  CHECK(cache.pong({3, 1}, 2) == built);
  CHECK(cache.rebuilds() == 3);

  // Another format version is never trusted.
  doc = parse_json(original);
  doc["format_version"] = TableCache::kFormatVersion + 1;
  write_file(file, dump(doc));
  CHECK(cache.pong({3, 1}, 2) == built);
  CHECK(cache.rebuilds() == 4);
  CHECK(read_file(file) == original);

  // No temporary files are left behind.
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir.path)) files += e.is_regular_file();
  CHECK(files == 1);
}

TEST_CASE("cached suites report the same results") {
  TempDir dir;
  TableCache cache(dir.path);
  for (const std::string suite : {"dga", "asteroids"}) {
    CAPTURE(suite);
    const auto plain = run_suite(suite, {3, 2}, 3);
    const auto first = run_suite(suite, {3, 2}, 3, 2, &cache);
    const auto second = run_suite(suite, {3, 2}, 3, 2, &cache);
    CHECK(plain.passed());
    CHECK(dump(to_json(first, false)) == dump(to_json(plain, false)));
    CHECK(dump(to_json(second, false)) == dump(to_json(plain, false)));
  }
  CHECK(cache.hits() == 2);
  CHECK(cache.rebuilds() == 2);
}
