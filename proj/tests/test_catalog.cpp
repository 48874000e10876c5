#include "multloop/algebra_catalog.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace multloop;
using namespace multloop::liealg;

namespace {

bool entries_equal(const CatalogEntry& a, const CatalogEntry& b) {
  if (a.name != b.name || a.dim != b.dim || a.stub != b.stub || a.note != b.note) return false;
  if (a.stub) return true;
  if (!(*a.algebra == *b.algebra)) return false;
  return a.algebra->params() == b.algebra->params();
}

} // namespace

TEST_CASE("catalog contents") {
  CHECK(catalog_entry("l2").dim == 2);
  CHECK(catalog_entry("g5_17").stub);
  CHECK(catalog_entry("g4_8").stub);
  CHECK_THROWS_AS(catalog_algebra("g5_17"), std::runtime_error);
  CHECK_THROWS_AS(catalog_entry("nope"), std::out_of_range);
  CHECK(catalog_algebra("mult6").params().at("a") == Rat(1));
  CHECK(catalog_algebra("mult7").params().at("b") == Rat(2));
  CHECK(catalog_algebra("prop5_g3") == catalog_algebra("g5_38"));

  int stubs = 0, real = 0;
  for (const auto& e : algebra_catalog()) (e.stub ? stubs : real)++;
  CHECK(real >= 20);
  CHECK(stubs >= 30);
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(g5_33(Rat(0), Rat(0)), std::invalid_argument);
  CHECK_NOTHROW(g5_33(Rat(0), Rat(2)));
  CHECK_THROWS_AS(mult6_alg(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(mult6_alg(Rat(-1)), std::invalid_argument);
  CHECK_THROWS_AS(mult7_alg(Rat(2), Rat(2)), std::invalid_argument);
  CHECK_THROWS_AS(mult7_alg(Rat(0), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(mult8_alg(Rat(0)), std::invalid_argument);
}

TEST_CASE("catalog text round-trips losslessly") {
  const auto& cat = algebra_catalog();
  std::string text = catalog_to_text(cat);
  std::vector<CatalogEntry> parsed = catalog_from_text(text);
  REQUIRE(parsed.size() == cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    INFO(cat[i].name);
    CHECK(entries_equal(cat[i], parsed[i]));
  }
  // print(parse(print)) is a fixed point
  CHECK(catalog_to_text(parsed) == text);
}

TEST_CASE("catalog text grammar corners") {
  auto entries = catalog_from_text("# comment\n\nfoo; 3; [1,2,3]=-5/3; params a=2/7\n");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].algebra->c(0, 1, 2) == Rat(-5, 3));
  CHECK(entries[0].algebra->c(1, 0, 2) == Rat(5, 3));
  CHECK(entries[0].algebra->params().at("a") == Rat(2, 7));
  CHECK_THROWS_AS(catalog_from_text("bad\n"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_from_text("x; 3; [1,2]=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_from_text("x; 3; relations-not-in-paper; [1,2,3]=1\n"),
                  std::invalid_argument);
}

TEST_CASE("shipped data file matches the builtin catalog") {
  std::ifstream in(std::string(MULTLOOP_DATA_DIR) + "/algebras.cat", std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == catalog_to_text(algebra_catalog()));
}
