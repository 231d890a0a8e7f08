#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ordkit/fuchsian.hpp"
#include "ordkit/reconstruct.hpp"

using namespace ordkit;

TEST_CASE("round zero is the pinned ten point configuration") {
  auto gens = reconstruct_by_generations(0);
  REQUIRE(gens.order.size() == 10);
  REQUIRE(gens.born.size() == 10);
  const char* words[] = {"e",      "al.be",  "al.be.al", "al.be2", "al.be2.al",
                         "al",     "be",     "be.al",    "be2",    "be2.al"};
  for (size_t i = 0; i < 10; ++i) {
    CHECK(gens.order[i] == psl2z_parse(words[i]));
    CHECK(gens.born[i] == 0);
  }
}

TEST_CASE("population counts per round") {
  CHECK(reconstruct_by_generations(1).order.size() == 42);
  auto gens = reconstruct_by_generations(2);
  CHECK(gens.order.size() == 138);
  int counts[3] = {0, 0, 0};
  for (int b : gens.born) {
    REQUIRE(b >= 0);
    REQUIRE(b <= 2);
    ++counts[b];
  }
  CHECK(counts[0] == 10);
  CHECK(counts[1] == 32);
  CHECK(counts[2] == 96);
}

TEST_CASE("earlier rounds embed order preserving into later ones") {
  auto g1 = reconstruct_by_generations(1);
  auto g2 = reconstruct_by_generations(2);
  std::vector<PSL2ZElement> filtered;
  for (size_t i = 0; i < g2.order.size(); ++i)
    if (g2.born[i] <= 1) filtered.push_back(g2.order[i]);
  REQUIRE(filtered.size() == g1.order.size());
  for (size_t i = 0; i < filtered.size(); ++i) CHECK(filtered[i] == g1.order[i]);
}

TEST_CASE("symbolic order equals the boundary geometry") {
  auto rep = deformed_rep();
  for (int depth : {1, 2}) {
    auto gens = reconstruct_by_generations(depth);
    auto cfg = orbit_config(rep, gens.order);
    REQUIRE(cfg.points.size() == gens.order.size());
    for (size_t i = 0; i < gens.order.size(); ++i) CHECK(cfg.points[i].g == gens.order[i]);
  }
}

TEST_CASE("reconstruction is deterministic") {
  auto a = reconstruct_by_generations(2);
  auto b = reconstruct_by_generations(2);
  REQUIRE(a.order.size() == b.order.size());
  for (size_t i = 0; i < a.order.size(); ++i) {
    CHECK(a.order[i] == b.order[i]);
    CHECK(a.born[i] == b.born[i]);
  }
}

TEST_CASE("all reconstructed words are distinct") {
  auto gens = reconstruct_by_generations(2);
  std::set<std::string> keys;
  for (const auto& g : gens.order) CHECK(keys.insert(g.key()).second);
}
