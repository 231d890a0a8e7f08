#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordkit/cones.hpp"
#include "ordkit/group.hpp"
#include "ordkit/oracle.hpp"

using namespace ordkit;

namespace {

// Independent reference: try all +-1 assignments on {g, g^-1} orbit pairs and
// keep those with no visible closure violation. Only usable for tiny balls.
std::set<std::string> brute_force_cones(const GroupHandle& g, int radius,
                                        const std::vector<Element>& required = {}) {
  auto ball = ball_enumerate(g, radius);
  const size_t n = ball.size();
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < n; ++i) index[element_key(ball[i])] = i;

  std::vector<size_t> inv(n);
  for (size_t i = 0; i < n; ++i) inv[i] = index.at(element_key(g.inv(ball[i])));

  std::vector<size_t> reps; // one index per orbit pair, identity excluded
  for (size_t i = 1; i < n; ++i)
    if (i <= inv[i]) reps.push_back(i);
  for (size_t i = 1; i < n; ++i)
    if (inv[i] == i) return {}; // an involution admits no consistent sign

  std::vector<size_t> req_idx;
  for (const auto& r : required) req_idx.push_back(index.at(element_key(r)));

  std::set<std::string> out;
  for (size_t mask = 0; mask < (size_t(1) << reps.size()); ++mask) {
    std::vector<signed char> s(n, 0);
    for (size_t b = 0; b < reps.size(); ++b) {
      signed char v = (mask >> b) & 1 ? 1 : -1;
      s[reps[b]] = v;
      s[inv[reps[b]]] = -v;
    }
    bool ok = true;
    for (size_t r : req_idx) ok &= s[r] == 1;
    for (size_t i = 1; ok && i < n; ++i)
      for (size_t j = 1; ok && j < n; ++j) {
        if (s[i] != 1 || s[j] != 1) continue;
        Element p = g.mult(ball[i], ball[j]);
        auto it = index.find(element_key(p));
        if (it != index.end() && it->second != 0 && s[it->second] != 1) ok = false;
      }
    if (ok) {
      std::string key;
      for (size_t i = 1; i < n; ++i) key += s[i] == 1 ? '+' : '-';
      out.insert(key);
    }
  }
  return out;
}

std::set<std::string> survivor_keys(const ConeSearchResult& res) {
  std::set<std::string> out;
  for (const auto& s : res.survivors) {
    std::string key;
    for (size_t i = 1; i < s.size(); ++i) key += s[i] == 1 ? '+' : '-';
    out.insert(key);
  }
  return out;
}

} // namespace

TEST_CASE("search matches exhaustive filtering on small balls") {
  auto z = make_z();
  CHECK(survivor_keys(enumerate_partial_cones(z, 3)) == brute_force_cones(z, 3));

  auto z2 = make_z2();
  CHECK(survivor_keys(enumerate_partial_cones(z2, 2)) == brute_force_cones(z2, 2));

  auto klein = make_tararin(klein_bottle_spec());
  CHECK(survivor_keys(enumerate_partial_cones(klein, 2)) == brute_force_cones(klein, 2));
}

TEST_CASE("the integers admit exactly the two expected patterns") {
  auto z = make_z();
  auto res = enumerate_partial_cones(z, 4);
  CHECK(res.survivors.size() == 2);
  // seeding -1 positive keeps the reversed order only
  auto rev = enumerate_partial_cones(z, 4, {z.parse("-1")});
  REQUIRE(rev.survivors.size() == 1);
  CHECK(survivor_keys(rev) == brute_force_cones(z, 4, {z.parse("-1")}));
}

TEST_CASE("two-torsion blocks every assignment") {
  auto ps = make_psl2z();
  auto res = enumerate_partial_cones(ps, 1); // contains the involution al
  CHECK(res.survivors.empty());
  CHECK(brute_force_cones(ps, 1).empty());
}

TEST_CASE("required elements must sit inside the ball and off the identity") {
  auto z = make_z();
  CHECK_THROWS_AS(enumerate_partial_cones(z, 2, {z.parse("0")}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partial_cones(z, 2, {z.parse("9")}), std::invalid_argument);
}

TEST_CASE("a starved budget raises instead of returning partial data") {
  auto z2 = make_z2();
  CHECK_THROWS_AS(enumerate_partial_cones(z2, 3, {}, 1), std::runtime_error);
}

TEST_CASE("search is deterministic") {
  auto klein = make_tararin(klein_bottle_spec());
  auto a = enumerate_partial_cones(klein, 3);
  auto b = enumerate_partial_cones(klein, 3);
  REQUIRE(a.survivors.size() == b.survivors.size());
  for (size_t i = 0; i < a.survivors.size(); ++i) CHECK(a.survivors[i] == b.survivors[i]);
  CHECK(a.steps_used == b.steps_used);
}

TEST_CASE("isolation evidence for the distinguished braid order") {
  auto g = make_b3();
  auto dd = make_dd_oracle();
  std::vector<Element> S = {Element{b3_y1()}, Element{b3_y2()}};
  auto ev = isolation_evidence(g, dd, S, 2);
  CHECK(ev.survivor_count == 1);
  CHECK(ev.contains_lambda);
  CHECK(ev.all_agree);
}

TEST_CASE("free abelian contrast: seeding one element never pins the order") {
  auto z2 = make_z2();
  auto zo = make_zsum_oracle();
  auto ev = isolation_evidence(z2, zo, {z2.parse("1,0")}, 3);
  CHECK(ev.survivor_count >= 2);
  CHECK(ev.contains_lambda);
  CHECK(!ev.all_agree);
}
