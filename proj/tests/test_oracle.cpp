#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "ordkit/group.hpp"
#include "ordkit/oracle.hpp"

using namespace ordkit;

TEST_CASE("distinguished braid order passes the order axioms") {
  auto g = make_b3();
  auto dd = make_dd_oracle();
  CHECK(check_order_axioms(g, dd, 4).ok());
  CHECK(check_left_invariance(g, dd, 3).ok());
}

TEST_CASE("axiom checker catches broken oracles") {
  auto g = make_b3();
  SignOracle constant{"b3", "always-positive", [](const Element&) { return 1; }};
  auto rep = check_order_axioms(g, constant, 2);
  CHECK(!rep.ok());
  bool saw_inverse = false;
  for (const auto& v : rep.violations) saw_inverse |= v.kind == "inverse";
  CHECK(saw_inverse);

  // antisymmetric but not closed: the y = +-1 rows carry flipped signs, so
  // (0,-1) and (0,-1) are both positive while their product (0,-2) is not
  SignOracle bad{"z2", "bad", [](const Element& e) {
                   const auto& z = std::get<ZSumElement>(e);
                   long long y = z.coord(1);
                   if (y == 1 || y == -1) return y > 0 ? -1 : 1;
                   if (y != 0) return y > 0 ? 1 : -1;
                   return z.coord(0) > 0 ? 1 : -1;
                 }};
  auto rep2 = check_order_axioms(make_z2(), bad, 2);
  CHECK(!rep2.ok());
  bool saw_product = false;
  for (const auto& v : rep2.violations) saw_product |= v.kind == "product";
  CHECK(saw_product);
}

TEST_CASE("serial and parallel axiom sweeps agree violation by violation") {
  auto g = make_b3();
  SignOracle constant{"b3", "always-positive", [](const Element&) { return 1; }};
  auto a = check_order_axioms(g, constant, 3, Exec::Serial);
  auto b = check_order_axioms(g, constant, 3, Exec::Parallel);
  CHECK(a.pairs_checked == b.pairs_checked);
  REQUIRE(a.violations.size() == b.violations.size());
  CHECK(!a.violations.empty());
  for (size_t i = 0; i < a.violations.size(); ++i) {
    CHECK(a.violations[i].kind == b.violations[i].kind);
    CHECK(a.violations[i].lhs == b.violations[i].lhs);
    CHECK(a.violations[i].rhs == b.violations[i].rhs);
  }
}

TEST_CASE("rational oracle is the order of the number line") {
  auto g = make_rational_group({Rat(1, 2), Rat(1, 3)});
  auto nat = make_rational_oracle();
  CHECK(nat.sign(Element{Rat(1, 6)}) == 1);
  CHECK(nat.sign(Element{Rat(-5, 6)}) == -1);
  CHECK_THROWS_AS(nat.sign(Element{Rat()}), std::invalid_argument);
  CHECK(check_order_axioms(g, nat, 3).ok());
  auto rev = make_rational_oracle(true);
  CHECK(rev.sign(Element{Rat(1, 6)}) == -1);
  CHECK(check_order_axioms(g, rev, 3).ok());
}

TEST_CASE("direct-sum oracle reads the top coordinate") {
  auto zo = make_zsum_oracle();
  CHECK(zo.sign(Element{zsum_basis(2, 1)}) == 1);
  CHECK(zo.sign(Element{zsum_basis(2, -7)}) == -1);
  ZSumElement mixed;
  mixed.v = {5, -1}; // top coordinate wins regardless of lower ones
  CHECK(zo.sign(Element{mixed}) == -1);
  CHECK(check_order_axioms(make_zsum(3), zo, 3).ok());
  CHECK(check_left_invariance(make_z2(), zo, 3).ok());
}

TEST_CASE("iterated extension orders: count, distinctness, axioms") {
  auto spec = klein_bottle_spec();
  auto g = make_tararin(spec);
  auto orders = tararin_orders(spec);
  REQUIRE(orders.size() == 4);
  auto ball = ball_enumerate(g, 4);
  std::set<std::string> profiles;
  for (const auto& o : orders) {
    CHECK(check_order_axioms(g, o.oracle, 4).ok());
    std::string p;
    for (size_t i = 1; i < ball.size(); ++i) p += o.oracle.sign(ball[i]) > 0 ? '+' : '-';
    profiles.insert(p);
  }
  CHECK(profiles.size() == 4);
  CHECK(tararin_orders(chain3_spec()).size() == 8);
}

TEST_CASE("lexicographic extension rebuilds the top-coordinate order") {
  auto g = make_z2();
  auto zo = make_zsum_oracle();
  auto member = g.subgroups.at("level_1"); // first coordinate axis
  auto mu = [](const Element& x, const Element& y) {
    long long a = std::get<ZSumElement>(x).coord(1), b = std::get<ZSumElement>(y).coord(1);
    return a < b ? -1 : (a > b ? 1 : 0);
  };
  auto lex = lex_extend(g, zo, member, mu, 2);
  for (const auto& e : ball_enumerate(g, 4)) {
    if (g.is_identity(e)) continue;
    CHECK(lex.sign(e) == zo.sign(e));
  }
}

TEST_CASE("lexicographic extension rejects non-invariant comparators") {
  auto g = make_z2();
  auto zo = make_zsum_oracle();
  auto member = g.subgroups.at("level_1");
  auto bad_mu = [](const Element& x, const Element& y) {
    long long a = std::abs(std::get<ZSumElement>(x).coord(1));
    long long b = std::abs(std::get<ZSumElement>(y).coord(1));
    return a < b ? -1 : (a > b ? 1 : 0);
  };
  CHECK_THROWS_AS(lex_extend(g, zo, member, bad_mu, 2), std::runtime_error);
}
