#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ordkit/group.hpp"
#include "ordkit/oracle.hpp"
#include "ordkit/realization.hpp"

using namespace ordkit;

TEST_CASE("placement walks outward by unit steps and bisects gaps") {
  auto g = make_rational_group({Rat(1)});
  auto nat = make_rational_oracle();
  // enumeration e, 2, 1: 0 -> base, 2 -> new max at 1, 1 -> midpoint 1/2
  std::vector<Element> enumeration = {Element{Rat(0)}, Element{Rat(2)}, Element{Rat(1)}};
  auto R = build_realization(g, nat, enumeration);
  CHECK(R.value_of(Element{Rat(0)}) == Dyadic(0));
  CHECK(R.value_of(Element{Rat(2)}) == Dyadic(1));
  CHECK(R.value_of(Element{Rat(1)}).to_rat() == Rat(1, 2));
  CHECK_THROWS_AS(R.value_of(Element{Rat(7)}), std::out_of_range);
  CHECK(R.contains(Element{Rat(1)}));
  CHECK(!R.contains(Element{Rat(7)}));

  // the graded enumeration of Z lands on the integers
  auto z = make_z();
  auto Rz = build_realization(z, make_zsum_oracle(), ball_enumerate(z, 3));
  for (int v = -3; v <= 3; ++v)
    CHECK(Rz.value_of(z.parse(std::to_string(v))) == Dyadic(v));
}

TEST_CASE("a custom base point shifts the whole picture") {
  auto z = make_z();
  auto R = build_realization(z, make_zsum_oracle(), ball_enumerate(z, 2), Dyadic(Int(1), 2));
  CHECK(R.value_of(z.parse("0")).to_rat() == Rat(1, 4));
  CHECK(R.value_of(z.parse("1")).to_rat() == Rat(5, 4));
}

TEST_CASE("duplicates and a misplaced identity are rejected") {
  auto g = make_rational_group({Rat(1)});
  auto nat = make_rational_oracle();
  std::vector<Element> dup = {Element{Rat(0)}, Element{Rat(1)}, Element{Rat(1)}};
  CHECK_THROWS_AS(build_realization(g, nat, dup), std::invalid_argument);
  std::vector<Element> no_id = {Element{Rat(1)}, Element{Rat(0)}};
  CHECK_THROWS_AS(build_realization(g, nat, no_id), std::invalid_argument);
}

TEST_CASE("values embed the order: exhaustive pairwise check") {
  auto g = make_b3();
  auto dd = make_dd_oracle();
  auto R = build_realization(g, dd, ball_enumerate(g, 4));
  auto chk = order_embedding_check(R, g, dd);
  CHECK(chk.ok);
  CHECK(chk.pairs == R.elements.size() * (R.elements.size() - 1) / 2);
  CHECK(chk.mismatches == 0);

  // sabotage one value; the sweep must notice
  auto bad = R;
  bad.values[5] = bad.values[8];
  auto chk2 = order_embedding_check(bad, g, dd);
  CHECK(!chk2.ok);
  CHECK(chk2.mismatches > 0);
  CHECK(!chk2.first_witness.empty());

  // serial and parallel sweeps report identically
  auto s = order_embedding_check(bad, g, dd, Exec::Serial);
  auto p = order_embedding_check(bad, g, dd, Exec::Parallel);
  CHECK(s.mismatches == p.mismatches);
  CHECK(s.first_witness == p.first_witness);
}

TEST_CASE("left translation acts monotonically on realized values") {
  auto g = make_b3();
  auto dd = make_dd_oracle();
  auto R = build_realization(g, dd, ball_enumerate(g, 4));
  for (const char* name : {"a", "b", "B", "ab"}) {
    auto pm = partial_action(R, g, g.parse(name));
    CHECK(pm.monotone);
    CHECK(pm.graph.size() > 10);
    for (size_t i = 0; i + 1 < pm.graph.size(); ++i) {
      CHECK(pm.graph[i].first < pm.graph[i + 1].first);
      CHECK(pm.graph[i].second < pm.graph[i + 1].second);
    }
  }
}

TEST_CASE("gap spectrum of the integer line is flat") {
  auto z = make_z();
  auto R = build_realization(z, make_zsum_oracle(), ball_enumerate(z, 4));
  // 9 values, central half keeps ranks [2, 7): -2 .. 2
  auto rep = gap_spectrum(R);
  CHECK(rep.window_begin == 2);
  CHECK(rep.window_end == 7);
  REQUIRE(rep.gaps.size() == 4);
  for (const auto& gp : rep.gaps) CHECK(gp == Rat(1));
  CHECK(rep.max_gap == Rat(1));

  // member accounting: even integers inside the window
  std::function<bool(const Element&)> member = [](const Element& e) {
    return std::get<ZSumElement>(e).coord(0) % 2 == 0;
  };
  auto rep2 = gap_spectrum(R, Rat(1, 2), &member);
  CHECK(rep2.has_members);
  CHECK(rep2.member_count == 5);       // -4, -2, 0, 2, 4 across the whole sample
  CHECK(rep2.inside_count == 7);       // ranks strictly between the member extremes
  CHECK(!rep2.inside_members_only);    // odd integers sit inside

  // two adjacent integers are convex in the sample: nothing fits between
  std::function<bool(const Element&)> tight = [](const Element& e) {
    long long c = std::get<ZSumElement>(e).coord(0);
    return c == 3 || c == 4;
  };
  auto rep3 = gap_spectrum(R, Rat(1, 2), &tight);
  CHECK(rep3.member_count == 2);
  CHECK(rep3.inside_count == 0);
  CHECK(rep3.inside_members_only);
}

TEST_CASE("convexity verdicts for braid subgroups") {
  auto g = make_b3();
  auto dd = make_dd_oracle();
  CHECK(convexity_check(g, dd, g.subgroups.at("sigma2"), 5).empty());
  auto center = convexity_check(g, dd, g.subgroups.at("center"), 2);
  CHECK(!center.empty()); // a sits between t^-1 and t but is not central
  bool witness_a = false;
  for (const auto& v : center) witness_a |= element_key(v.mid) == element_key(g.parse("a"));
  CHECK(witness_a);
  // serial equals parallel
  auto s = convexity_check(g, dd, g.subgroups.at("center"), 2, Exec::Serial);
  auto p = convexity_check(g, dd, g.subgroups.at("center"), 2, Exec::Parallel);
  REQUIRE(s.size() == p.size());
  for (size_t i = 0; i < s.size(); ++i) {
    CHECK(element_key(s[i].mid) == element_key(p[i].mid));
    CHECK(element_key(s[i].below) == element_key(p[i].below));
    CHECK(element_key(s[i].above) == element_key(p[i].above));
  }
}

TEST_CASE("window gap stays below the generator displacement") {
  auto g = make_b3();
  auto dd = make_dd_oracle();
  auto R = build_realization(g, dd, ball_enumerate(g, 5));
  auto gb = gap_bound_check(R, g, g.gens_for_radius(0));
  CHECK(gb.holds);
  CHECK(gb.max_gap > Rat(0));
  CHECK(gb.max_displacement >= gb.max_gap);
}
