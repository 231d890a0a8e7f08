#pragma once

#include "ordkit/b3.hpp"
#include "ordkit/psl2z.hpp"
#include "ordkit/rational.hpp"
#include "ordkit/tararin.hpp"
#include "ordkit/zsum.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ordkit {

using Element = std::variant<B3Element, PSL2ZElement, ZSumElement, TararinElement, Rat>;

std::string element_key(const Element& e);

struct GenDef {
  std::string name;
  Element el;
  int weight{1};
};

// Uniform access to one of the concrete groups: multiplication, inversion,
// deterministic ball enumeration, parsing and printing, and named subgroup
// membership predicates for convexity diagnostics.
struct GroupHandle {
  std::string id;
  Element identity;
  std::function<std::vector<GenDef>(int radius)> gens_for_radius;
  std::function<Element(const Element&, const Element&)> mult;
  std::function<Element(const Element&)> inv;
  std::function<std::string(const Element&)> format;
  std::function<Element(const std::string&)> parse;
  std::map<std::string, std::function<bool(const Element&)>> subgroups;

  bool is_identity(const Element& e) const { return element_key(e) == element_key(identity); }
};

// All elements of word weight <= radius over the handle's alphabet, BFS by
// weight level, identity first, deduplicated by normal form; within a level
// the order is (parent position, generator position). ball(r) is a prefix of
// ball(r + 1).
std::vector<Element> ball_enumerate(const GroupHandle& g, int radius);

// First n entries of the weight-graded enumeration (growing the radius as
// needed). Throws if the group cannot supply n distinct elements by
// max_radius.
std::vector<Element> enumerate_n(const GroupHandle& g, size_t n, int max_radius = 64);

GroupHandle make_b3(const std::vector<std::string>& gen_order = {"a", "A", "b", "B"});
GroupHandle make_psl2z(const std::vector<std::string>& gen_order = {"al", "be", "be2"});
GroupHandle make_z();
GroupHandle make_z2();
// Restricted direct sum of K copies of Z with basis alphabet e1..eK.
GroupHandle make_zsum(int k);
// Z[1/2] with the graded alphabet {+-1/2^i, weight i+1}.
GroupHandle make_dyadic_group();
// Cyclic subgroup of Q spanned by the listed rationals.
GroupHandle make_rational_group(const std::vector<Rat>& gens);
GroupHandle make_tararin(const TararinSpec& spec);

GroupHandle make_group_by_name(const std::string& name);

}  // namespace ordkit
