#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordkit/group.hpp"
#include "ordkit/oracle.hpp"
#include "ordkit/rational.hpp"
#include "ordkit/sweep.hpp"

namespace ordkit {

// Order-embedding of a finite enumeration into dyadic rationals. Element 0 of
// the enumeration must be the identity; it lands on x0. Every later element
// is placed by binary search against the already-placed ones: one past the
// current extremes when it is a new minimum/maximum, else the exact midpoint
// of its neighbours.
struct Realization {
  Dyadic x0;
  std::vector<Element> elements;               // insertion order
  std::vector<Dyadic> values;                  // parallel to elements
  std::vector<std::size_t> sorted;             // indices in increasing value order
  std::unordered_map<std::string, std::size_t> pos; // element key -> index

  const Dyadic& value_of(const Element& e) const;
  bool contains(const Element& e) const { return pos.count(element_key(e)) > 0; }
};

Realization build_realization(const GroupHandle& g, const SignOracle& order,
                              const std::vector<Element>& enumeration,
                              Dyadic x0 = Dyadic());

// Graph of the partial map x -> s.x restricted to points whose image is also
// realized. Left invariance of the order makes this strictly monotone.
struct PartialMap {
  std::vector<std::pair<Dyadic, Dyadic>> graph; // sorted by first coordinate
  bool monotone = true;
};

PartialMap partial_action(const Realization& R, const GroupHandle& g, const Element& s);

// Full pairwise consistency: value order must equal oracle order.
struct EmbeddingCheck {
  bool ok = true;
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::string first_witness; // "g | h" for the first disagreeing pair
};

EmbeddingCheck order_embedding_check(const Realization& R, const GroupHandle& g,
                                     const SignOracle& order, Exec exec = default_exec());

// Consecutive gaps inside a central rank window (edges of a finite sample are
// distorted, so the outer (1-frac)/2 of ranks on each side are dropped).
// With a member predicate the report also says whether the realized member
// set is order-convex within the sample.
struct GapReport {
  std::vector<Rat> gaps;   // left to right inside the window
  Rat max_gap;             // 0 when fewer than two window points
  std::size_t window_begin = 0, window_end = 0; // rank range [begin, end)
  bool has_members = false;
  std::size_t member_count = 0;
  std::size_t inside_count = 0;      // sample points strictly between member extremes
  bool inside_members_only = true;   // all such points are members
};

GapReport gap_spectrum(const Realization& R, Rat window_frac = Rat(1, 2),
                       const std::function<bool(const Element&)>* member = nullptr);

// A subgroup H is order-convex iff no outside element sits strictly between
// two members; equivalently none sits strictly between the order-min and
// order-max of H on the sample. Returns every witness triple.
struct ConvexityViolation {
  Element below, mid, above; // below, above in H; mid outside with below < mid < above
};

std::vector<ConvexityViolation> convexity_check(const GroupHandle& g, const SignOracle& order,
                                                const std::function<bool(const Element&)>& member,
                                                int radius, Exec exec = default_exec());

// Window max gap vs. the largest single-generator displacement on the sample.
struct GapBound {
  Rat max_gap;
  Rat max_displacement;
  bool holds = false; // max_gap <= max_displacement
};

GapBound gap_bound_check(const Realization& R, const GroupHandle& g,
                         const std::vector<GenDef>& gens, Rat window_frac = Rat(1, 2));

} // namespace ordkit
