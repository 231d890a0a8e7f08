#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordkit/moebius.hpp"
#include "ordkit/psl2z.hpp"

namespace ordkit {

// Boundary action of Z2 * Z3 = <al, be> by exact rational Moebius maps.
// "modular" is the standard embedding; "deformed" conjugates the order-3
// generator by [[c,d],[d,c]] with c^2 - d^2 = 1, c > 0, d < 0, which frees
// the action on the orbit of 0.
struct FuchsianRep {
  MoebiusMap alpha, beta;
  std::string kind; // "modular" or "deformed"
  Rat c, d;         // conjugator parameters, deformed only
};

FuchsianRep modular_rep();
FuchsianRep deformed_rep(const Rat& c = Rat(5, 4), const Rat& d = Rat(-3, 4));

// (c, d) pairs known to satisfy the constraints, preferred first.
std::vector<std::pair<Rat, Rat>> deformation_candidates();

// Image of a reduced alternating word under the representation.
MoebiusMap rep_matrix(const FuchsianRep& rep, const PSL2ZElement& g);

struct OrbitPoint {
  PSL2ZElement g;
  BPoint pt;
};

// Orbit of y0, sorted counterclockwise starting at y0. Throws
// std::domain_error when two listed elements hit the same point, naming a
// stabilizer witness (the action is not free on this orbit).
struct OrbitConfig {
  BPoint y0;
  std::vector<OrbitPoint> points;
};

OrbitConfig orbit_config(const FuchsianRep& rep, const std::vector<PSL2ZElement>& elements,
                         BPoint y0 = BPoint(0));

// The ten orbit points of the words of syllable length <= 3 that frame the
// ping-pong pair, in their expected counterclockwise order from 0. Throws if
// the representation does not produce this circular order.
std::vector<PSL2ZElement> first_generation_elements();
OrbitConfig first_generation(const FuchsianRep& rep, BPoint y0 = BPoint(0));

// x lies strictly inside the ccw arc (r, s)
inline bool in_open_arc(const BPoint& x, const BPoint& r, const BPoint& s) {
  return circular_sign(r, x, s) == 1;
}

// Arc [lo, hi] between consecutive orbit points, with guard points pad_lo,
// pad_hi placed strictly outside in the adjacent gaps (arc midpoints, or a
// unit step when the gap contains inf).
struct GuardedArc {
  PSL2ZElement lo_g, hi_g;
  BPoint lo, hi;
  BPoint pad_lo, pad_hi;
};

// gamma1 = be2.al.be.al and gamma2 = al.be.al.be2 swap the endpoints of
// their source and target arcs: gamma1 maps K1- = [al.be2, al.be2.al] onto
// K1+ = [be2, be2.al] and gamma2 maps K2- = [be, be.al] onto
// K2+ = [al.be, al.be.al].
struct PingPongData {
  BPoint y0;
  PSL2ZElement gamma1, gamma2;
  MoebiusMap m1, m2;
  GuardedArc k1_minus, k1_plus, k2_minus, k2_plus;
};

PingPongData build_ping_pong(const FuchsianRep& rep, BPoint y0 = BPoint(0));

// Certifies the table-tennis inclusions: each gamma_i maps the complement of
// the open guarded arc around its source strictly into the open guarded arc
// around its target, the four guarded arcs are pairwise disjoint, y0 lies
// outside all of them, and no point of orbit_sample invades a guard gap
// (the arc endpoints stay extremal among sampled orbit points).
struct PingPongReport {
  bool ok = true;
  std::string witness;
};

PingPongReport ping_pong_verify(const PingPongData& pp, const std::vector<BPoint>& orbit_sample);

// Exhaustive check that no nonempty reduced word in gamma1, gamma2 of length
// <= max_len acts as the identity map.
struct FreenessReport {
  bool free = true;
  long long words_checked = 0;
  std::string witness; // offending word when free == false
};

FreenessReport free_words_check(const FuchsianRep& rep, int max_len);

} // namespace ordkit
