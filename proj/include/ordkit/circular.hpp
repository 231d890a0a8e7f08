#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ordkit/fuchsian.hpp"
#include "ordkit/psl2z.hpp"
#include "ordkit/sweep.hpp"

namespace ordkit {

// Triple orientation on the quotient group: +1 counterclockwise, -1
// clockwise, 0 iff two arguments coincide. All oracles here are total.
using TripleSign =
    std::function<int(const PSL2ZElement&, const PSL2ZElement&, const PSL2ZElement&)>;

struct CircularOracle {
  std::string label;
  TripleSign sign;
};

// Orientation of boundary orbit points g.y0 under the representation. The
// orbit must be free for this to separate elements; collisions surface as
// sign 0 on distinct arguments, which the cocycle check flags.
CircularOracle make_orbit_circular_oracle(const FuchsianRep& rep, BPoint y0 = BPoint(0));

// Reversed orientation: (x, y, z) -> c(z, y, x).
CircularOracle mirror_oracle(const CircularOracle& c);

// +1 or -1 according to the orientation of (e, be, be2).
int circular_class(const CircularOracle& c);

// Checks the circular order axioms on a finite sample: sign vanishes exactly
// on repeated arguments, the 4-argument alternating sum vanishes, and the
// orientation is invariant under left translation by sample elements.
struct CocycleReport {
  bool ok = true;
  std::size_t triples_checked = 0;
  std::size_t quadruples_checked = 0;
  std::string witness;
};

CocycleReport cocycle_check(const CircularOracle& c, const std::vector<PSL2ZElement>& sample,
                            Exec exec = default_exec());

} // namespace ordkit
