#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ordkit/b3.hpp"
#include "ordkit/circular.hpp"
#include "ordkit/fuchsian.hpp"
#include "ordkit/oracle.hpp"

namespace ordkit {

// Lift of the boundary action to the k-fold cover of the circle, cut at the
// base point 0. A degree-k lift exists iff gcd(k, 6) = 1: the order-2
// relation forces 2*j_alpha + 1 = 0 (mod k) and the order-3 relation forces
// 3*j_beta + m_beta = 0 (mod k) with m_beta in {1, 2}.
struct LiftSpec {
  int k = 1;
  long long j_alpha = 0; // sheet offset of the canonical order-2 lift
  long long j_beta = 0;  // sheet offset of the canonical order-3 lift
  int m_beta = 1;        // cut crossings in the 3-cycle of the base point
  int B = 1;             // (3*j_beta + m_beta) / k
  int eps = 1;           // direction the center translates the line
  long long w_a = 0;     // (eps - 1) / 2: winding correction per a-syllable
  long long w_b = 0;     // (eps - B) / 3: winding correction per b-syllable
};

struct NoLiftError : std::domain_error {
  using std::domain_error::domain_error;
};

LiftSpec k_fold_lift(const FuchsianRep& rep, int k);

// Point of the line covering the k-cover circle: full cover turns W, sheet
// in [0, k), point of the base circle. Ordered lexicographically with the
// base coordinate in cut-at-0 order.
struct CoverPos {
  long long W = 0;
  long long sheet = 0;
  BPoint pt;
};

// Position reached from (0, 0, 0) by the canonical lift of a reduced word.
CoverPos cover_position(const FuchsianRep& rep, const LiftSpec& lift, const PSL2ZElement& g);

// Left order on the braid group induced by the lifted action: sign of the
// displacement of the marked line point under t^n * tail. Throws on the
// identity.
int pi_star_sign_geometric(const FuchsianRep& rep, const LiftSpec& lift, const B3Element& g);
SignOracle make_pi_star_geometric_oracle(const FuchsianRep& rep, const LiftSpec& lift);

// Circular order on the quotient read off the k-cover circle: orientation of
// (sheet, point) positions.
CircularOracle ck_oracle(const FuchsianRep& rep, const LiftSpec& lift);

// Left order on the braid group induced by an abstract circular order on the
// quotient, via the lift of its dynamical realization (degree 1). The
// square/cube relations force the center direction eps; passing forced_eps
// with the other sign throws std::domain_error.
SignOracle pi_star_order(const CircularOracle& c, std::optional<int> forced_eps = std::nullopt);

// Exact rotation number in [0, 1) of the canonical lift of g on the k-cover:
// finds n <= max_period with a boundary fixed point of the n-th power, runs
// the lift n times from it, and divides the displacement by n*k.
Rat rotation_number(const FuchsianRep& rep, const LiftSpec& lift, const PSL2ZElement& g,
                    int max_period = 12);

} // namespace ordkit
