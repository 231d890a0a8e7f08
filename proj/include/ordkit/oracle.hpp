#pragma once

#include "ordkit/group.hpp"
#include "ordkit/sweep.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ordkit {

// A left order presented as its sign function on G \ {e}: sign(g) = +1 iff
// e < g. Must satisfy sign(f)=sign(g)=+1 => sign(fg)=+1 and
// sign(inv(g)) = -sign(g) on every ball it is used on.
struct SignOracle {
  std::string group_id;
  std::string label;
  std::function<int(const Element&)> sign;

  // sign of x^-1 y: +1 when x < y, 0 when x = y, -1 when x > y
  int compare(const GroupHandle& g, const Element& x, const Element& y) const {
    Element d = g.mult(g.inv(x), y);
    if (g.is_identity(d)) return 0;
    return sign(d);
  }
};

struct AxiomViolation {
  std::string kind;  // "product" | "inverse" | "zero-sign"
  std::string lhs, rhs;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  size_t pairs_checked{0};
  bool ok() const { return violations.empty(); }
};

// (e1) positivity closure plus inversion antisymmetry over ball(r).
AxiomReport check_order_axioms(const GroupHandle& g, const SignOracle& o, int radius,
                               Exec exec = default_exec());

// Left-invariance restated on orbits: sign(f^-1 g) = sign((hf)^-1 (hg))
// whenever both differences lie in the tested ball.
AxiomReport check_left_invariance(const GroupHandle& g, const SignOracle& o, int radius,
                                  Exec exec = default_exec());

// Dubrovina-Dubrovin order on B3: positive iff the sigma-word handle-reduces
// to a sigma1-positive word, or to a sigma1-free word with negative
// sigma2-exponent sum. Throws on the identity.
int dd_sign(const B3Element& g);
SignOracle make_dd_oracle();

// Natural (or reversed) order of a subgroup of the rationals.
SignOracle make_rational_oracle(bool reciprocal = false);

// The sign-of-dominant-coordinate order used by the direct-sum demo.
SignOracle make_zsum_oracle();

// All 2^depth left orders of a Tararin spec, one per sign signature;
// signature[i] flips the level-i generator.
struct TararinOrder {
  std::vector<int> eps;
  SignOracle oracle;
};
std::vector<TararinOrder> tararin_orders(const TararinSpec& spec);

// Lexicographic extension: H convex with order lambda0, quotient compared by
// mu (an invariant total comparator on cosets: mu(x,y) <0/=0/>0 for xH vs
// yH). Spot-checks mu's invariance on ball(check_radius) and throws if it
// fails.
SignOracle lex_extend(const GroupHandle& g, const SignOracle& lambda0,
                      const std::function<bool(const Element&)>& member,
                      const std::function<int(const Element&, const Element&)>& mu,
                      int check_radius = 3);

}  // namespace ordkit
