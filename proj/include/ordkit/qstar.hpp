#pragma once

#include "ordkit/circular.hpp"
#include "ordkit/oracle.hpp"

namespace ordkit {

// The unique preimage of gbar under the central quotient that lies in
// [e, t) for the given left order. The order must make t positive (so the
// center is cofinal); throws std::domain_error otherwise or when no
// representative is reached within max_steps center shifts.
B3Element coset_representative(const SignOracle& lambda, const PSL2ZElement& gbar,
                               int max_steps = 64);

// Circular order induced on the quotient: orientation of the linear order of
// the [e, t) representatives. Zero exactly on repeated arguments.
int q_star_sign(const SignOracle& lambda, const PSL2ZElement& x, const PSL2ZElement& y,
                const PSL2ZElement& z, int max_steps = 64);

CircularOracle q_star_oracle(const SignOracle& lambda);

} // namespace ordkit
