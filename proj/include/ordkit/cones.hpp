#pragma once

#include <cstdint>
#include <vector>

#include "ordkit/group.hpp"
#include "ordkit/oracle.hpp"

namespace ordkit {

// A sign assignment on a ball that violates no positivity constraint visible
// inside the ball: sign[e] = 0, sign[g^-1] = -sign[g], and whenever g, h and
// g*h all lie in the ball, sign[g] = sign[h] = +1 forces sign[g*h] = +1.
// Indices refer to ball_enumerate order.
struct PartialCone {
  int radius = 0;
  std::vector<signed char> signs;
};

struct ConeSearchResult {
  int radius = 0;
  std::vector<Element> ball;                       // ball_enumerate order, [0] = e
  std::vector<std::vector<signed char>> survivors; // deterministic DFS order
  long long steps_used = 0;
};

// Enumerates every partial cone on ball(radius), optionally forcing a set of
// elements positive. Throws std::invalid_argument if a required element is
// the identity or falls outside the ball, and std::runtime_error if the
// search exceeds `budget` clause inspections.
ConeSearchResult enumerate_partial_cones(const GroupHandle& g, int radius,
                                         const std::vector<Element>& required_positive = {},
                                         long long budget = 200000000LL);

struct IsolationEvidence {
  int radius = 0;
  std::size_t survivor_count = 0;
  bool contains_lambda = false; // lambda's restriction to the ball survives
  bool all_agree = false;       // every survivor equals lambda on the ball
};

// Brute-force isolation check: force the characteristic set positive, then
// see whether lambda is the only sign pattern the ball admits.
IsolationEvidence isolation_evidence(const GroupHandle& g, const SignOracle& lambda,
                                     const std::vector<Element>& required_positive,
                                     int radius, long long budget = 200000000LL);

} // namespace ordkit
