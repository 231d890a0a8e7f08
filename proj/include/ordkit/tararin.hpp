#pragma once

#include "ordkit/rational.hpp"

#include <string>
#include <vector>

namespace ordkit {

// Iterated split extension with levels A_0 (top quotient) through A_n (bottom
// subgroup), each a finitely generated (hence cyclic) subgroup of Q, where
// conjugation by level i multiplies level i+1 by action[i] in {+1, -1}. The
// rational series G_0 > G_1 > ... > G_{n+1} = {e} has G_i = levels >= i.
struct TararinSpec {
  struct Level {
    std::vector<Rat> gens;  // the level subgroup is the group they generate
  };
  std::vector<Level> levels;
  std::vector<int> action;  // size levels.size() - 1, each +-1

  size_t depth() const { return levels.size(); }  // n + 1
};

// Generator of the cyclic subgroup of Q spanned by gens:
// gcd of numerators over lcm of denominators, positive.
Rat cyclic_generator(const std::vector<Rat>& gens);

// Throws std::invalid_argument when the spec is unusable: no levels, a level
// with no nonzero generator, a wrong-sized or non-unit action vector, or an
// adjacent action equal to +1 (the quotients G_i / G_{i+2} must not be
// bi-orderable, which forces every adjacent action to be -1).
void validate_tararin_spec(const TararinSpec& spec);

// Coordinates are integer multiples of each level's cyclic generator.
struct TararinElement {
  std::vector<long long> m;

  bool is_identity() const {
    for (long long c : m)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const TararinElement& x, const TararinElement& y) { return x.m == y.m; }

  std::string key() const {
    std::string k;
    for (long long c : m) k += std::to_string(c) + ",";
    return k;
  }
};

TararinElement tararin_identity(const TararinSpec& spec);
TararinElement tararin_level_gen(const TararinSpec& spec, size_t level, long long power = 1);
TararinElement tararin_mult(const TararinSpec& spec, const TararinElement& x, const TararinElement& y);
TararinElement tararin_inverse(const TararinSpec& spec, const TararinElement& x);

std::string tararin_str(const TararinSpec& spec, const TararinElement& x);

// Sign of x under the order indexed by eps (one sign per level): the sign of
// the topmost nonzero coordinate, flipped when eps at that level is -1.
int tararin_sign(const TararinSpec& spec, const std::vector<int>& eps, const TararinElement& x);

// Klein bottle group: Z > Z with action -1.
TararinSpec klein_bottle_spec();

// Depth-3 chain Z > Z > Z with both adjacent actions -1.
TararinSpec chain3_spec();

}  // namespace ordkit
