#pragma once

#include "ordkit/b3.hpp"

namespace ordkit {

enum class SigmaTag { Positive, Negative, Free };

struct HandleReduceResult {
  SigmaWord word;
  SigmaTag tag{SigmaTag::Free};
  long long iterations{0};
};

// Dehornoy handle reduction for B3 words in s1, s2. Repeatedly rewrites the
// leftmost s1-handle s1^e s2^d s1^-e into s2^-e s1^d s2^e (length preserving)
// with free reduction in between, until the word carries s1-letters of one
// sign only. Throws when iteration_cap is exhausted.
HandleReduceResult handle_reduce(const SigmaWord& input, long long iteration_cap = 1000000);

long long sigma2_exponent_sum(const SigmaWord& w);

}  // namespace ordkit
