#include "ordkit/dehornoy.hpp"

#include <stdexcept>

namespace ordkit {

namespace {

SigmaWord free_reduce(const SigmaWord& w) {
  SigmaWord out;
  out.reserve(w.size());
  for (const SigmaLetter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sgn == -l.sgn)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

HandleReduceResult handle_reduce(const SigmaWord& input, long long iteration_cap) {
  HandleReduceResult res;
  res.word = free_reduce(input);
  for (;;) {
    // leftmost s1-handle: consecutive s1-letters of opposite sign
    size_t prev = res.word.size();
    size_t handle_start = res.word.size();
    for (size_t i = 0; i < res.word.size(); ++i) {
      if (res.word[i].gen != 1) continue;
      if (prev != res.word.size() && res.word[prev].sgn == -res.word[i].sgn) {
        handle_start = prev;
        prev = i;
        break;
      }
      prev = i;
    }
    if (handle_start == res.word.size()) break;
    if (++res.iterations > iteration_cap)
      throw std::runtime_error("handle reduction iteration cap exhausted");

    size_t handle_end = prev;  // index of the closing s1-letter
    int e = res.word[handle_start].sgn;
    SigmaWord next;
    next.reserve(res.word.size());
    next.insert(next.end(), res.word.begin(), res.word.begin() + handle_start);
    next.push_back({2, -e});
    for (size_t i = handle_start + 1; i < handle_end; ++i) next.push_back({1, res.word[i].sgn});
    next.push_back({2, e});
    next.insert(next.end(), res.word.begin() + handle_end + 1, res.word.end());
    res.word = free_reduce(next);
  }

  bool pos = false, neg = false;
  for (const SigmaLetter& l : res.word) {
    if (l.gen != 1) continue;
    (l.sgn > 0 ? pos : neg) = true;
  }
  if (pos && neg) throw std::logic_error("handle reduction left mixed s1 signs");
  res.tag = pos ? SigmaTag::Positive : (neg ? SigmaTag::Negative : SigmaTag::Free);
  return res;
}

long long sigma2_exponent_sum(const SigmaWord& w) {
  long long s = 0;
  for (const SigmaLetter& l : w)
    if (l.gen == 2) s += l.sgn;
  return s;
}

}  // namespace ordkit
