#pragma once

#include "ordkit/syllable.hpp"

#include <string>
#include <vector>

namespace ordkit {

// Element of the braid group B3 presented as <a, b, t | a^2 = b^3 = t, t central>,
// in normal form t^n * s1...sm where the tail s1...sm is a reduced alternating
// word in the syllables a, b, b^2 (no two adjacent syllables of the same class).
struct B3Element {
  long long n{0};
  SylWord tail;

  bool is_identity() const { return n == 0 && tail.empty(); }

  friend bool operator==(const B3Element& x, const B3Element& y) { return x.n == y.n && x.tail == y.tail; }

  std::string key() const;
  std::string str() const;  // printable normal form, e.g. "t^-1.b2"
};

B3Element b3_identity();
B3Element b3_t(long long power = 1);
B3Element b3_a();
B3Element b3_b();

B3Element b3_mult(const B3Element& x, const B3Element& y);
B3Element b3_inverse(const B3Element& x);

// Parse a word over letters a A b B t T (uppercase = inverse). Dots and
// whitespace are separators and may be omitted.
B3Element b3_parse(const std::string& word);

// Parse the printable normal form produced by str().
B3Element b3_parse_normal_form(const std::string& s);

// Letters of a word in the braid generators s1, s2 (gen in {1,2}, sgn = +-1).
struct SigmaLetter {
  int gen;
  int sgn;
};
using SigmaWord = std::vector<SigmaLetter>;

// s1 = t^-1 b a b, s2 = t^-1 b^2 a; the positive pair y1 = s1 s2 = b and
// y2 = s2^-1 = t^-1 a b generate the distinguished positive cone.
B3Element b3_sigma1();
B3Element b3_sigma2();
B3Element b3_y1();
B3Element b3_y2();

B3Element b3_from_sigma(const SigmaWord& w);
SigmaWord b3_to_sigma(const B3Element& x);

std::string sigma_word_str(const SigmaWord& w);

}  // namespace ordkit
