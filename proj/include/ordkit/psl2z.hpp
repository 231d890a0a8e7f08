#pragma once

#include "ordkit/b3.hpp"
#include "ordkit/syllable.hpp"

#include <string>

namespace ordkit {

// Element of PSL(2, Z) presented as Z2 * Z3 = <al, be | al^2 = be^3 = e>,
// stored as the unique reduced alternating word in al, be, be^2.
struct PSL2ZElement {
  SylWord word;

  bool is_identity() const { return word.empty(); }

  friend bool operator==(const PSL2ZElement& x, const PSL2ZElement& y) { return x.word == y.word; }

  std::string key() const;
  std::string str() const;  // dot-separated tokens al / be / be2, "e" for identity
};

PSL2ZElement psl2z_identity();
PSL2ZElement psl2z_al();
PSL2ZElement psl2z_be();
PSL2ZElement psl2z_be2();

PSL2ZElement psl2z_mult(const PSL2ZElement& x, const PSL2ZElement& y);
PSL2ZElement psl2z_inverse(const PSL2ZElement& x);

// Parse dot- or whitespace-separated tokens al, be, be2 (e allowed).
PSL2ZElement psl2z_parse(const std::string& word);

// Central quotient map B3 -> PSL(2, Z): drops the t-power, a -> al, b -> be.
PSL2ZElement q_map(const B3Element& x);

}  // namespace ordkit
