#pragma once

#include <cstdint>
#include <vector>

namespace ordkit {

// Syllables of the reduced alternating form in Z2 * Z3: the involution a-class
// letter and the two nontrivial b-class powers.
enum class Syl : std::uint8_t { A = 0, B = 1, B2 = 2 };

inline bool is_b_class(Syl s) { return s != Syl::A; }

inline char syl_char(Syl s) {
  switch (s) {
    case Syl::A: return 'a';
    case Syl::B: return 'b';
    default: return 'c';
  }
}

using SylWord = std::vector<Syl>;

}  // namespace ordkit
