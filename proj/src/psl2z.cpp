#include "ordkit/psl2z.hpp"

#include <cctype>
#include <stdexcept>

namespace ordkit {

namespace {

void push_syl(SylWord& w, Syl s) {
  if (w.empty() || is_b_class(w.back()) != is_b_class(s)) {
    w.push_back(s);
    return;
  }
  Syl last = w.back();
  w.pop_back();
  if (last == Syl::A) return;  // al * al = e
  int pow = (last == Syl::B ? 1 : 2) + (s == Syl::B ? 1 : 2);
  if (pow == 2) w.push_back(Syl::B2);
  else if (pow == 4) w.push_back(Syl::B);
  // pow == 3: be^3 = e
}

}  // namespace

PSL2ZElement psl2z_identity() { return {}; }
PSL2ZElement psl2z_al() { return {{Syl::A}}; }
PSL2ZElement psl2z_be() { return {{Syl::B}}; }
PSL2ZElement psl2z_be2() { return {{Syl::B2}}; }

PSL2ZElement psl2z_mult(const PSL2ZElement& x, const PSL2ZElement& y) {
  PSL2ZElement r;
  r.word = x.word;
  r.word.reserve(x.word.size() + y.word.size());
  for (Syl s : y.word) push_syl(r.word, s);
  return r;
}

PSL2ZElement psl2z_inverse(const PSL2ZElement& x) {
  PSL2ZElement r;
  r.word.reserve(x.word.size());
  for (auto it = x.word.rbegin(); it != x.word.rend(); ++it) {
    switch (*it) {
      case Syl::A: r.word.push_back(Syl::A); break;
      case Syl::B: r.word.push_back(Syl::B2); break;
      case Syl::B2: r.word.push_back(Syl::B); break;
    }
  }
  return r;
}

PSL2ZElement psl2z_parse(const std::string& word) {
  PSL2ZElement r;
  size_t i = 0;
  while (i < word.size()) {
    if (word[i] == '.' || std::isspace(static_cast<unsigned char>(word[i]))) { ++i; continue; }
    size_t start = i;
    while (i < word.size() && word[i] != '.' && !std::isspace(static_cast<unsigned char>(word[i]))) ++i;
    std::string tok = word.substr(start, i - start);
    if (tok == "e") continue;
    if (tok == "al") push_syl(r.word, Syl::A);
    else if (tok == "be") push_syl(r.word, Syl::B);
    else if (tok == "be2") push_syl(r.word, Syl::B2);
    else throw std::invalid_argument("unknown psl2z token '" + tok + "'");
  }
  return r;
}

PSL2ZElement q_map(const B3Element& x) { return {x.tail}; }

std::string PSL2ZElement::key() const {
  std::string k;
  k.reserve(word.size());
  for (Syl s : word) k.push_back(static_cast<char>('0' + static_cast<int>(s)));
  return k;
}

std::string PSL2ZElement::str() const {
  if (word.empty()) return "e";
  std::string out;
  for (Syl s : word) {
    if (!out.empty()) out.push_back('.');
    out += (s == Syl::A) ? "al" : (s == Syl::B ? "be" : "be2");
  }
  return out;
}

}  // namespace ordkit
