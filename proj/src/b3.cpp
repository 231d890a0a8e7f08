#include "ordkit/b3.hpp"

#include <cctype>
#include <stdexcept>

namespace ordkit {

namespace {

// Append one syllable to a reduced tail, merging with the last syllable when
// both lie in the same class. Returns the central t-power extracted.
long long push_syl(SylWord& tail, Syl s) {
  if (tail.empty() || is_b_class(tail.back()) != is_b_class(s)) {
    tail.push_back(s);
    return 0;
  }
  Syl last = tail.back();
  tail.pop_back();
  if (last == Syl::A) return 1;  // a * a = t
  int pow = (last == Syl::B ? 1 : 2) + (s == Syl::B ? 1 : 2);
  if (pow == 2) { tail.push_back(Syl::B2); return 0; }  // b * b
  if (pow == 3) return 1;                               // b * b^2 = t
  tail.push_back(Syl::B);                               // b^2 * b^2 = t * b
  return 1;
}

}  // namespace

B3Element b3_identity() { return {}; }
B3Element b3_t(long long power) { return {power, {}}; }
B3Element b3_a() { return {0, {Syl::A}}; }
B3Element b3_b() { return {0, {Syl::B}}; }

B3Element b3_mult(const B3Element& x, const B3Element& y) {
  B3Element r;
  r.n = x.n + y.n;
  r.tail = x.tail;
  r.tail.reserve(x.tail.size() + y.tail.size());
  for (Syl s : y.tail) r.n += push_syl(r.tail, s);
  return r;
}

B3Element b3_inverse(const B3Element& x) {
  B3Element r;
  r.n = -x.n - static_cast<long long>(x.tail.size());
  r.tail.reserve(x.tail.size());
  for (auto it = x.tail.rbegin(); it != x.tail.rend(); ++it) {
    switch (*it) {
      case Syl::A: r.tail.push_back(Syl::A); break;
      case Syl::B: r.tail.push_back(Syl::B2); break;
      case Syl::B2: r.tail.push_back(Syl::B); break;
    }
  }
  return r;
}

B3Element b3_parse(const std::string& word) {
  B3Element r;
  for (char c : word) {
    if (c == '.' || std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'a': r.n += push_syl(r.tail, Syl::A); break;
      case 'A': r.n += push_syl(r.tail, Syl::A) - 1; break;
      case 'b': r.n += push_syl(r.tail, Syl::B); break;
      case 'B': r.n += push_syl(r.tail, Syl::B2) - 1; break;
      case 't': r.n += 1; break;
      case 'T': r.n -= 1; break;
      default: throw std::invalid_argument(std::string("unknown b3 letter '") + c + "'");
    }
  }
  return r;
}

std::string B3Element::key() const {
  std::string k = std::to_string(n);
  k.push_back('|');
  for (Syl s : tail) k.push_back(static_cast<char>('0' + static_cast<int>(s)));
  return k;
}

std::string B3Element::str() const {
  std::string out;
  if (n != 0) out = "t^" + std::to_string(n);
  for (Syl s : tail) {
    if (!out.empty()) out.push_back('.');
    out += (s == Syl::A) ? "a" : (s == Syl::B ? "b" : "b2");
  }
  if (out.empty()) out = "e";
  return out;
}

B3Element b3_parse_normal_form(const std::string& s) {
  B3Element r;
  size_t i = 0;
  auto next_token = [&]() -> std::string {
    while (i < s.size() && (s[i] == '.' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
    size_t start = i;
    while (i < s.size() && s[i] != '.' && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  for (std::string tok = next_token(); !tok.empty(); tok = next_token()) {
    if (tok == "e") continue;
    if (tok.rfind("t^", 0) == 0) {
      r = b3_mult(r, b3_t(std::stoll(tok.substr(2))));
    } else if (tok == "t") {
      r = b3_mult(r, b3_t(1));
    } else if (tok == "a") {
      r = b3_mult(r, b3_a());
    } else if (tok == "b") {
      r = b3_mult(r, b3_b());
    } else if (tok == "b2") {
      r = b3_mult(r, b3_mult(b3_b(), b3_b()));
    } else {
      throw std::invalid_argument("unknown normal form token '" + tok + "'");
    }
  }
  return r;
}

B3Element b3_sigma1() { return b3_parse("Tbab"); }
B3Element b3_sigma2() { return b3_parse("Tbba"); }

B3Element b3_y1() { return b3_b(); }
B3Element b3_y2() { return b3_parse("Tab"); }

B3Element b3_from_sigma(const SigmaWord& w) {
  static const B3Element s1 = b3_parse("Tbab");
  static const B3Element s2 = b3_parse("Tbba");
  static const B3Element s1i = b3_inverse(s1);
  static const B3Element s2i = b3_inverse(s2);
  B3Element r;
  for (const SigmaLetter& l : w) {
    const B3Element& g = (l.gen == 1) ? (l.sgn > 0 ? s1 : s1i) : (l.sgn > 0 ? s2 : s2i);
    r = b3_mult(r, g);
  }
  return r;
}

SigmaWord b3_to_sigma(const B3Element& x) {
  SigmaWord w;
  auto append = [&w](std::initializer_list<SigmaLetter> ls) {
    for (const SigmaLetter& l : ls) w.push_back(l);
  };
  // t = (s1 s2)^3
  long long reps = x.n >= 0 ? x.n : -x.n;
  for (long long i = 0; i < 3 * reps; ++i) {
    if (x.n >= 0)
      append({{1, 1}, {2, 1}});
    else
      append({{2, -1}, {1, -1}});
  }
  for (Syl s : x.tail) {
    switch (s) {
      case Syl::A: append({{2, -1}, {1, 1}, {2, 1}, {1, 1}, {2, 1}}); break;  // a = s2^-1 (s1 s2)^2
      case Syl::B: append({{1, 1}, {2, 1}}); break;                           // b = s1 s2
      case Syl::B2: append({{1, 1}, {2, 1}, {1, 1}, {2, 1}}); break;
    }
  }
  return w;
}

std::string sigma_word_str(const SigmaWord& w) {
  std::string out;
  for (const SigmaLetter& l : w) {
    out.push_back(l.gen == 1 ? 's' : 'u');
    if (l.sgn < 0) out.push_back('-');
  }
  return out;
}

}  // namespace ordkit
