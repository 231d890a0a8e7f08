#pragma once

#include <string>
#include <vector>

namespace ordkit {

// Element of a direct sum of copies of Z (covers Z, Z^2 and the restricted
// direct sum with basis e1..eK): coordinate vector with trailing zeros trimmed.
struct ZSumElement {
  std::vector<long long> v;

  void trim() {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  bool is_identity() const { return v.empty(); }

  long long coord(size_t i) const { return i < v.size() ? v[i] : 0; }

  friend bool operator==(const ZSumElement& x, const ZSumElement& y) { return x.v == y.v; }

  std::string key() const {
    std::string k;
    for (long long c : v) k += std::to_string(c) + ",";
    return k;
  }

  std::string str() const {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out + ")";
  }
};

inline ZSumElement zsum_basis(size_t i, long long c = 1) {
  ZSumElement e;
  e.v.assign(i + 1, 0);
  e.v[i] = c;
  e.trim();
  return e;
}

inline ZSumElement zsum_add(const ZSumElement& x, const ZSumElement& y) {
  ZSumElement r;
  r.v.resize(std::max(x.v.size(), y.v.size()), 0);
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = x.coord(i) + y.coord(i);
  r.trim();
  return r;
}

inline ZSumElement zsum_neg(const ZSumElement& x) {
  ZSumElement r = x;
  for (auto& c : r.v) c = -c;
  return r;
}

// Sign of the highest-index nonzero coordinate; 0 for the identity. This is
// the lexicographic-from-the-top order on the restricted direct sum.
inline int zsum_top_sign(const ZSumElement& x) {
  if (x.v.empty()) return 0;
  return x.v.back() > 0 ? 1 : -1;
}

}  // namespace ordkit
