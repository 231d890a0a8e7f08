#include "ordkit/tararin.hpp"

#include <stdexcept>

namespace ordkit {

Rat cyclic_generator(const std::vector<Rat>& gens) {
  Int num = 0, den = 1;
  for (const Rat& g : gens) {
    if (g.is_zero()) continue;
    // <p/q, r/s> = <gcd(ps, rq) / qs>, kept reduced as we fold
    Int gnum = boost::multiprecision::abs(g.num);
    num = num == 0 ? gnum * den : gcd_int(num * g.den, gnum * den);
    den = den * g.den;
    Int sh = gcd_int(num, den);
    num /= sh;
    den /= sh;
  }
  if (num == 0) throw std::invalid_argument("level subgroup is trivial");
  return Rat(num, den);
}

void validate_tararin_spec(const TararinSpec& spec) {
  if (spec.levels.empty()) throw std::invalid_argument("tararin spec has no levels");
  for (const auto& lv : spec.levels) cyclic_generator(lv.gens);
  if (spec.action.size() + 1 != spec.levels.size())
    throw std::invalid_argument("tararin spec action count must be levels - 1");
  for (int a : spec.action) {
    if (a != 1 && a != -1) throw std::invalid_argument("tararin actions must be +-1");
    if (a == 1)
      throw std::invalid_argument("adjacent action +1 makes a bi-orderable rank-2 section");
  }
}

TararinElement tararin_identity(const TararinSpec& spec) {
  TararinElement e;
  e.m.assign(spec.depth(), 0);
  return e;
}

TararinElement tararin_level_gen(const TararinSpec& spec, size_t level, long long power) {
  if (level >= spec.depth()) throw std::invalid_argument("tararin level out of range");
  TararinElement e = tararin_identity(spec);
  e.m[level] = power;
  return e;
}

TararinElement tararin_mult(const TararinSpec& spec, const TararinElement& x, const TararinElement& y) {
  size_t d = spec.depth();
  if (x.m.size() != d || y.m.size() != d) throw std::invalid_argument("tararin element size mismatch");
  TararinElement r = tararin_identity(spec);
  r.m[0] = x.m[0] + y.m[0];
  for (size_t i = 1; i < d; ++i) {
    long long flip = (spec.action[i - 1] == -1 && (y.m[i - 1] & 1)) ? -1 : 1;
    r.m[i] = flip * x.m[i] + y.m[i];
  }
  return r;
}

TararinElement tararin_inverse(const TararinSpec& spec, const TararinElement& x) {
  size_t d = spec.depth();
  TararinElement r = tararin_identity(spec);
  r.m[0] = -x.m[0];
  for (size_t i = 1; i < d; ++i) {
    long long flip = (spec.action[i - 1] == -1 && (r.m[i - 1] & 1)) ? -1 : 1;
    r.m[i] = -flip * x.m[i];
  }
  return r;
}

std::string tararin_str(const TararinSpec& spec, const TararinElement& x) {
  std::string out = "(";
  for (size_t i = 0; i < x.m.size(); ++i) {
    if (i) out += ",";
    Rat q = Rat(x.m[i]) * cyclic_generator(spec.levels[i].gens);
    out += q.str();
  }
  return out + ")";
}

int tararin_sign(const TararinSpec& spec, const std::vector<int>& eps, const TararinElement& x) {
  if (eps.size() != spec.depth()) throw std::invalid_argument("eps size mismatch");
  for (size_t i = 0; i < x.m.size(); ++i) {
    if (x.m[i] == 0) continue;
    int s = x.m[i] > 0 ? 1 : -1;
    return eps[i] * s;
  }
  return 0;
}

TararinSpec klein_bottle_spec() {
  TararinSpec s;
  s.levels = {{{Rat(1)}}, {{Rat(1)}}};
  s.action = {-1};
  return s;
}

TararinSpec chain3_spec() {
  TararinSpec s;
  s.levels = {{{Rat(1)}}, {{Rat(1)}}, {{Rat(1)}}};
  s.action = {-1, -1};
  return s;
}

}  // namespace ordkit
