#include "ordkit/circular.hpp"

#include <memory>
#include <unordered_map>

namespace ordkit {

CircularOracle make_orbit_circular_oracle(const FuchsianRep& rep, BPoint y0) {
  auto cache = std::make_shared<std::unordered_map<std::string, BPoint>>();
  auto rep_copy = std::make_shared<FuchsianRep>(rep);
  auto pt = [cache, rep_copy, y0](const PSL2ZElement& g) {
    std::string key = g.key();
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    BPoint p = rep_matrix(*rep_copy, g).apply(y0);
    cache->emplace(std::move(key), p);
    return p;
  };

  CircularOracle c;
  c.label = "orbit-" + rep.kind;
  c.sign = [pt](const PSL2ZElement& x, const PSL2ZElement& y, const PSL2ZElement& z) {
    return circular_sign(pt(x), pt(y), pt(z));
  };
  return c;
}

CircularOracle mirror_oracle(const CircularOracle& c) {
  CircularOracle m;
  m.label = "mirror(" + c.label + ")";
  TripleSign base = c.sign;
  m.sign = [base](const PSL2ZElement& x, const PSL2ZElement& y, const PSL2ZElement& z) {
    return base(z, y, x);
  };
  return m;
}

int circular_class(const CircularOracle& c) {
  int s = c.sign(psl2z_identity(), psl2z_be(), psl2z_be2());
  if (s == 0) throw std::domain_error("degenerate orientation of (e, be, be2)");
  return s;
}

CocycleReport cocycle_check(const CircularOracle& c, const std::vector<PSL2ZElement>& sample,
                            Exec exec) {
  CocycleReport rep;
  const std::size_t n = sample.size();

  auto bad = sweep_indices<std::string>(n, exec, [&](std::size_t i) {
    std::vector<std::string> out;
    const PSL2ZElement& x = sample[i];
    for (std::size_t j = 0; j < n && out.empty(); ++j) {
      const PSL2ZElement& y = sample[j];
      for (std::size_t k = 0; k < n && out.empty(); ++k) {
        const PSL2ZElement& z = sample[k];
        int s = c.sign(x, y, z);
        bool repeat = x == y || y == z || x == z;
        if (repeat != (s == 0))
          out.push_back("degeneracy failure at (" + x.str() + ", " + y.str() + ", " + z.str() +
                        "): sign " + std::to_string(s));
        for (std::size_t l = 0; l < n && out.empty(); ++l) {
          const PSL2ZElement& w = sample[l];
          // alternating sum over the four facets of (x, y, z, w)
          int sum = c.sign(y, z, w) - c.sign(x, z, w) + c.sign(x, y, w) - c.sign(x, y, z);
          if (sum != 0)
            out.push_back("cocycle failure at (" + x.str() + ", " + y.str() + ", " + z.str() +
                          ", " + w.str() + ")");
          // left translation by w
          int moved = c.sign(psl2z_mult(w, x), psl2z_mult(w, y), psl2z_mult(w, z));
          if (moved != s)
            out.push_back("invariance failure: " + w.str() + " moves (" + x.str() + ", " +
                          y.str() + ", " + z.str() + ") from " + std::to_string(s) + " to " +
                          std::to_string(moved));
        }
      }
    }
    return out;
  });

  rep.triples_checked = n * n * n;
  rep.quadruples_checked = n * n * n * n;
  if (!bad.empty()) {
    rep.ok = false;
    rep.witness = bad.front();
  }
  return rep;
}

} // namespace ordkit
