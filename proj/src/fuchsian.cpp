#include "ordkit/fuchsian.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace ordkit {

FuchsianRep modular_rep() {
  FuchsianRep r;
  r.alpha = MoebiusMap(0, -1, 1, 0);
  r.beta = MoebiusMap(1, 1, -1, 0);
  r.kind = "modular";
  return r;
}

FuchsianRep deformed_rep(const Rat& c, const Rat& d) {
  if (!(c * c - d * d == Rat(1)))
    throw std::invalid_argument("deformation needs c^2 - d^2 = 1, got c=" + c.str() +
                                " d=" + d.str());
  if (c.sign() <= 0 || d.sign() >= 0)
    throw std::invalid_argument("deformation needs c > 0 and d < 0");

  // integer conjugator H = [[c,d],[d,c]] scaled by the common denominator
  Int den = c.den * d.den / gcd_int(c.den, d.den);
  Int cn = c.num * (den / c.den), dn = d.num * (den / d.den);
  MoebiusMap H(cn, dn, dn, cn);

  FuchsianRep r;
  r.alpha = MoebiusMap(0, -1, 1, 0);
  r.beta = H * MoebiusMap(1, 1, -1, 0) * H.inverse();
  r.kind = "deformed";
  r.c = c;
  r.d = d;
  return r;
}

std::vector<std::pair<Rat, Rat>> deformation_candidates() {
  return {
      {Rat(5, 4), Rat(-3, 4)},
      {Rat(13, 12), Rat(-5, 12)},
      {Rat(25, 24), Rat(-7, 24)},
      {Rat(17, 8), Rat(-15, 8)},
  };
}

MoebiusMap rep_matrix(const FuchsianRep& rep, const PSL2ZElement& g) {
  MoebiusMap m;
  MoebiusMap beta2 = rep.beta * rep.beta;
  for (Syl s : g.word) {
    switch (s) {
      case Syl::A: m = m * rep.alpha; break;
      case Syl::B: m = m * rep.beta; break;
      case Syl::B2: m = m * beta2; break;
    }
  }
  return m;
}

OrbitConfig orbit_config(const FuchsianRep& rep, const std::vector<PSL2ZElement>& elements,
                         BPoint y0) {
  OrbitConfig cfg;
  cfg.y0 = y0;
  cfg.points.reserve(elements.size());

  std::unordered_map<std::string, std::size_t> seen; // point -> index hit first
  for (const PSL2ZElement& g : elements) {
    BPoint pt = rep_matrix(rep, g).apply(y0);
    std::string key = pt.num.str() + ":" + pt.den.str();
    auto it = seen.find(key);
    if (it != seen.end()) {
      const PSL2ZElement& h = cfg.points[it->second].g;
      PSL2ZElement stab = psl2z_mult(psl2z_inverse(h), g);
      throw std::domain_error("orbit is not free: " + h.str() + " and " + g.str() +
                              " both send " + y0.str() + " to " + pt.str() +
                              "; stabilizer witness " + stab.str());
    }
    seen.emplace(std::move(key), cfg.points.size());
    cfg.points.push_back({g, pt});
  }

  std::sort(cfg.points.begin(), cfg.points.end(), [&](const OrbitPoint& u, const OrbitPoint& v) {
    if (u.pt == y0) return !(v.pt == y0);
    if (v.pt == y0) return false;
    return circular_sign(y0, u.pt, v.pt) > 0;
  });
  return cfg;
}

std::vector<PSL2ZElement> first_generation_elements() {
  std::vector<PSL2ZElement> out;
  for (const char* w : {"e", "al.be", "al.be.al", "al.be2", "al.be2.al", "al", "be", "be.al",
                        "be2", "be2.al"})
    out.push_back(psl2z_parse(w));
  return out;
}

OrbitConfig first_generation(const FuchsianRep& rep, BPoint y0) {
  std::vector<PSL2ZElement> gens = first_generation_elements();
  OrbitConfig cfg = orbit_config(rep, gens, y0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!(cfg.points[i].g == gens[i]))
      throw std::domain_error("first-generation points are not in the expected circular order: "
                              "found " + cfg.points[i].g.str() + " at slot " +
                              std::to_string(i) + " instead of " + gens[i].str());
  return cfg;
}

namespace {

// point strictly inside the ccw gap arc (x, y); arcs through inf take a unit
// step from the finite end, others take the midpoint
BPoint arc_pad(const BPoint& x, const BPoint& y) {
  BPoint pad;
  if (x.is_inf())
    pad = BPoint(Rat(y.num, y.den) - Rat(1));
  else if (y.is_inf())
    pad = BPoint(Rat(x.num, x.den) + Rat(1));
  else {
    Rat rx(x.num, x.den), ry(y.num, y.den);
    pad = (rx < ry) ? BPoint((rx + ry) / Rat(2)) : BPoint(rx + Rat(1));
  }
  if (circular_sign(x, pad, y) != 1)
    throw std::logic_error("degenerate gap arc between " + x.str() + " and " + y.str());
  return pad;
}

GuardedArc make_arc(const OrbitConfig& cfg, std::size_t prev, std::size_t lo, std::size_t hi,
                    std::size_t next) {
  GuardedArc a;
  a.lo_g = cfg.points[lo].g;
  a.hi_g = cfg.points[hi].g;
  a.lo = cfg.points[lo].pt;
  a.hi = cfg.points[hi].pt;
  a.pad_lo = arc_pad(cfg.points[prev].pt, a.lo);
  a.pad_hi = arc_pad(a.hi, cfg.points[next].pt);
  return a;
}

bool arcs_disjoint(const GuardedArc& a, const GuardedArc& b) {
  return !in_open_arc(b.pad_lo, a.pad_lo, a.pad_hi) && !in_open_arc(b.pad_hi, a.pad_lo, a.pad_hi) &&
         !in_open_arc(a.pad_lo, b.pad_lo, b.pad_hi) && !in_open_arc(a.pad_hi, b.pad_lo, b.pad_hi);
}

// closed ccw arc [p, q] inside the open ccw arc (r, s)
bool arc_inside(const BPoint& p, const BPoint& q, const BPoint& r, const BPoint& s) {
  return in_open_arc(p, r, s) && in_open_arc(q, r, s) && circular_sign(r, p, q) == 1;
}

} // namespace

PingPongData build_ping_pong(const FuchsianRep& rep, BPoint y0) {
  OrbitConfig cfg = first_generation(rep, y0);
  // ccw slots: 0=e 1=al.be 2=al.be.al 3=al.be2 4=al.be2.al 5=al 6=be 7=be.al 8=be2 9=be2.al
  PingPongData pp;
  pp.y0 = y0;
  pp.gamma1 = psl2z_parse("be2.al.be.al");
  pp.gamma2 = psl2z_parse("al.be.al.be2");
  pp.m1 = rep_matrix(rep, pp.gamma1);
  pp.m2 = rep_matrix(rep, pp.gamma2);
  pp.k2_plus = make_arc(cfg, 0, 1, 2, 3);
  pp.k1_minus = make_arc(cfg, 2, 3, 4, 5);
  pp.k2_minus = make_arc(cfg, 5, 6, 7, 8);
  pp.k1_plus = make_arc(cfg, 7, 8, 9, 0);
  return pp;
}

PingPongReport ping_pong_verify(const PingPongData& pp, const std::vector<BPoint>& orbit_sample) {
  PingPongReport rep;
  auto fail = [&](const std::string& why) {
    if (rep.ok) {
      rep.ok = false;
      rep.witness = why;
    }
  };

  const GuardedArc* arcs[4] = {&pp.k1_minus, &pp.k1_plus, &pp.k2_minus, &pp.k2_plus};
  const char* names[4] = {"K1-", "K1+", "K2-", "K2+"};

  for (int i = 0; i < 4 && rep.ok; ++i)
    for (int j = i + 1; j < 4 && rep.ok; ++j)
      if (!arcs_disjoint(*arcs[i], *arcs[j]))
        fail(std::string("guarded arcs ") + names[i] + " and " + names[j] + " overlap");

  for (int i = 0; i < 4 && rep.ok; ++i)
    if (circular_sign(arcs[i]->pad_lo, pp.y0, arcs[i]->pad_hi) >= 0)
      fail(std::string("base point lies inside guarded arc ") + names[i]);

  // gamma_i maps the closed complement of its open source arc into the open
  // target arc; the inverse inclusions are the set-complement restatement
  struct Move {
    const MoebiusMap* m;
    const GuardedArc* src;
    const GuardedArc* dst;
    const char* name;
  } moves[2] = {{&pp.m1, &pp.k1_minus, &pp.k1_plus, "gamma1"},
                {&pp.m2, &pp.k2_minus, &pp.k2_plus, "gamma2"}};
  for (const Move& mv : moves) {
    if (!rep.ok) break;
    BPoint p = mv.m->apply(mv.src->pad_hi);
    BPoint q = mv.m->apply(mv.src->pad_lo);
    if (!arc_inside(p, q, mv.dst->pad_lo, mv.dst->pad_hi))
      fail(std::string(mv.name) + " does not push the complement of its source arc into its "
                                  "target arc");
  }

  // guard gaps must stay empty: arc endpoints are extremal among orbit points
  for (int i = 0; i < 4 && rep.ok; ++i)
    for (const BPoint& x : orbit_sample) {
      if (in_open_arc(x, arcs[i]->pad_lo, arcs[i]->lo) ||
          in_open_arc(x, arcs[i]->hi, arcs[i]->pad_hi)) {
        fail("orbit point " + x.str() + " invades a guard gap of " + names[i]);
        break;
      }
    }

  return rep;
}

FreenessReport free_words_check(const FuchsianRep& rep, int max_len) {
  FreenessReport out;
  MoebiusMap m1 = rep_matrix(rep, psl2z_parse("be2.al.be.al"));
  MoebiusMap m2 = rep_matrix(rep, psl2z_parse("al.be.al.be2"));
  MoebiusMap letters[4] = {m1, m1.inverse(), m2, m2.inverse()};
  const char* letter_names[4] = {"g1", "G1", "g2", "G2"};

  std::function<bool(const MoebiusMap&, int, int, std::string&)> dfs =
      [&](const MoebiusMap& acc, int last, int depth, std::string& word) {
        for (int l = 0; l < 4; ++l) {
          if (last >= 0 && (l ^ 1) == last) continue; // no immediate cancellation
          MoebiusMap next = acc * letters[l];
          std::size_t len = word.size();
          if (!word.empty()) word += '.';
          word += letter_names[l];
          ++out.words_checked;
          if (next.is_identity()) {
            out.free = false;
            out.witness = word;
            return false;
          }
          if (depth > 1 && !dfs(next, l, depth - 1, word)) return false;
          word.resize(len);
        }
        return true;
      };

  std::string word;
  dfs(MoebiusMap(), -1, max_len, word);
  return out;
}

} // namespace ordkit
