#include "ordkit/lifts.hpp"

#include <memory>
#include <unordered_map>
#include <utility>

namespace ordkit {

namespace {

QuadPoint to_quad(const BPoint& p) {
  return p.is_inf() ? QuadPoint::infinity() : QuadPoint::rational(Rat(p.num, p.den));
}

// Per-letter lift data: base map, its value at the base point, sheet offset,
// winding correction.
struct Letter {
  MoebiusMap m;
  BPoint at_y0;
  QuadPoint at_y0_q;
  long long j = 0, w = 0;
};

// One canonical-lift step: sheet += j + [the image crosses the cut], carry
// into W, plus the winding correction.
template <typename P>
void step(const Letter& L, int k, long long& W, long long& sheet, P& pt);

template <>
void step<BPoint>(const Letter& L, int k, long long& W, long long& sheet, BPoint& pt) {
  BPoint fy = L.m.apply(pt);
  long long total = sheet + L.j + (turn_less(fy, L.at_y0) ? 1 : 0);
  sheet = total % k;
  W += L.w + total / k;
  pt = fy;
}

template <>
void step<QuadPoint>(const Letter& L, int k, long long& W, long long& sheet, QuadPoint& pt) {
  QuadPoint fy = pt.apply(L.m);
  long long total = sheet + L.j + (turn_less(fy, L.at_y0_q) ? 1 : 0);
  sheet = total % k;
  W += L.w + total / k;
  pt = fy;
}

struct Letters {
  Letter a, b;
  int k = 1;
};

Letters make_letters(const FuchsianRep& rep, const LiftSpec& lift) {
  Letters L;
  L.k = lift.k;
  L.a.m = rep.alpha;
  L.b.m = rep.beta;
  L.a.at_y0 = rep.alpha.apply(BPoint(0));
  L.b.at_y0 = rep.beta.apply(BPoint(0));
  L.a.at_y0_q = to_quad(L.a.at_y0);
  L.b.at_y0_q = to_quad(L.b.at_y0);
  L.a.j = lift.j_alpha;
  L.b.j = lift.j_beta;
  L.a.w = lift.w_a;
  L.b.w = lift.w_b;
  return L;
}

// Apply the canonical lift of a reduced word: rightmost syllable acts first.
template <typename P>
void run_word(const Letters& L, const SylWord& word, long long& W, long long& sheet, P& pt) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case Syl::A:
        step(L.a, L.k, W, sheet, pt);
        break;
      case Syl::B:
        step(L.b, L.k, W, sheet, pt);
        break;
      case Syl::B2:
        step(L.b, L.k, W, sheet, pt);
        step(L.b, L.k, W, sheet, pt);
        break;
    }
  }
}

Rat frac_part(const Rat& r) {
  Int q = r.num / r.den; // truncates toward zero
  if (r.num < 0 && q * r.den != r.num) q -= 1;
  return r - Rat(q);
}

// A boundary point fixed by m, if any: inf when the map is affine, else a
// root of c x^2 + (d - a) x - b, rational or quadratic. Elliptic maps have
// none.
std::optional<QuadPoint> boundary_fixed_point(const MoebiusMap& m) {
  if (m.is_identity()) return QuadPoint::rational(Rat(0)); // use the base point
  if (m.c == 0) return QuadPoint::infinity();
  Int disc = (m.a - m.d) * (m.a - m.d) + 4 * m.b * m.c;
  if (disc < 0) return std::nullopt;
  Int s = boost::multiprecision::sqrt(disc);
  if (s * s == disc) return QuadPoint::rational(Rat(m.a - m.d + s, 2 * m.c));
  return QuadPoint::surd(Rat(m.a - m.d, 2 * m.c), Rat(1, 2 * m.c), disc);
}

} // namespace

LiftSpec k_fold_lift(const FuchsianRep& rep, int k) {
  if (k <= 0) throw std::invalid_argument("cover degree must be positive");
  if (k % 2 == 0)
    throw NoLiftError("no degree-" + std::to_string(k) +
                      " lift: 2j+1 = 0 (mod k) has no solution for even k");
  if (k % 3 == 0)
    throw NoLiftError("no degree-" + std::to_string(k) +
                      " lift: 3j+m = 0 (mod k) with m in {1,2} has no solution when 3 | k");

  BPoint y0(0);
  BPoint b1 = rep.beta.apply(y0);
  BPoint b2 = (rep.beta * rep.beta).apply(y0);
  if (b1 == y0 || b2 == y0 || b1 == b2)
    throw std::domain_error("base point does not have a free 3-cycle");

  LiftSpec L;
  L.k = k;
  L.m_beta = 1 + (turn_less(b2, b1) ? 1 : 0);
  L.j_alpha = (k - 1) / 2;
  L.j_beta = -1;
  for (int j = 0; j < k; ++j)
    if ((3 * j + L.m_beta) % k == 0) {
      L.j_beta = j;
      break;
    }
  // gcd(3, k) = 1, so exactly one offset works
  L.B = static_cast<int>((3 * L.j_beta + L.m_beta) / k);
  L.eps = (L.B == 1) ? 1 : -1;
  L.w_a = (L.eps - 1) / 2;
  L.w_b = (L.eps - L.B) / 3;
  return L;
}

CoverPos cover_position(const FuchsianRep& rep, const LiftSpec& lift, const PSL2ZElement& g) {
  Letters L = make_letters(rep, lift);
  CoverPos pos;
  pos.pt = BPoint(0);
  run_word(L, g.word, pos.W, pos.sheet, pos.pt);
  return pos;
}

int pi_star_sign_geometric(const FuchsianRep& rep, const LiftSpec& lift, const B3Element& g) {
  if (g.is_identity()) throw std::domain_error("sign of the identity is undefined");
  Letters L = make_letters(rep, lift);
  long long W = 0, sheet = 0;
  BPoint pt(0);
  run_word(L, g.tail, W, sheet, pt);
  W += static_cast<long long>(lift.eps) * g.n;
  if (W != 0) return W > 0 ? 1 : -1;
  if (sheet != 0) return 1;
  if (!(pt == BPoint(0))) return 1;
  throw std::logic_error("non-identity element fixes the marked line point: " + g.str());
}

SignOracle make_pi_star_geometric_oracle(const FuchsianRep& rep, const LiftSpec& lift) {
  SignOracle o;
  o.group_id = "b3";
  o.label = "lifted-" + rep.kind + "-k" + std::to_string(lift.k);
  auto rep_copy = std::make_shared<FuchsianRep>(rep);
  LiftSpec ls = lift;
  o.sign = [rep_copy, ls](const Element& e) {
    return pi_star_sign_geometric(*rep_copy, ls, std::get<B3Element>(e));
  };
  return o;
}

CircularOracle ck_oracle(const FuchsianRep& rep, const LiftSpec& lift) {
  auto rep_copy = std::make_shared<FuchsianRep>(rep);
  LiftSpec ls = lift;
  auto cache = std::make_shared<std::unordered_map<std::string, std::pair<long long, BPoint>>>();
  auto pos = [rep_copy, ls, cache](const PSL2ZElement& g) {
    std::string key = g.key();
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    CoverPos p = cover_position(*rep_copy, ls, g);
    std::pair<long long, BPoint> sp{p.sheet, p.pt}; // W drops: position on the cover circle
    cache->emplace(std::move(key), sp);
    return sp;
  };
  auto less = [](const std::pair<long long, BPoint>& u, const std::pair<long long, BPoint>& v) {
    if (u.first != v.first) return u.first < v.first;
    return turn_less(u.second, v.second);
  };

  CircularOracle c;
  c.label = "cover-k" + std::to_string(lift.k) + "-" + rep.kind;
  c.sign = [pos, less](const PSL2ZElement& x, const PSL2ZElement& y, const PSL2ZElement& z) {
    auto px = pos(x), py = pos(y), pz = pos(z);
    if (px == py || py == pz || px == pz) return 0;
    int s = (less(px, py) ? 1 : 0) + (less(py, pz) ? 1 : 0) + (less(pz, px) ? 1 : 0);
    return s == 2 ? 1 : -1; // two ascents = cyclically increasing
  };
  return c;
}

SignOracle pi_star_order(const CircularOracle& c, std::optional<int> forced_eps) {
  TripleSign cs = c.sign;
  PSL2ZElement id = psl2z_identity(), al = psl2z_al(), be = psl2z_be(), be2 = psl2z_be2();

  // strict cut-at-identity order of orbit positions on the realized circle
  auto cut_before = [cs, id](const PSL2ZElement& u, const PSL2ZElement& v) {
    if (u == v) return false;
    if (u == id) return true;
    if (v == id) return false;
    int s = cs(id, u, v);
    if (s == 0)
      throw std::domain_error("circular order degenerates on (" + u.str() + ", " + v.str() + ")");
    return s > 0;
  };

  int m_beta = 1 + (cut_before(be2, be) ? 1 : 0);
  int B = m_beta; // degree-1 realization: j_beta = 0
  int eps = (B == 1) ? 1 : -1;
  if (forced_eps && *forced_eps != eps)
    throw std::domain_error("center direction " + std::to_string(*forced_eps) +
                            " is inconsistent: the cube relation forces " + std::to_string(eps));
  long long w_a = (eps - 1) / 2;
  long long w_b = (eps - B) / 3;

  SignOracle o;
  o.group_id = "b3";
  o.label = "pistar(" + c.label + ")";
  o.sign = [cut_before, al, be, eps, w_a, w_b](const Element& el) {
    const B3Element& g = std::get<B3Element>(el);
    if (g.is_identity()) throw std::domain_error("sign of the identity is undefined");
    long long W = 0;
    PSL2ZElement h = psl2z_identity();
    auto apply = [&](const PSL2ZElement& s, long long w) {
      PSL2ZElement sh = psl2z_mult(s, h);
      W += w + (cut_before(sh, s) ? 1 : 0);
      h = sh;
    };
    for (auto it = g.tail.rbegin(); it != g.tail.rend(); ++it) {
      switch (*it) {
        case Syl::A: apply(al, w_a); break;
        case Syl::B: apply(be, w_b); break;
        case Syl::B2: apply(be, w_b); apply(be, w_b); break;
      }
    }
    W += static_cast<long long>(eps) * g.n;
    if (W != 0) return W > 0 ? 1 : -1;
    if (!h.is_identity()) return 1;
    throw std::logic_error("non-identity element has trivial position: " + g.str());
  };
  return o;
}

Rat rotation_number(const FuchsianRep& rep, const LiftSpec& lift, const PSL2ZElement& g,
                    int max_period) {
  if (g.is_identity()) return Rat(0);
  Letters L = make_letters(rep, lift);
  MoebiusMap M = rep_matrix(rep, g);
  MoebiusMap Mn;
  for (int n = 1; n <= max_period; ++n) {
    Mn = Mn * M;
    auto fx = boundary_fixed_point(Mn);
    if (!fx) continue;
    long long W = 0, sheet = 0;
    QuadPoint pt = *fx;
    for (int r = 0; r < n; ++r) run_word(L, g.word, W, sheet, pt);
    if (!(pt == *fx))
      throw std::logic_error("periodic boundary point failed to return after " +
                             std::to_string(n) + " applications of " + g.str());
    return frac_part(Rat(Int(W) * lift.k + sheet, Int(n) * lift.k));
  }
  throw std::domain_error("no boundary periodic point of " + g.str() + " up to period " +
                          std::to_string(max_period));
}

} // namespace ordkit
