#include "ordkit/oracle.hpp"

#include "ordkit/dehornoy.hpp"

#include <map>
#include <stdexcept>

namespace ordkit {

AxiomReport check_order_axioms(const GroupHandle& g, const SignOracle& o, int radius, Exec exec) {
  std::vector<Element> ball = ball_enumerate(g, radius);
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < ball.size(); ++i) index[element_key(ball[i])] = i;
  const size_t n = ball.size();
  AxiomReport rep;
  rep.pairs_checked = n * n;
  rep.violations = sweep_pairs<AxiomViolation>(n, exec, [&](size_t i, size_t j) {
    std::vector<AxiomViolation> v;
    const Element &x = ball[i], &y = ball[j];
    bool xe = g.is_identity(x), ye = g.is_identity(y);
    if (j == 0 && !xe) {  // per-element checks, once per row
      int s = o.sign(x), si = o.sign(g.inv(x));
      if (s != 1 && s != -1) v.push_back({"zero-sign", g.format(x), ""});
      if (si != -s) v.push_back({"inverse", g.format(x), g.format(g.inv(x))});
    }
    if (!xe && !ye) {
      Element p = g.mult(x, y);
      if (!g.is_identity(p) && index.count(element_key(p))) {
        if (o.sign(x) == 1 && o.sign(y) == 1 && o.sign(p) != 1)
          v.push_back({"product", g.format(x), g.format(y)});
      }
    }
    return v;
  });
  return rep;
}

AxiomReport check_left_invariance(const GroupHandle& g, const SignOracle& o, int radius,
                                  Exec exec) {
  std::vector<Element> ball = ball_enumerate(g, radius);
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < ball.size(); ++i) index[element_key(ball[i])] = i;
  const size_t n = ball.size();
  AxiomReport rep;
  rep.pairs_checked = n * n * n;
  rep.violations = sweep_triples<AxiomViolation>(n, exec, [&](size_t fi, size_t gi, size_t hi) {
    std::vector<AxiomViolation> v;
    const Element &f = ball[fi], &x = ball[gi], &h = ball[hi];
    Element d = g.mult(g.inv(f), x);
    if (g.is_identity(d) || !index.count(element_key(d))) return v;
    Element hf = g.mult(h, f), hx = g.mult(h, x);
    Element d2 = g.mult(g.inv(hf), hx);
    if (!index.count(element_key(d2))) return v;
    if (o.sign(d) != o.sign(d2))
      v.push_back({"invariance", g.format(f) + "|" + g.format(x), g.format(h)});
    return v;
  });
  return rep;
}

int dd_sign(const B3Element& g) {
  if (g.is_identity()) throw std::invalid_argument("dd_sign: identity has no sign");
  HandleReduceResult r = handle_reduce(b3_to_sigma(g));
  if (r.tag == SigmaTag::Positive) return 1;
  if (r.tag == SigmaTag::Negative) return -1;
  long long s2 = sigma2_exponent_sum(r.word);
  if (s2 == 0) throw std::logic_error("dd_sign: sigma-free reduction of a nontrivial element");
  return s2 < 0 ? 1 : -1;
}

SignOracle make_dd_oracle() {
  SignOracle o;
  o.group_id = "b3";
  o.label = "dd";
  o.sign = [](const Element& e) { return dd_sign(std::get<B3Element>(e)); };
  return o;
}

SignOracle make_rational_oracle(bool reciprocal) {
  SignOracle o;
  o.group_id = "rational";
  o.label = reciprocal ? "rational-reversed" : "rational";
  int flip = reciprocal ? -1 : 1;
  o.sign = [flip](const Element& e) {
    int s = std::get<Rat>(e).sign();
    if (s == 0) throw std::invalid_argument("rational sign: identity");
    return flip * s;
  };
  return o;
}

SignOracle make_zsum_oracle() {
  SignOracle o;
  o.group_id = "zsum";
  o.label = "dominant-coordinate";
  o.sign = [](const Element& e) {
    int s = zsum_top_sign(std::get<ZSumElement>(e));
    if (s == 0) throw std::invalid_argument("zsum sign: identity");
    return s;
  };
  return o;
}

std::vector<TararinOrder> tararin_orders(const TararinSpec& spec) {
  validate_tararin_spec(spec);
  size_t d = spec.depth();
  std::vector<TararinOrder> out;
  for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
    TararinOrder to;
    to.eps.resize(d);
    for (size_t i = 0; i < d; ++i) to.eps[i] = (mask >> i) & 1 ? -1 : 1;
    to.oracle.group_id = "tararin";
    std::string lbl = "tararin-";
    for (int e : to.eps) lbl += e > 0 ? '+' : '-';
    to.oracle.label = lbl;
    to.oracle.sign = [spec, eps = to.eps](const Element& el) {
      int s = tararin_sign(spec, eps, std::get<TararinElement>(el));
      if (s == 0) throw std::invalid_argument("tararin sign: identity");
      return s;
    };
    out.push_back(std::move(to));
  }
  return out;
}

SignOracle lex_extend(const GroupHandle& g, const SignOracle& lambda0,
                      const std::function<bool(const Element&)>& member,
                      const std::function<int(const Element&, const Element&)>& mu,
                      int check_radius) {
  // invariance spot-check: mu(x, y) must equal mu(hx, hy) for ball elements
  std::vector<Element> ball = ball_enumerate(g, check_radius);
  for (const Element& x : ball)
    for (const Element& y : ball) {
      int base = mu(x, y);
      if (member(g.mult(g.inv(x), y)) != (base == 0))
        throw std::runtime_error("lex_extend: mu disagrees with membership on cosets");
      for (const Element& h : ball) {
        if (mu(g.mult(h, x), g.mult(h, y)) != base)
          throw std::runtime_error("lex_extend: coset comparator is not left-invariant");
      }
    }
  SignOracle o;
  o.group_id = g.id;
  o.label = lambda0.label + "-lex";
  Element id = g.identity;
  o.sign = [g, lambda0, member, mu, id](const Element& x) {
    if (member(x)) return lambda0.sign(x);
    int m = mu(id, x);  // strcmp-like: <0 means eH before xH
    if (m == 0) throw std::logic_error("lex_extend: non-member compares equal to H");
    return m < 0 ? 1 : -1;
  };
  return o;
}

}  // namespace ordkit
