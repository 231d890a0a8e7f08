#include "ordkit/qstar.hpp"

namespace ordkit {

namespace {

int lam_sign(const SignOracle& lambda, const B3Element& x) { return lambda.sign(Element(x)); }

// strict x < y; arguments must be distinct
bool lam_less(const SignOracle& lambda, const B3Element& x, const B3Element& y) {
  return lam_sign(lambda, b3_mult(b3_inverse(x), y)) > 0;
}

} // namespace

B3Element coset_representative(const SignOracle& lambda, const PSL2ZElement& gbar,
                               int max_steps) {
  B3Element t = b3_t(1);
  if (lam_sign(lambda, t) <= 0)
    throw std::domain_error("order does not make the center positive");

  B3Element g;
  g.tail = gbar.word; // the center-free lift
  if (g.is_identity()) return g;

  int guard = 0;
  while (!g.is_identity() && lam_sign(lambda, g) < 0) { // g < e: shift up
    g = b3_mult(t, g);
    if (++guard > max_steps)
      throw std::domain_error("no representative of " + gbar.str() + " within " +
                              std::to_string(max_steps) + " center shifts");
  }
  while (true) { // g >= t: shift down, preserving e <= g
    B3Element d = b3_mult(b3_inverse(t), g);
    if (!d.is_identity() && lam_sign(lambda, d) < 0) break;
    g = d;
    if (++guard > max_steps)
      throw std::domain_error("no representative of " + gbar.str() + " within " +
                              std::to_string(max_steps) + " center shifts");
  }
  return g;
}

int q_star_sign(const SignOracle& lambda, const PSL2ZElement& x, const PSL2ZElement& y,
                const PSL2ZElement& z, int max_steps) {
  if (x == y || y == z || x == z) return 0;
  B3Element rx = coset_representative(lambda, x, max_steps);
  B3Element ry = coset_representative(lambda, y, max_steps);
  B3Element rz = coset_representative(lambda, z, max_steps);
  int s = (lam_less(lambda, rx, ry) ? 1 : 0) + (lam_less(lambda, ry, rz) ? 1 : 0) +
          (lam_less(lambda, rz, rx) ? 1 : 0);
  return s == 2 ? 1 : -1; // two ascents = cyclically increasing
}

CircularOracle q_star_oracle(const SignOracle& lambda) {
  CircularOracle c;
  c.label = "qstar(" + lambda.label + ")";
  SignOracle lam = lambda;
  c.sign = [lam](const PSL2ZElement& x, const PSL2ZElement& y, const PSL2ZElement& z) {
    return q_star_sign(lam, x, y, z);
  };
  return c;
}

} // namespace ordkit
