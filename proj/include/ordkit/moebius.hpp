#pragma once

#include "ordkit/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace ordkit {

// Point of the boundary circle R u {inf}, homogeneous (num : den), normalized:
// gcd = 1, den >= 0, and den == 0 means inf (stored as (1 : 0)).
struct BPoint {
  Int num{0};
  Int den{1};

  BPoint() = default;
  BPoint(long long n) : num(n), den(1) {}
  BPoint(const Rat& r) : num(r.num), den(r.den) {}
  BPoint(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  static BPoint infinity() { BPoint p; p.num = 1; p.den = 0; return p; }

  void normalize() {
    if (den == 0) {
      if (num == 0) throw std::domain_error("indeterminate boundary point (0:0)");
      num = 1;
      return;
    }
    if (den < 0) { num = -num; den = -den; }
    Int g = gcd_int(boost::multiprecision::abs(num), den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_inf() const { return den == 0; }

  friend bool operator==(const BPoint& a, const BPoint& b) { return a.num == b.num && a.den == b.den; }

  std::string str() const { return is_inf() ? "inf" : (den == 1 ? num.str() : num.str() + "/" + den.str()); }
};

// det2(p, q) has the sign of q - p for finite points and extends projectively.
inline Int det2(const BPoint& p, const BPoint& q) { return q.num * p.den - p.num * q.den; }

// Orientation of an ordered triple on the circle: +1 counterclockwise
// (the increasing direction of R, wrapping through inf), -1 clockwise,
// 0 when any two coincide.
inline int circular_sign(const BPoint& p, const BPoint& q, const BPoint& r) {
  Int a = det2(p, q), b = det2(q, r), c = det2(p, r);
  return a.sign() * b.sign() * c.sign();
}

// Rank of a point in one full turn cut at 0: 0, then positive reals
// ascending, then inf, then negative reals ascending. Returns true when
// u comes strictly before v.
inline int turn_class(const BPoint& x) {
  if (x.is_inf()) return 2;
  int s = x.num.sign();
  if (s == 0) return 0;
  return s > 0 ? 1 : 3;
}

inline bool turn_less(const BPoint& u, const BPoint& v) {
  int cu = turn_class(u), cv = turn_class(v);
  if (cu != cv) return cu < cv;
  if (cu == 0 || cu == 2) return false;
  return det2(u, v) > 0;
}

// Element of PGL(2, Q) with positive determinant, acting on BPoint by
// z -> (az + b)/(cz + d). Normalized by content and leading sign, so equal
// maps compare equal.
struct MoebiusMap {
  Int a{1}, b{0}, c{0}, d{1};

  MoebiusMap() = default;
  MoebiusMap(Int a_, Int b_, Int c_, Int d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    normalize();
  }

  void normalize() {
    Int det = a * d - b * c;
    if (det <= 0) throw std::domain_error("moebius map must have positive determinant");
    Int g = gcd_int(gcd_int(boost::multiprecision::abs(a), boost::multiprecision::abs(b)),
                    gcd_int(boost::multiprecision::abs(c), boost::multiprecision::abs(d)));
    if (g > 1) { a /= g; b /= g; c /= g; d /= g; }
    const Int* lead = &a;
    if (*lead == 0) lead = &b;
    if (*lead == 0) lead = &c;
    if (*lead == 0) lead = &d;
    if (*lead < 0) { a = -a; b = -b; c = -c; d = -d; }
  }

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }

  BPoint apply(const BPoint& x) const { return BPoint(a * x.num + b * x.den, c * x.num + d * x.den); }

  MoebiusMap inverse() const { return MoebiusMap(d, -b, -c, a); }

  friend MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
    return MoebiusMap(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                      m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
  }

  friend bool operator==(const MoebiusMap& m, const MoebiusMap& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }

  bool is_identity() const { return b == 0 && c == 0 && a == d; }

  std::string str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
  }
};

// Boundary point with coordinate p + q*sqrt(D), D >= 0 not a perfect square
// when q != 0; den == 0 encodes inf. Closed under Moebius maps, which is all
// the periodic-point bookkeeping needs.
struct QuadPoint {
  bool inf{false};
  Rat p{0};
  Rat q{0};
  Int D{0};

  static QuadPoint infinity() { QuadPoint x; x.inf = true; return x; }
  static QuadPoint rational(const Rat& r) { QuadPoint x; x.p = r; return x; }
  static QuadPoint surd(const Rat& p_, const Rat& q_, const Int& D_) {
    QuadPoint x;
    x.p = p_;
    x.q = q_;
    x.D = D_;
    if (x.q.is_zero()) x.D = 0;
    return x;
  }

  bool is_rational() const { return !inf && q.is_zero(); }

  // sign of p + q*sqrt(D)
  static int surd_sign(const Rat& p, const Rat& q, const Int& D) {
    if (q.is_zero()) return p.sign();
    if (p.is_zero()) return q.sign();
    if (p.sign() == q.sign()) return p.sign();
    // compare p^2 against q^2 * D; the larger magnitude wins
    Rat p2 = p * p, q2d = q * q * Rat(D);
    if (p2 == q2d) return 0;
    return (p2 > q2d) ? p.sign() : q.sign();
  }

  int sign() const {
    if (inf) throw std::domain_error("sign of inf");
    return surd_sign(p, q, D);
  }

  QuadPoint moebius(const Int& a, const Int& b, const Int& c, const Int& d) const {
    if (inf) {
      if (c == 0) return infinity();
      return rational(Rat(a, c));
    }
    // numerator a*x + b, denominator c*x + d with x = p + q sqrt(D)
    Rat np = Rat(a) * p + Rat(b), nq = Rat(a) * q;
    Rat dp = Rat(c) * p + Rat(d), dq = Rat(c) * q;
    int dsign = surd_sign(dp, dq, D);
    if (dsign == 0) return infinity();
    // multiply by conjugate: (np + nq s)(dp - dq s) / (dp^2 - dq^2 D)
    Rat denom = dp * dp - dq * dq * Rat(D);
    Rat rp = (np * dp - nq * dq * Rat(D)) / denom;
    Rat rq = (nq * dp - np * dq) / denom;
    return surd(rp, rq, D);
  }

  QuadPoint apply(const MoebiusMap& m) const { return moebius(m.a, m.b, m.c, m.d); }

  friend bool operator==(const QuadPoint& x, const QuadPoint& y) {
    if (x.inf || y.inf) return x.inf == y.inf;
    if (x.q.is_zero() && y.q.is_zero()) return x.p == y.p;
    return x.p == y.p && x.q == y.q && x.D == y.D;
  }

  // difference sign within a shared quadratic field (or against a rational)
  friend int cmp_sign(const QuadPoint& x, const QuadPoint& y) {
    if (x.inf || y.inf) throw std::domain_error("cmp_sign with inf");
    if (!x.q.is_zero() && !y.q.is_zero() && x.D != y.D)
      throw std::domain_error("cmp_sign across different quadratic fields");
    Int D = x.q.is_zero() ? y.D : x.D;
    return surd_sign(x.p - y.p, x.q - y.q, D);
  }
};

inline int turn_class(const QuadPoint& x) {
  if (x.inf) return 2;
  int s = x.sign();
  if (s == 0) return 0;
  return s > 0 ? 1 : 3;
}

inline bool turn_less(const QuadPoint& u, const QuadPoint& v) {
  int cu = turn_class(u), cv = turn_class(v);
  if (cu != cv) return cu < cv;
  if (cu == 0 || cu == 2) return false;
  return cmp_sign(u, v) < 0;
}

}  // namespace ordkit
