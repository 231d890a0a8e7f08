#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace ordkit {

using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& v) { return v.sign(); }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Exact rational, always normalized: gcd(num, den) = 1, den > 0.
struct Rat {
  Int num{0};
  Int den{1};

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(Int n) : num(std::move(n)), den(1) {}
  Rat(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int g = gcd_int(boost::multiprecision::abs(num), den);
    if (g > 1) { num /= g; den /= g; }
  }

  int sign() const { return num.sign(); }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    Int l = a.num * b.den, r = b.num * a.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
  }
};

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// Dyadic rational num / 2^exp, normalized: exp >= 0, and num odd when exp > 0.
struct Dyadic {
  Int num{0};
  int exp{0};

  Dyadic() = default;
  Dyadic(long long n) : num(n), exp(0) {}
  Dyadic(Int n, int e) : num(std::move(n)), exp(e) { normalize(); }

  void normalize() {
    if (exp < 0) { num <<= -exp; exp = 0; }
    while (exp > 0 && num != 0 && (num & 1) == 0) { num >>= 1; --exp; }
    if (num == 0) exp = 0;
  }

  Rat to_rat() const { return Rat(num, Int(1) << exp); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    int e = std::max(a.exp, b.exp);
    return Dyadic((a.num << (e - a.exp)) + (b.num << (e - b.exp)), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    int e = std::max(a.exp, b.exp);
    return Dyadic((a.num << (e - a.exp)) - (b.num << (e - b.exp)), e);
  }
  Dyadic operator-() const { Dyadic d; d.num = -num; d.exp = exp; return d; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.exp == b.exp && a.num == b.num; }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int e = std::max(a.exp, b.exp);
    Int l = a.num << (e - a.exp), r = b.num << (e - b.exp);
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = num.str();
    if (exp > 0) s += "/2^" + std::to_string(exp);
    return s;
  }
};

inline Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  Dyadic s = a + b;
  return Dyadic(s.num, s.exp + 1);
}

}  // namespace ordkit
