#pragma once

// The fraction field of the Laurent ring: elements of Q(q) in a canonical
// num/den form so that equality is a structural comparison.

#include "pq/scalar.hpp"

#include <utility>
#include <vector>

namespace pq {

namespace detail {

// Dense polynomial in q, coefficients from degree 0 up, no trailing zeros.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_from_scalar(const Scalar& s, int& shift) {
  // s = q^shift * poly with poly(0) != 0
  if (s.is_zero()) { shift = 0; return {}; }
  shift = s.lowest_exp();
  Poly p(s.highest_exp() - shift + 1, Rational(0));
  for (const auto& [e, c] : s.terms()) p[e - shift] = c;
  return p;
}

inline Scalar scalar_from_poly(const Poly& p, int shift) {
  Scalar s;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) s += Scalar::monomial((int)i + shift, p[i]);
  return s;
}

// Remainder of a by b (b nonzero), over Q.
inline Poly poly_rem(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    poly_trim(a);
  }
  return a;
}

// Exact quotient a/b; callers guarantee divisibility.
inline Poly poly_div_exact(Poly a, const Poly& b) {
  Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    quot[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    poly_trim(a);
  }
  return quot;
}

inline Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace detail

class Frac {
public:
  Frac() : num_(), den_(1) {}
  Frac(long v) : num_(v), den_(1) {}
  Frac(const Rational& v) : num_(v), den_(1) {}
  Frac(const Scalar& s) : num_(s), den_(1) {}
  Frac(const Scalar& num, const Scalar& den) : num_(num), den_(den) {
    canonicalize();
  }

  const Scalar& num() const { return num_; }
  const Scalar& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  Frac operator-() const { return Frac::raw(-num_, den_); }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.is_zero()) throw std::domain_error("zero denominator");
    return Frac(a.num_ * b.den_, a.den_ * b.num_);
  }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }
  Frac& operator/=(const Frac& o) { return *this = *this / o; }

  Frac pow(int k) const {
    if (k < 0) return Frac(1) / pow(-k);
    Frac r(1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  bool operator==(const Frac& a) const { return num_ == a.num_ && den_ == a.den_; }
  bool operator!=(const Frac& a) const { return !(*this == a); }
  bool operator<(const Frac& a) const {
    // arbitrary strict weak order, for use as a map key
    if (num_.terms() != a.num_.terms()) return num_.terms() < a.num_.terms();
    return den_.terms() < a.den_.terms();
  }

  Rational eval_at_one() const {
    Rational d = den_.eval_at_one();
    if (d == 0) throw std::domain_error("pole at q=1");
    return num_.eval_at_one() / d;
  }

  Rational eval_at(const Rational& x) const {
    Rational d = den_.eval_at(x);
    if (d == 0) throw std::domain_error("pole at evaluation point");
    return num_.eval_at(x) / d;
  }

  // Order of vanishing at q=1 (negative for a pole); throws on zero.
  int valuation_at_one() const {
    return num_.valuation_at_one() - den_.valuation_at_one();
  }

  bool has_pole_at_one() const {
    return !is_zero() && den_.eval_at_one() == 0;
  }

  // True if this is a Laurent polynomial (unit denominator).
  bool is_laurent() const { return den_ == Scalar(1); }
  Scalar as_laurent() const {
    if (!is_laurent()) throw std::domain_error("not a Laurent polynomial");
    return num_;
  }

  std::string str() const {
    if (den_ == Scalar(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

private:
  static Frac raw(Scalar n, Scalar d) {
    Frac f;
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    return f;
  }

  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) { den_ = Scalar(1); return; }
    int ns, ds;
    detail::Poly np = detail::poly_from_scalar(num_, ns);
    detail::Poly dp = detail::poly_from_scalar(den_, ds);
    detail::Poly g = detail::poly_gcd(np, dp);
    if (g.size() > 1) {
      np = detail::poly_div_exact(std::move(np), g);
      dp = detail::poly_div_exact(std::move(dp), g);
    }
    Rational lead = dp.back();
    for (auto& c : np) c /= lead;
    for (auto& c : dp) c /= lead;
    num_ = detail::scalar_from_poly(np, ns - ds);
    den_ = detail::scalar_from_poly(dp, 0);
  }

  Scalar num_;
  Scalar den_;
};

}  // namespace pq
