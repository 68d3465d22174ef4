#pragma once

// Exact Laurent polynomials in q with arbitrary-precision rational
// coefficients.  This is the scalar ring everything else is built on.

#include <gmpxx.h>

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pq {

using Rational = mpq_class;

class Scalar {
public:
  Scalar() = default;
  Scalar(long v) { if (v != 0) terms_[0] = Rational(v); }
  Scalar(const Rational& v) { if (v != 0) terms_[0] = v; }

  // q^e
  static Scalar q(int e = 1) { return monomial(e, Rational(1)); }

  static Scalar monomial(int exp, const Rational& coeff) {
    Scalar s;
    if (coeff != 0) s.terms_[exp] = coeff;
    return s;
  }

  // q - q^-1
  static Scalar epsilon() { return q(1) - q(-1); }

  bool is_zero() const { return terms_.empty(); }

  const std::map<int, Rational>& terms() const { return terms_; }

  Rational coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int lowest_exp() const {
    if (is_zero()) throw std::logic_error("lowest_exp of zero");
    return terms_.begin()->first;
  }
  int highest_exp() const {
    if (is_zero()) throw std::logic_error("highest_exp of zero");
    return terms_.rbegin()->first;
  }

  Scalar& operator+=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar operator-() const {
    Scalar r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Rational& t = r.terms_[ea + eb];
        t += ca * cb;
      }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
      it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator*(const Rational& c, const Scalar& a) {
    return Scalar(c) * a;
  }

  Scalar pow(int k) const {
    if (k < 0) throw std::logic_error("Scalar::pow negative exponent");
    Scalar r(1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Rational eval_at_one() const {
    Rational r(0);
    for (const auto& [e, c] : terms_) r += c;
    return r;
  }

  Rational eval_at(const Rational& x) const {
    if (x == 0) throw std::domain_error("cannot evaluate Laurent polynomial at 0");
    Rational r(0);
    for (const auto& [e, c] : terms_) r += c * rational_pow(x, e);
    return r;
  }

  // Multiplicity of the root q=1; undefined (throws) on the zero polynomial.
  int valuation_at_one() const {
    if (is_zero()) throw std::logic_error("valuation_at_one of zero");
    int v = 0;
    Scalar cur = *this;
    while (cur.eval_at_one() == 0) {
      cur = cur.quotient_by_qminus1(1);
      ++v;
    }
    return v;
  }

  // Exact quotient by (q-1)^k; throws if the division is not exact.
  Scalar quotient_by_qminus1(int k) const {
    Scalar cur = *this;
    for (int i = 0; i < k; ++i) {
      if (cur.is_zero()) break;
      if (cur.eval_at_one() != 0)
        throw std::domain_error("not divisible by (q-1)");
      // Synthetic division: if f = (q-1) g then g's coefficient at q^{e-1}
      // is the partial sum of f's coefficients from the top down to q^e.
      int low = cur.lowest_exp();
      int high = cur.highest_exp();
      Scalar next;
      Rational carry(0);
      for (int e = high; e > low; --e) {
        carry += cur.coeff(e);
        if (carry != 0) next.terms_[e - 1] = carry;
      }
      cur = next;
    }
    return cur;
  }

  static Rational rational_pow(const Rational& x, int e) {
    Rational r(1), b = x;
    bool inv = e < 0;
    unsigned long k = inv ? -(long)e : (long)e;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    if (inv) return Rational(1) / r;
    return r;
  }

  // "3*q^-2 - 1/2 + q^3", exponents ascending
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (e == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

  static Scalar parse(std::string_view text);

private:
  std::map<int, Rational> terms_;
};

inline Scalar operator*(const Scalar& a, long b) { return a * Scalar(b); }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

namespace detail {

struct ScalarParser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; }

  bool eof() { skip_ws(); return pos >= s.size(); }

  char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected integer");
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    return std::strtol(std::string(s.substr(start, pos - start)).c_str(), nullptr, 10);
  }

  Rational parse_rational_digits() {
    skip_ws();
    size_t start = pos;
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected number");
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    Rational num(std::string(s.substr(start, pos - start)));
    if (peek() == '/') {
      ++pos;
      skip_ws();
      size_t d0 = pos;
      if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected denominator");
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      Rational den(std::string(s.substr(d0, pos - d0)));
      if (den == 0) fail("zero denominator");
      num /= den;
    }
    num.canonicalize();
    return num;
  }

  // term := [rational ['*']] ['q' ['^' int]]
  Scalar parse_term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit((unsigned char)peek())) {
      coeff = parse_rational_digits();
      have_coeff = true;
      if (peek() == '*') ++pos;
    }
    int exp = 0;
    if (peek() == 'q') {
      ++pos;
      exp = 1;
      if (peek() == '^') {
        ++pos;
        exp = (int)parse_int();
      }
    } else if (!have_coeff) {
      fail("expected term");
    }
    return Scalar::monomial(exp, coeff);
  }

  Scalar parse_sum() {
    Scalar result;
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos; }
    else if (peek() == '+') ++pos;
    while (true) {
      Scalar t = parse_term();
      result += neg ? -t : t;
      if (eof()) break;
      char c = peek();
      if (c == '+') { neg = false; ++pos; }
      else if (c == '-') { neg = true; ++pos; }
      else fail("unexpected character");
    }
    return result;
  }
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  detail::ScalarParser p{text};
  if (p.eof()) throw std::invalid_argument("empty scalar");
  return p.parse_sum();
}

}  // namespace pq
