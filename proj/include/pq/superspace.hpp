#pragma once

// The graded space C(n|n), sparse graded operators on its tensor powers,
// and the Koszul-sign tensor calculus.
//
// Basis order is fixed once: e_{-n},...,e_{-1},e_1,...,e_n.  Multi-indices
// on tensor powers are encoded row-major in that order.

#include "pq/scalar.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pq {

// p(i) = 1 for negative indices (odd basis vectors)
inline int parity_of_index(int i) { return i < 0 ? 1 : 0; }

// position of e_i in the basis order, in [0, 2n)
inline int index_ord(int n, int i) {
  if (i == 0 || i < -n || i > n) throw std::out_of_range("super index out of range");
  return i < 0 ? i + n : i + n - 1;
}

inline int ord_index(int n, int o) { return o < n ? o - n : o - n + 1; }

inline int ord_parity(int n, int o) { return o < n ? 1 : 0; }

inline std::uint64_t tensor_dim(int n, int legs) {
  std::uint64_t d = 1;
  for (int i = 0; i < legs; ++i) d *= 2 * n;
  return d;
}

inline int code_parity(int n, int legs, std::uint64_t code) {
  int p = 0;
  for (int i = 0; i < legs; ++i) {
    p += ord_parity(n, (int)(code % (2 * n)));
    code /= 2 * n;
  }
  return p & 1;
}

inline std::vector<int> code_digits(int n, int legs, std::uint64_t code) {
  std::vector<int> d(legs);
  for (int i = legs - 1; i >= 0; --i) {
    d[i] = (int)(code % (2 * n));
    code /= 2 * n;
  }
  return d;
}

inline std::uint64_t digits_code(int n, const std::vector<int>& d) {
  std::uint64_t c = 0;
  for (int x : d) c = c * (2 * n) + x;
  return c;
}

class GradedOperator {
public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;

  GradedOperator(int n, int legs, int parity)
      : GradedOperator(n, legs, legs, parity) {}

  GradedOperator(int n, int legs_out, int legs_in, int parity)
      : n_(n), legs_out_(legs_out), legs_in_(legs_in), parity_(parity & 1) {
    if (n < 1 || legs_out < 0 || legs_in < 0)
      throw std::invalid_argument("bad operator shape");
  }

  static GradedOperator identity(int n, int legs) {
    GradedOperator id(n, legs, 0);
    for (std::uint64_t i = 0; i < tensor_dim(n, legs); ++i)
      id.entries_[{i, i}] = Scalar(1);
    return id;
  }

  int n() const { return n_; }
  int legs() const {
    if (legs_out_ != legs_in_) throw std::logic_error("rectangular operator");
    return legs_in_;
  }
  int legs_out() const { return legs_out_; }
  int legs_in() const { return legs_in_; }
  int parity() const { return parity_; }
  bool is_square() const { return legs_out_ == legs_in_; }
  std::uint64_t rows() const { return tensor_dim(n_, legs_out_); }
  std::uint64_t cols() const { return tensor_dim(n_, legs_in_); }

  const std::map<Key, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  size_t nnz() const { return entries_.size(); }

  Scalar entry(std::uint64_t r, std::uint64_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Scalar() : it->second;
  }

  void add_entry(std::uint64_t r, std::uint64_t c, const Scalar& v) {
    if (v.is_zero()) return;
    if (((code_parity(n_, legs_out_, r) + code_parity(n_, legs_in_, c)) & 1) != parity_)
      throw std::logic_error("entry violates operator parity");
    Scalar& t = entries_[{r, c}];
    t += v;
    if (t.is_zero()) entries_.erase({r, c});
  }

  GradedOperator operator-() const {
    GradedOperator r = *this;
    for (auto& [k, v] : r.entries_) v = -v;
    return r;
  }

  friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) {
    a.check_same_shape(b);
    if (a.parity_ != b.parity_) throw std::logic_error("parity mismatch in add");
    for (const auto& [k, v] : b.entries_) {
      Scalar& t = a.entries_[k];
      t += v;
      if (t.is_zero()) a.entries_.erase(k);
    }
    return a;
  }
  friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
    return a + (-b);
  }
  GradedOperator& operator+=(const GradedOperator& o) { return *this = *this + o; }
  GradedOperator& operator-=(const GradedOperator& o) { return *this = *this - o; }

  friend GradedOperator operator*(const Scalar& c, const GradedOperator& a) {
    GradedOperator r(a.n_, a.legs_out_, a.legs_in_, a.parity_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.entries_) r.entries_[k] = c * v;
    return r;
  }

  // composition
  friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
    if (a.n_ != b.n_ || a.legs_in_ != b.legs_out_)
      throw std::logic_error("shape mismatch in compose");
    GradedOperator r(a.n_, a.legs_out_, b.legs_in_, (a.parity_ + b.parity_) & 1);
    // group b's entries by row for the join
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, const Scalar*>>> brows;
    for (const auto& [k, v] : b.entries_) brows[k.first].push_back({k.second, &v});
    for (const auto& [k, va] : a.entries_) {
      auto it = brows.find(k.second);
      if (it == brows.end()) continue;
      for (const auto& [c, vb] : it->second) {
        Scalar& t = r.entries_[{k.first, c}];
        t += va * (*vb);
        if (t.is_zero()) r.entries_.erase({k.first, c});
      }
    }
    return r;
  }

  bool operator==(const GradedOperator& o) const {
    return n_ == o.n_ && legs_out_ == o.legs_out_ && legs_in_ == o.legs_in_ &&
           entries_ == o.entries_;
  }
  bool operator!=(const GradedOperator& o) const { return !(*this == o); }

  // entrywise specialization at q=1
  GradedOperator eval_at_one() const {
    GradedOperator r(n_, legs_out_, legs_in_, parity_);
    for (const auto& [k, v] : entries_) {
      Rational x = v.eval_at_one();
      if (x != 0) r.entries_[k] = Scalar(x);
    }
    return r;
  }

  GradedOperator eval_at(const Rational& x) const {
    GradedOperator r(n_, legs_out_, legs_in_, parity_);
    for (const auto& [k, v] : entries_) {
      Rational y = v.eval_at(x);
      if (y != 0) r.entries_[k] = Scalar(y);
    }
    return r;
  }

  bool entries_q_free() const {
    for (const auto& [k, v] : entries_)
      if (v.terms().size() != 1 || v.terms().begin()->first != 0) return false;
    return true;
  }

private:
  void check_same_shape(const GradedOperator& o) const {
    if (n_ != o.n_ || legs_out_ != o.legs_out_ || legs_in_ != o.legs_in_)
      throw std::logic_error("shape mismatch");
  }

  int n_, legs_out_, legs_in_, parity_;
  std::map<Key, Scalar> entries_;
};

// The matrix unit E_{ij}, parity p(i)+p(j).
inline GradedOperator elementary(int n, int i, int j) {
  GradedOperator e(n, 1, (parity_of_index(i) + parity_of_index(j)) & 1);
  e.add_entry(index_ord(n, i), index_ord(n, j), Scalar(1));
  return e;
}

// (A tensor B)(v tensor w) = (-1)^{p(B) p(v)} Av tensor Bw
inline GradedOperator koszul_tensor(const GradedOperator& a, const GradedOperator& b) {
  if (a.n() != b.n()) throw std::logic_error("mismatched n in koszul_tensor");
  int n = a.n();
  GradedOperator r(n, a.legs_out() + b.legs_out(), a.legs_in() + b.legs_in(),
                   (a.parity() + b.parity()) & 1);
  std::uint64_t bro = tensor_dim(n, b.legs_out());
  std::uint64_t bci = tensor_dim(n, b.legs_in());
  for (const auto& [ka, va] : a.entries()) {
    int sign = (b.parity() && code_parity(n, a.legs_in(), ka.second)) ? -1 : 1;
    for (const auto& [kb, vb] : b.entries()) {
      Scalar v = va * vb;
      if (sign < 0) v = -v;
      r.add_entry(ka.first * bro + kb.first, ka.second * bci + kb.second, v);
    }
  }
  return r;
}

// A acting on legs (k, k+1) of an l-fold tensor power, identity elsewhere.
// Only defined for even A.
inline GradedOperator embed_legs(const GradedOperator& a, int k, int legs) {
  if (a.legs_out() != 2 || a.legs_in() != 2)
    throw std::logic_error("embed_legs expects a 2-leg operator");
  if (a.parity() != 0)
    throw std::logic_error("odd operator cannot be leg-embedded");
  if (k < 1 || k + 1 > legs) throw std::out_of_range("embed position out of range");
  GradedOperator r = a;
  if (k > 1) r = koszul_tensor(GradedOperator::identity(a.n(), k - 1), r);
  if (k + 1 < legs)
    r = koszul_tensor(r, GradedOperator::identity(a.n(), legs - k - 1));
  return r;
}

// A 1-leg homogeneous operator placed at leg k with Koszul signs.
inline GradedOperator embed_one_leg(const GradedOperator& a, int k, int legs) {
  if (a.legs_out() != 1 || a.legs_in() != 1)
    throw std::logic_error("embed_one_leg expects a 1-leg operator");
  if (k < 1 || k > legs) throw std::out_of_range("embed position out of range");
  int n = a.n();
  GradedOperator r(n, legs, a.parity());
  std::uint64_t pre = tensor_dim(n, k - 1);
  std::uint64_t post = tensor_dim(n, legs - k);
  for (const auto& [key, v] : a.entries()) {
    for (std::uint64_t u = 0; u < pre; ++u) {
      int sign = (a.parity() && code_parity(n, k - 1, u)) ? -1 : 1;
      Scalar sv = sign < 0 ? -v : v;
      for (std::uint64_t w = 0; w < post; ++w)
        r.add_entry((u * (std::uint64_t)(2 * n) + key.first) * post + w,
                    (u * (std::uint64_t)(2 * n) + key.second) * post + w, sv);
    }
  }
  return r;
}

// A 2-leg operator placed at legs (x, y), x < y, of an l-fold power, by
// expanding it into matrix-unit summands and embedding each factor.
inline GradedOperator place_two_leg(const GradedOperator& a, int x, int y, int legs) {
  if (a.legs_out() != 2 || a.legs_in() != 2)
    throw std::logic_error("place_two_leg expects a 2-leg operator");
  if (x >= y || x < 1 || y > legs) throw std::out_of_range("bad leg placement");
  int n = a.n();
  GradedOperator r(n, legs, a.parity());
  for (const auto& [key, v] : a.entries()) {
    auto rd = code_digits(n, 2, key.first);
    auto cd = code_digits(n, 2, key.second);
    int i1 = ord_index(n, rd[0]), j1 = ord_index(n, cd[0]);
    int i2 = ord_index(n, rd[1]), j2 = ord_index(n, cd[1]);
    // undo the Koszul application sign baked into the assembled entry:
    // entry = coeff * (-1)^{p(E_{i2 j2}) p(j1)}
    int p2 = (parity_of_index(i2) + parity_of_index(j2)) & 1;
    Scalar coeff = (p2 && parity_of_index(j1)) ? -v : v;
    GradedOperator t = embed_one_leg(coeff * elementary(n, i1, j1), x, legs) *
                       embed_one_leg(elementary(n, i2, j2), y, legs);
    for (const auto& [k2, v2] : t.entries()) r.add_entry(k2.first, k2.second, v2);
  }
  return r;
}

// P(e_a tensor e_b) = (-1)^{p(a)p(b)} e_b tensor e_a,
// realized as sum (-1)^{p(b)} E_{ab} tensor E_{ba}.
inline GradedOperator super_permutation(int n) {
  GradedOperator p(n, 2, 0);
  for (int a = -n; a <= n; ++a) {
    if (a == 0) continue;
    for (int b = -n; b <= n; ++b) {
      if (b == 0) continue;
      int sign = (parity_of_index(a) && parity_of_index(b)) ? -1 : 1;
      std::uint64_t row = (std::uint64_t)index_ord(n, b) * (2 * n) + index_ord(n, a);
      std::uint64_t col = (std::uint64_t)index_ord(n, a) * (2 * n) + index_ord(n, b);
      p.add_entry(row, col, Scalar(sign));
    }
  }
  return p;
}

// [A,B] = AB - (-1)^{p(A)p(B)} BA
inline GradedOperator supercommutator(const GradedOperator& a, const GradedOperator& b) {
  GradedOperator ba = b * a;
  if (a.parity() && b.parity()) return a * b + ba;
  return a * b - ba;
}

}  // namespace pq
