#pragma once

// The classical layer: gl(n|n), the involution iota, the periplectic
// algebra p_n with its sE-basis, the butterfly algebra b_n, the supertrace
// form and the Manin-supertriple checks.

#include "pq/linalg.hpp"
#include "pq/report.hpp"
#include "pq/superspace.hpp"

#include <map>
#include <utility>
#include <vector>

namespace pq {

// iota(X) = -pi(X^st) applied entrywise:
// E_{ij} -> -(-1)^{p(i)(p(j)+1)} E_{-j,-i}
inline GradedOperator iota(const GradedOperator& x) {
  if (x.legs_out() != 1 || x.legs_in() != 1)
    throw std::logic_error("iota expects a 1-leg operator");
  int n = x.n();
  GradedOperator r(n, 1, x.parity());
  for (const auto& [k, v] : x.entries()) {
    int i = ord_index(n, (int)k.first);
    int j = ord_index(n, (int)k.second);
    int sign = (parity_of_index(i) && !parity_of_index(j)) ? 1 : -1;
    r.add_entry(index_ord(n, -j), index_ord(n, -i), sign < 0 ? -v : v);
  }
  return r;
}

// sE_{ij} = E_{ij} + iota(E_{ij}) = E_{ij} - (-1)^{p(i)(p(j)+1)} E_{-j,-i}
inline GradedOperator sf(int n, int i, int j) {
  GradedOperator e = elementary(n, i, j);
  return e + iota(e);
}

// Basis tags (i,j) for p_n: 1<=|j|<|i|<=n, or 1<=i=j<=n, or i=-j<0.
using BasisTag = std::pair<int, int>;

inline std::vector<BasisTag> pn_tags(int n) {
  std::vector<BasisTag> tags;
  for (int ai = 1; ai <= n; ++ai)
    for (int si : {-1, 1})
      for (int aj = 1; aj < ai; ++aj)
        for (int sj : {-1, 1}) tags.push_back({si * ai, sj * aj});
  for (int i = 1; i <= n; ++i) tags.push_back({i, i});
  for (int i = 1; i <= n; ++i) tags.push_back({-i, i});
  return tags;
}

inline std::vector<std::pair<BasisTag, GradedOperator>> pn_basis(int n) {
  std::vector<std::pair<BasisTag, GradedOperator>> basis;
  for (const auto& t : pn_tags(n)) basis.push_back({t, sf(n, t.first, t.second)});
  return basis;
}

// Rewrite sE_{ij} as a multiple of a canonical basis tag (or zero).
// Uses sE_{ij} = -(-1)^{p(i)(p(j)+1)} sE_{-j,-i}.
inline std::optional<std::pair<BasisTag, int>> normalize_tag(int i, int j) {
  auto canonical = [](int i, int j) {
    int ai = std::abs(i), aj = std::abs(j);
    return (aj < ai) || (i == j && i > 0) || (i == -j && i < 0);
  };
  if (i == -j && i > 0) return std::nullopt;  // sE_{i,-i} = 0 for i > 0
  if (canonical(i, j)) return std::make_pair(BasisTag{i, j}, 1);
  int sign = (parity_of_index(i) && !parity_of_index(j)) ? 1 : -1;
  BasisTag t{-j, -i};
  if (!canonical(t.first, t.second)) throw std::logic_error("tag normalization failed");
  return std::make_pair(t, sign);
}

// Structure constants of [sE_{ji}, sE_{lk}] in the canonical tag basis.
// First argument is the tag (j,i), second is (l,k).
inline std::map<BasisTag, Rational> superbracket_pn(int n, BasisTag a, BasisTag b) {
  int j = a.first, i = a.second, l = b.first, k = b.second;
  std::map<BasisTag, Rational> out;
  auto accumulate = [&](int x, int y, int sgn) {
    auto norm = normalize_tag(x, y);
    if (!norm) return;
    Rational& c = out[norm->first];
    c += sgn * norm->second;
    if (c == 0) out.erase(norm->first);
  };
  if (i == l) accumulate(j, k, 1);
  if (j == k) {
    int s = ((parity_of_index(i) + parity_of_index(j)) & 1) &&
                    ((parity_of_index(k) + parity_of_index(l)) & 1)
                ? -1
                : 1;
    accumulate(l, i, -s);
  }
  if (i == -k) {
    int s = (parity_of_index(l) && !parity_of_index(k)) ? -1 : 1;
    accumulate(j, -l, -s);
  }
  if (-j == l) {
    int s = (parity_of_index(j) && !parity_of_index(i)) ? -1 : 1;
    accumulate(-i, k, -s);
  }
  (void)n;
  return out;
}

inline std::vector<GradedOperator> butterfly_basis(int n) {
  std::vector<GradedOperator> basis;
  for (int ai = 1; ai <= n; ++ai)
    for (int si : {-1, 1})
      for (int aj = ai + 1; aj <= n; ++aj)
        for (int sj : {-1, 1}) basis.push_back(elementary(n, si * ai, sj * aj));
  for (int i = 1; i <= n; ++i)
    basis.push_back(elementary(n, i, i) + elementary(n, -i, -i));
  for (int i = 1; i <= n; ++i) basis.push_back(elementary(n, i, -i));
  return basis;
}

// Str(AB) with Str(E_ii) = (-1)^{p(i)}
inline Scalar supertrace(const GradedOperator& a) {
  if (a.legs_out() != 1 || a.legs_in() != 1)
    throw std::logic_error("supertrace expects a 1-leg operator");
  Scalar t;
  for (const auto& [k, v] : a.entries()) {
    if (k.first != k.second) continue;
    int i = ord_index(a.n(), (int)k.first);
    t += parity_of_index(i) ? -v : v;
  }
  return t;
}

inline Scalar supertrace_form(const GradedOperator& a, const GradedOperator& b) {
  return supertrace(a * b);
}

inline std::vector<GradedOperator> gl_basis(int n) {
  std::vector<GradedOperator> basis;
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      basis.push_back(elementary(n, i, j));
    }
  }
  return basis;
}

inline VerificationReport verify_manin_triple(int n) {
  VerificationReport rep;
  rep.check = "manin-supertriple";
  rep.params["n"] = std::to_string(n);
  ReportTimer timer(rep);

  auto pn = pn_basis(n);
  auto bn = butterfly_basis(n);

  rep.record(pn.size() == (size_t)(2 * n * n), "dim p_n = 2n^2");
  rep.record(bn.size() == (size_t)(2 * n * n), "dim b_n = 2n^2");

  // transversality: together they span gl(n|n)
  RowSpace<Rational> joint;
  for (const auto& [tag, op] : pn) joint.add(operator_row_rational(op));
  for (const auto& op : bn) joint.add(operator_row_rational(op));
  rep.record(joint.rank() == (size_t)(4 * n * n),
             "p_n + b_n spans gl(n|n), intersection zero");

  // each summand is a subalgebra
  RowSpace<Rational> pn_span, bn_span;
  for (const auto& [tag, op] : pn) pn_span.add(operator_row_rational(op));
  for (const auto& op : bn) bn_span.add(operator_row_rational(op));
  bool pn_closed = true, bn_closed = true;
  for (const auto& [ta, a] : pn)
    for (const auto& [tb, b] : pn)
      pn_closed = pn_closed &&
                  pn_span.contains(operator_row_rational(supercommutator(a, b)));
  for (const auto& a : bn)
    for (const auto& b : bn)
      bn_closed = bn_closed &&
                  bn_span.contains(operator_row_rational(supercommutator(a, b)));
  rep.record(pn_closed, "p_n closed under superbracket");
  rep.record(bn_closed, "b_n closed under superbracket");

  // isotropy
  bool pn_iso = true, bn_iso = true;
  for (const auto& [ta, a] : pn)
    for (const auto& [tb, b] : pn)
      pn_iso = pn_iso && supertrace_form(a, b).is_zero();
  for (const auto& a : bn)
    for (const auto& b : bn) bn_iso = bn_iso && supertrace_form(a, b).is_zero();
  rep.record(pn_iso, "B vanishes on p_n x p_n");
  rep.record(bn_iso, "B vanishes on b_n x b_n");

  // supersymmetry and ad-invariance of B on gl(n|n)
  auto gl = gl_basis(n);
  bool symm = true, adinv = true;
  for (const auto& a : gl)
    for (const auto& b : gl) {
      Scalar lhs = supertrace_form(a, b);
      Scalar rhs = supertrace_form(b, a);
      if (a.parity() && b.parity()) rhs = -rhs;
      symm = symm && lhs == rhs;
    }
  for (const auto& a : gl)
    for (const auto& b : gl)
      for (const auto& c : gl)
        adinv = adinv && supertrace_form(supercommutator(a, b), c) ==
                             supertrace_form(a, supercommutator(b, c));
  rep.record(symm, "B supersymmetric");
  rep.record(adinv, "B ad-invariant");

  // the pairing between p_n and b_n is non-degenerate
  RowSpace<Rational> pairing;
  size_t rows = 0;
  for (const auto& [tag, x] : pn) {
    SparseRow<Rational> row;
    for (size_t c = 0; c < bn.size(); ++c) {
      Scalar v = supertrace_form(x, bn[c]);
      if (!v.is_zero()) row[c] = v.terms().begin()->second;
    }
    if (pairing.add(std::move(row))) ++rows;
  }
  rep.record(rows == pn.size(), "pairing between p_n and b_n non-degenerate");

  return rep;
}

}  // namespace pq
