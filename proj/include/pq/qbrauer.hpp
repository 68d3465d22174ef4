#pragma once

// The periplectic q-Brauer algebra acting on tensor powers of C(n|n):
// the contraction pair (theta, epsilon), the hook operator c = epsilon o theta,
// the token representation t_i -> P_i S_{i,i+1} and c_i -> c_{i,i+1}, the
// defining-relation certification, and the span of evaluated words.

#include "pq/linalg.hpp"
#include "pq/smatrix.hpp"
#include "pq/uqpn.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace pq {

// theta(e_a tensor e_b) = delta_{a,-b} (-1)^{p(a)}, an odd map to the scalars
inline GradedOperator theta_map(int n) {
  GradedOperator th(n, 0, 2, 1);
  for (int a = -n; a <= n; ++a) {
    if (a == 0) continue;
    std::uint64_t col = (std::uint64_t)index_ord(n, a) * (2 * n) + index_ord(n, -a);
    th.add_entry(0, col, Scalar(parity_of_index(a) ? -1 : 1));
  }
  return th;
}

// epsilon(1) = sum_a e_a tensor e_{-a}, an odd map from the scalars
inline GradedOperator epsilon_map(int n) {
  GradedOperator ep(n, 2, 0, 1);
  for (int a = -n; a <= n; ++a) {
    if (a == 0) continue;
    std::uint64_t row = (std::uint64_t)index_ord(n, a) * (2 * n) + index_ord(n, -a);
    ep.add_entry(row, 0, Scalar(1));
  }
  return ep;
}

// c = sum_{a,b} (-1)^{p(a)p(b)} E_{ab} tensor E_{-a,-b}
inline GradedOperator build_c(int n) {
  GradedOperator c(n, 2, 0);
  for (int a = -n; a <= n; ++a) {
    if (a == 0) continue;
    for (int b = -n; b <= n; ++b) {
      if (b == 0) continue;
      int sign = (parity_of_index(a) && parity_of_index(b)) ? -1 : 1;
      c += koszul_tensor(Scalar(sign) * elementary(n, a, b), elementary(n, -a, -b));
    }
  }
  return c;
}

// theta and epsilon intertwine the generator actions: on two legs they match
// the trivial action (diagonal generators act as 1, the rest as 0), and the
// induced hook operators commute with the generator action on every power.
inline VerificationReport verify_module_homs(int n, int max_legs) {
  VerificationReport rep;
  rep.check = "contraction-module-maps";
  rep.params["n"] = std::to_string(n);
  rep.params["max_legs"] = std::to_string(max_legs);
  ReportTimer timer(rep);

  GradedOperator th = theta_map(n), ep = epsilon_map(n);
  Representation rho2 = representation(n, 2);
  for (const auto& g : generator_symbols(n)) {
    const GradedOperator& act = rho2.at(g);
    GradedOperator lhs_th = th * act;
    GradedOperator lhs_ep = act * ep;
    GradedOperator rhs_th = g.diagonal() ? th : GradedOperator(n, 0, 2, 1);
    GradedOperator rhs_ep = g.diagonal() ? ep : GradedOperator(n, 2, 0, 1);
    rep.record(lhs_th == rhs_th, "theta intertwines " + g.str());
    rep.record(lhs_ep == rhs_ep, "epsilon intertwines " + g.str());
  }

  GradedOperator c = build_c(n);
  GradedOperator ps = super_permutation(n) * build_S(n).op;
  for (int legs = 2; legs <= max_legs; ++legs) {
    Representation rho = representation(n, legs);
    for (int i = 1; i + 1 <= legs; ++i) {
      GradedOperator ci = embed_legs(c, i, legs);
      GradedOperator ti = embed_legs(ps, i, legs);
      for (const auto& g : generator_symbols(n)) {
        const GradedOperator& act = rho.at(g);
        rep.record((ci * act - act * ci).is_zero(),
                   "hook " + std::to_string(i) + " commutes with " + g.str() +
                       " on " + std::to_string(legs) + " legs");
        rep.record((ti * act - act * ti).is_zero(),
                   "braid token " + std::to_string(i) + " commutes with " + g.str() +
                       " on " + std::to_string(legs) + " legs");
      }
    }
  }
  return rep;
}

struct BrauerRep {
  int n = 0;
  int legs = 0;
  std::vector<GradedOperator> t;  // t[i-1] acts on legs (i, i+1)
  std::vector<GradedOperator> c;
};

inline BrauerRep brauer_rep(int n, int legs) {
  if (legs < 2) throw std::invalid_argument("brauer_rep needs at least two legs");
  BrauerRep rep;
  rep.n = n;
  rep.legs = legs;
  GradedOperator ps = super_permutation(n) * build_S(n).op;
  GradedOperator hook = build_c(n);
  for (int i = 1; i + 1 <= legs; ++i) {
    rep.t.push_back(embed_legs(ps, i, legs));
    rep.c.push_back(embed_legs(hook, i, legs));
  }
  return rep;
}

// The defining relations, checked on given token images with the two
// eigenvalues passed in so the q=1 degeneration reuses the same sweep.
inline void check_brauer_relations(const std::vector<GradedOperator>& t,
                                   const std::vector<GradedOperator>& c,
                                   const Scalar& q, const Scalar& qi,
                                   const std::string& label,
                                   VerificationReport& rep) {
  int m = (int)t.size();
  if (m == 0) return;
  GradedOperator id = GradedOperator::identity(t[0].n(), t[0].legs());
  Scalar eps = q - qi;
  for (int i = 0; i < m; ++i) {
    std::string at = label + " i=" + std::to_string(i + 1);
    rep.record(((t[i] - q * id) * (t[i] + qi * id)).is_zero(),
               "quadratic eigenvalue relation, " + at);
    rep.record((c[i] * c[i]).is_zero(), "hook squares to zero, " + at);
    rep.record((c[i] * t[i] + qi * c[i]).is_zero(), "hook absorbs braid on the right, " + at);
    rep.record((t[i] * c[i] - q * c[i]).is_zero(), "braid absorbs into hook on the left, " + at);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (std::abs(i - j) < 2) continue;
      std::string at = label + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
      rep.record((t[i] * t[j] - t[j] * t[i]).is_zero(), "distant braids commute, " + at);
      rep.record((t[i] * c[j] - c[j] * t[i]).is_zero(), "distant braid and hook commute, " + at);
      rep.record((c[i] * c[j] - c[j] * c[i]).is_zero(), "distant hooks commute, " + at);
    }
  for (int i = 0; i + 1 < m; ++i) {
    std::string at = label + " i=" + std::to_string(i + 1);
    rep.record((t[i] * t[i + 1] * t[i] - t[i + 1] * t[i] * t[i + 1]).is_zero(),
               "braid relation, " + at);
    rep.record((c[i + 1] * c[i] * c[i + 1] + c[i + 1]).is_zero(),
               "hook triple collapses (outer), " + at);
    rep.record((c[i] * c[i + 1] * c[i] + c[i]).is_zero(),
               "hook triple collapses (inner), " + at);
    rep.record((t[i] * c[i + 1] * c[i] + t[i + 1] * c[i] - eps * c[i + 1] * c[i]).is_zero(),
               "mixed braid-hook relation, " + at);
    rep.record((c[i + 1] * c[i] * t[i + 1] + c[i + 1] * t[i] - eps * c[i + 1] * c[i]).is_zero(),
               "mixed hook-braid relation, " + at);
  }
}

// Certify the presentation on the tensor representation, the two-leg
// absorption identities behind it, and the q=1 degeneration.
inline VerificationReport verify_brauer_relations(int n, int legs) {
  VerificationReport rep;
  rep.check = "brauer-relations";
  rep.params["n"] = std::to_string(n);
  rep.params["legs"] = std::to_string(legs);
  ReportTimer timer(rep);

  GradedOperator S = build_S(n).op;
  GradedOperator P = super_permutation(n);
  GradedOperator c = build_c(n);
  GradedOperator id2 = GradedOperator::identity(n, 2);
  Scalar q = Scalar::q(), qi = Scalar::q(-1), one(1);
  rep.record(c * S == qi * c, "hook absorbs S");
  rep.record((S - id2) * c == (q - one) * c, "S shifts the hook");
  rep.record(c * P == -c, "hook flips sign against the permutation");
  rep.record(P * c == c, "permutation fixes the hook");

  BrauerRep br = brauer_rep(n, legs);
  check_brauer_relations(br.t, br.c, q, qi, "symbolic", rep);

  std::vector<GradedOperator> t1, c1;
  for (const auto& op : br.t) t1.push_back(op.eval_at_one());
  for (const auto& op : br.c) c1.push_back(op.eval_at_one());
  check_brauer_relations(t1, c1, Scalar(1), Scalar(1), "q=1", rep);
  return rep;
}

// The eight-family expansion of the composite P S.
inline VerificationReport verify_PS_formula(int n) {
  VerificationReport rep;
  rep.check = "braid-token-expansion";
  rep.params["n"] = std::to_string(n);
  ReportTimer timer(rep);

  Scalar q = Scalar::q(), qi = Scalar::q(-1), one(1);
  GradedOperator sum(n, 2, 0);
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      Scalar sj(parity_of_index(j) ? -1 : 1);
      sum += koszul_tensor(sj * elementary(n, i, j), elementary(n, j, i));
    }
  }
  for (int i = 1; i <= n; ++i) {
    sum += koszul_tensor((q - one) * elementary(n, -i, i), elementary(n, i, -i));
    sum += koszul_tensor((q - one) * elementary(n, i, i), elementary(n, i, i));
    sum -= koszul_tensor((qi - one) * elementary(n, i, -i), elementary(n, -i, i));
    sum -= koszul_tensor((qi - one) * elementary(n, -i, -i), elementary(n, -i, -i));
    sum += koszul_tensor((q - qi) * elementary(n, i, i), elementary(n, -i, -i));
  }
  for (int ai = 2; ai <= n; ++ai)
    for (int aj = 1; aj < ai; ++aj)
      for (int i : {ai, -ai})
        for (int j : {aj, -aj}) {
          sum += koszul_tensor((q - qi) * elementary(n, j, j), elementary(n, i, i));
          Scalar s(parity_of_index(i) && parity_of_index(j) ? -1 : 1);
          sum += koszul_tensor((q - qi) * s * elementary(n, j, i),
                               elementary(n, -j, -i));
        }

  GradedOperator ps = super_permutation(n) * build_S(n).op;
  rep.record(sum == ps, "eight-family expansion equals the composite");
  rep.record(ps.eval_at_one() == super_permutation(n),
             "composite degenerates to the permutation at q = 1");
  return rep;
}

struct BrauerToken {
  bool hook = false;  // false: braid token t_i; true: hook token c_i
  int pos = 0;        // 1-based leg position

  auto key() const { return std::make_pair(hook, pos); }
  bool operator<(const BrauerToken& o) const { return key() < o.key(); }
  bool operator==(const BrauerToken& o) const { return key() == o.key(); }
};

using BrauerWord = std::vector<BrauerToken>;

inline std::string word_to_string(const BrauerWord& w) {
  std::string s;
  for (const auto& tok : w) {
    if (!s.empty()) s += ' ';
    s += (tok.hook ? 'c' : 't');
    s += std::to_string(tok.pos);
  }
  return s.empty() ? "(empty)" : s;
}

inline GradedOperator evaluate_word(const BrauerRep& rep, const BrauerWord& w) {
  GradedOperator out = GradedOperator::identity(rep.n, rep.legs);
  for (const auto& tok : w) {
    if (tok.pos < 1 || tok.pos + 1 > rep.legs)
      throw std::out_of_range("token position out of range");
    out = out * (tok.hook ? rep.c[tok.pos - 1] : rep.t[tok.pos - 1]);
  }
  return out;
}

struct ImageSpan {
  std::vector<BrauerWord> basis_words;
  RowSpace<Frac> space;
  size_t dimension = 0;
};

// Span of all evaluated words, enumerated length-lexicographically (braid
// tokens before hooks, positions ascending) until a whole length level adds
// no new rank.
inline ImageSpan image_span(const BrauerRep& rep, int max_len = 10) {
  std::vector<BrauerToken> alphabet;
  for (int i = 1; i + 1 <= rep.legs; ++i) alphabet.push_back({false, i});
  for (int i = 1; i + 1 <= rep.legs; ++i) alphabet.push_back({true, i});

  ImageSpan span;
  std::vector<BrauerWord> level = {{}};
  for (int len = 0; len <= max_len; ++len) {
    bool grew = false;
    for (const auto& w : level) {
      if (span.space.add(operator_row<Frac>(evaluate_word(rep, w)))) {
        span.basis_words.push_back(w);
        grew = true;
      }
    }
    if (!grew && len > 0) break;
    std::vector<BrauerWord> next;
    for (const auto& w : level)
      for (const auto& tok : alphabet) {
        BrauerWord e = w;
        e.push_back(tok);
        next.push_back(std::move(e));
      }
    level = std::move(next);
  }
  span.dimension = span.space.rank();
  return span;
}

}  // namespace pq
