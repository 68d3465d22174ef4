#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pq/bialgebra.hpp"

using namespace pq;

namespace {

// assemble (delta ⊗ 1)delta(X) as a 3-leg operator
GradedOperator delta_delta_3leg(int n, BasisTag tag) {
  GradedOperator r(n, 3, 0);
  bool first = true;
  for (const auto& [ab, c] : cobracket(n, tag))
    for (const auto& [uv, d] : cobracket(n, ab.first)) {
      GradedOperator term = koszul_tensor(
          koszul_tensor(Scalar(c * d) * sf(n, uv.first.first, uv.first.second),
                        sf(n, uv.second.first, uv.second.second)),
          sf(n, ab.second.first, ab.second.second));
      if (first) {
        r = GradedOperator(n, 3, term.parity());
        first = false;
      }
      r += term;
    }
  return r;
}

// signed cyclic rotation x⊗y⊗z -> z⊗x⊗y via conjugation with permutations
GradedOperator rotate3(int n, const GradedOperator& t) {
  GradedOperator p12 = embed_legs(super_permutation(n), 1, 3);
  GradedOperator p23 = embed_legs(super_permutation(n), 2, 3);
  GradedOperator r = p12 * p23;
  return r * t * (p23 * p12);
}

}  // namespace

TEST_CASE("s for n = 1") {
  TwoTensor s = fake_casimir(1);
  GradedOperator expect =
      koszul_tensor(Scalar(Rational(1, 2)) * sf(1, 1, 1),
                    elementary(1, 1, 1) + elementary(1, -1, -1)) +
      koszul_tensor(elementary(1, -1, 1), elementary(1, 1, -1));
  CHECK(s.op == expect);
  CHECK(s.op.parity() == 0);
}

TEST_CASE("expansion assembles to the stored operator") {
  for (int n = 1; n <= 3; ++n) {
    TwoTensor s = fake_casimir(n);
    CHECK(s.op == s.assembled_from_expansion());
    // first factors live in p_n, and every pair is parity-matched
    for (const auto& [x, y] : s.expansion) {
      CHECK(iota(x) == x);
      CHECK(x.parity() == y.parity());
    }
  }
}

TEST_CASE("classical yang-baxter equation") {
  for (int n = 1; n <= 3; ++n) {
    auto rep = verify_cybe(n);
    INFO("n = ", n);
    for (const auto& d : rep.details) INFO(d);
    CHECK(rep.pass);
  }
}

TEST_CASE("s is the canonical element of the supertrace pairing") {
  // sum_a X_a B(Y_a, Z) recovers the p_n-component of Z
  for (int n = 1; n <= 2; ++n) {
    TwoTensor s = fake_casimir(n);
    RowSpace<Rational> butterfly;
    for (const auto& b : butterfly_basis(n))
      butterfly.add(operator_row_rational(b));
    for (const auto& z : gl_basis(n)) {
      GradedOperator m(n, 1, z.parity());
      for (const auto& [x, y] : s.expansion) {
        Scalar c = supertrace_form(y, z);
        if (!c.is_zero()) m += c * x;
      }
      // z - m must be the butterfly component
      GradedOperator rest = z - m;
      CHECK((rest.is_zero() || butterfly.contains(operator_row_rational(rest))));
      CHECK((m.is_zero() || iota(m) == m));
    }
  }
}

TEST_CASE("cobracket closed form matches the bracket form") {
  for (int n = 1; n <= 3; ++n) {
    auto rep = verify_cobracket_via_s(n);
    INFO("n = ", n);
    for (const auto& d : rep.details) INFO(d);
    CHECK(rep.pass);
  }
}

TEST_CASE("cobracket is antisupersymmetric") {
  for (int n = 1; n <= 3; ++n) {
    GradedOperator p = super_permutation(n);
    for (const auto& [tag, x] : pn_basis(n)) {
      GradedOperator d = assemble_pn_two_tensor(n, cobracket(n, tag));
      if (d.is_zero()) continue;
      CHECK(p * d * p == -d);
    }
  }
}

TEST_CASE("co-jacobi identity") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& tag : pn_tags(n)) {
      GradedOperator dd = delta_delta_3leg(n, tag);
      GradedOperator r1 = rotate3(n, dd);
      CHECK((dd + r1 + rotate3(n, r1)).is_zero());
    }
}

TEST_CASE("cobracket is a 1-cocycle") {
  for (int n = 1; n <= 2; ++n) {
    GradedOperator s = fake_casimir(n).op;
    auto basis = pn_basis(n);
    for (const auto& [ta, x] : basis)
      for (const auto& [tb, y] : basis) {
        // delta([x,y]) from structure constants
        PnTwoTensor lhs_coeffs;
        for (const auto& [tc, c] : superbracket_pn(n, ta, tb))
          for (const auto& [key, d] : cobracket(n, tc)) {
            Rational& slot = lhs_coeffs[key];
            slot += c * d;
            if (slot == 0) lhs_coeffs.erase(key);
          }
        GradedOperator lhs = assemble_pn_two_tensor(n, lhs_coeffs);
        GradedOperator rhs =
            supercommutator(coproduct_classical(x), cobracket_via_s(n, y, s)) -
            Scalar((x.parity() && y.parity()) ? -1 : 1) *
                supercommutator(coproduct_classical(y), cobracket_via_s(n, x, s));
        CHECK(lhs == rhs);
      }
  }
}
