#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pq/superspace.hpp"

#include <random>

using namespace pq;

namespace {

std::mt19937 rng(911);

// random homogeneous 1-leg operator of the requested parity
GradedOperator random_one_leg(int n, int parity) {
  std::uniform_int_distribution<int> idx(0, 2 * n - 1), coeff(-3, 3), cnt(1, 4);
  GradedOperator op(n, 1, parity);
  for (int t = 0; t < cnt(rng); ++t) {
    int r = idx(rng);
    for (int c = 0; c < 2 * n; ++c) {
      if (((ord_parity(n, r) + ord_parity(n, c)) & 1) != parity) continue;
      op.add_entry(r, c, Scalar(coeff(rng)));
      break;
    }
  }
  return op;
}

std::uint64_t basis_code2(int n, int a, int b) {
  return (std::uint64_t)index_ord(n, a) * (2 * n) + index_ord(n, b);
}

}  // namespace

TEST_CASE("elementary matrix units") {
  GradedOperator e = elementary(2, 1, 1);
  CHECK(e.entry(index_ord(2, 1), index_ord(2, 1)) == Scalar(1));
  CHECK(e.parity() == 0);
  CHECK(elementary(2, -1, 2).parity() == 1);
  // E_{12} kills e_1
  GradedOperator e12 = elementary(2, 1, 2);
  CHECK(e12.entry(index_ord(2, 1), index_ord(2, 1)).is_zero());
  CHECK_THROWS(elementary(2, 3, 1));
}

TEST_CASE("koszul tensor signs") {
  int n = 2;
  // odd ⊗ odd against an odd first vector picks up the sign
  GradedOperator t = koszul_tensor(elementary(n, 1, -1), elementary(n, 1, -1));
  CHECK(t.entry(basis_code2(n, 1, 1), basis_code2(n, -1, -1)) == Scalar(-1));
  // E_{-1,-1} is an even operator: no sign
  GradedOperator d = koszul_tensor(elementary(n, -1, -1), elementary(n, -1, -1));
  std::uint64_t k = basis_code2(n, -1, -1);
  CHECK(d.entry(k, k) == Scalar(1));

  GradedOperator even = koszul_tensor(elementary(n, 1, 1), elementary(n, 1, 1));
  std::uint64_t k2 = basis_code2(n, 1, 1);
  CHECK(even.entry(k2, k2) == Scalar(1));

  // identity tensor B acts as plain block action for even B
  GradedOperator bb = random_one_leg(n, 0);
  GradedOperator emb = koszul_tensor(GradedOperator::identity(n, 1), bb);
  for (const auto& [key, v] : bb.entries())
    for (int u = 0; u < 2 * n; ++u)
      CHECK(emb.entry((std::uint64_t)u * 2 * n + key.first,
                      (std::uint64_t)u * 2 * n + key.second) == v);
}

TEST_CASE("koszul tensor is associative") {
  int n = 2;
  for (int trial = 0; trial < 20; ++trial) {
    GradedOperator a = random_one_leg(n, trial % 2);
    GradedOperator b = random_one_leg(n, (trial / 2) % 2);
    GradedOperator c = random_one_leg(n, (trial / 4) % 2);
    CHECK(koszul_tensor(koszul_tensor(a, b), c) ==
          koszul_tensor(a, koszul_tensor(b, c)));
  }
}

TEST_CASE("super permutation") {
  int n = 2;
  GradedOperator p = super_permutation(n);
  CHECK(p.parity() == 0);
  // P(e_1 ⊗ e_{-1}) = e_{-1} ⊗ e_1
  CHECK(p.entry(basis_code2(n, -1, 1), basis_code2(n, 1, -1)) == Scalar(1));
  // both odd: sign -1
  CHECK(p.entry(basis_code2(n, -2, -1), basis_code2(n, -1, -2)) == Scalar(-1));
  CHECK(p * p == GradedOperator::identity(n, 2));
}

TEST_CASE("super permutation conjugation swaps factors") {
  int n = 2;
  GradedOperator p = super_permutation(n);
  for (int pa = 0; pa < 2; ++pa)
    for (int pb = 0; pb < 2; ++pb)
      for (int trial = 0; trial < 5; ++trial) {
        GradedOperator a = random_one_leg(n, pa), b = random_one_leg(n, pb);
        GradedOperator lhs = p * koszul_tensor(a, b) * p;
        GradedOperator rhs = koszul_tensor(b, a);
        if (pa && pb) rhs = -rhs;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("supercommutator conventions") {
  // [E_12, E_21] = E_11 - E_22 (even case)
  int n = 2;
  CHECK(supercommutator(elementary(n, 1, 2), elementary(n, 2, 1)) ==
        elementary(n, 1, 1) - elementary(n, 2, 2));
  // odd case: [E_{1,-1}, E_{-1,1}] = E_11 + E_{-1,-1}
  CHECK(supercommutator(elementary(1, 1, -1), elementary(1, -1, 1)) ==
        elementary(1, 1, 1) + elementary(1, -1, -1));
  GradedOperator a = random_one_leg(n, 1);
  CHECK(a * GradedOperator::identity(n, 1) == a);
}

TEST_CASE("embed_legs") {
  int n = 2;
  GradedOperator p = super_permutation(n);
  CHECK(embed_legs(p, 1, 2) == p);
  GradedOperator id2 = GradedOperator::identity(n, 2);
  CHECK(embed_legs(id2, 2, 4) == GradedOperator::identity(n, 4));
  CHECK_THROWS_AS(
      embed_legs(koszul_tensor(elementary(n, -1, 1), elementary(n, 1, 1)), 1, 3),
      std::logic_error);

  // distant embeddings of even operators commute
  for (int trial = 0; trial < 5; ++trial) {
    GradedOperator a = koszul_tensor(random_one_leg(n, 1), random_one_leg(n, 1));
    GradedOperator b = koszul_tensor(random_one_leg(n, 0), random_one_leg(n, 0));
    GradedOperator ea = embed_legs(a, 1, 4), eb = embed_legs(b, 3, 4);
    CHECK(ea * eb == eb * ea);
  }
}

TEST_CASE("place_two_leg agrees with embed_legs on adjacent legs") {
  int n = 2;
  for (int trial = 0; trial < 6; ++trial) {
    GradedOperator a = koszul_tensor(random_one_leg(n, 1), random_one_leg(n, 1)) +
                       koszul_tensor(random_one_leg(n, 0), random_one_leg(n, 0));
    CHECK(place_two_leg(a, 1, 2, 3) == embed_legs(a, 1, 3));
    CHECK(place_two_leg(a, 2, 3, 3) == embed_legs(a, 2, 3));
  }
}

TEST_CASE("gradedness is enforced and preserved") {
  int n = 1;
  GradedOperator op(n, 1, 0);
  CHECK_THROWS_AS(op.add_entry(index_ord(n, -1), index_ord(n, 1), Scalar(1)),
                  std::logic_error);
  GradedOperator a = random_one_leg(2, 1), b = random_one_leg(2, 1);
  CHECK((a * b).parity() == 0);
  CHECK(koszul_tensor(a, b).parity() == 0);
}
