#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pq/periplectic.hpp"

using namespace pq;

TEST_CASE("iota is an involution") {
  for (int n = 1; n <= 3; ++n)
    for (int i = -n; i <= n; ++i) {
      if (i == 0) continue;
      for (int j = -n; j <= n; ++j) {
        if (j == 0) continue;
        GradedOperator e = elementary(n, i, j);
        CHECK(iota(iota(e)) == e);
        // iota(E_ij) = -(-1)^{p(i)(p(j)+1)} E_{-j,-i}
        int sgn = (parity_of_index(i) && !parity_of_index(j)) ? 1 : -1;
        CHECK(iota(e) == Scalar(sgn) * elementary(n, -j, -i));
      }
    }
}

TEST_CASE("sE matrices") {
  // sE_{i,-i} = 0 for i > 0
  CHECK(sf(1, 1, -1).is_zero());
  CHECK(sf(2, 2, -2).is_zero());
  // sE_{-1,1} = 2 E_{-1,1}
  CHECK(sf(1, -1, 1) == Scalar(2) * elementary(1, -1, 1));
  // sE_{11} = E_11 - E_{-1,-1}
  CHECK(sf(1, 1, 1) == elementary(1, 1, 1) - elementary(1, -1, -1));
  // symmetry relation sE_{ij} = -(-1)^{p(i)(p(j)+1)} sE_{-j,-i}
  int n = 2;
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j) {
      if (i == 0 || j == 0) continue;
      int sgn = (parity_of_index(i) && !parity_of_index(j)) ? 1 : -1;
      CHECK(sf(n, i, j) == Scalar(sgn) * sf(n, -j, -i));
    }
}

TEST_CASE("pn basis enumeration") {
  CHECK(pn_basis(1).size() == 2);
  CHECK(pn_basis(2).size() == 8);
  CHECK(pn_basis(3).size() == 18);
  for (int n = 1; n <= 3; ++n)
    for (const auto& [tag, op] : pn_basis(n)) {
      CHECK(iota(op) == op);
      CHECK(!op.is_zero());
    }
}

TEST_CASE("tag normalization") {
  CHECK(!normalize_tag(1, -1).has_value());
  auto t = normalize_tag(1, 2);  // flips to (-2,-1)
  REQUIRE(t.has_value());
  CHECK(t->first == BasisTag{-2, -1});
}

TEST_CASE("superbracket structure constants match the matrix oracle") {
  for (int n = 1; n <= 3; ++n) {
    auto tags = pn_tags(n);
    for (const auto& a : tags)
      for (const auto& b : tags) {
        GradedOperator lhs =
            supercommutator(sf(n, a.first, a.second), sf(n, b.first, b.second));
        GradedOperator rhs(n, 1, lhs.parity());
        for (const auto& [tag, c] : superbracket_pn(n, a, b))
          rhs += Scalar(c) * sf(n, tag.first, tag.second);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("butterfly basis") {
  auto b1 = butterfly_basis(1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == elementary(1, 1, 1) + elementary(1, -1, -1));
  CHECK(b1[1] == elementary(1, 1, -1));
  CHECK(butterfly_basis(2).size() == 8);
  CHECK(butterfly_basis(3).size() == 18);
}

TEST_CASE("supertrace form basics") {
  // pairing matrix nondegeneracy etc. is covered by verify_manin_triple
  CHECK(supertrace(elementary(2, 1, 1)) == Scalar(1));
  CHECK(supertrace(elementary(2, -1, -1)) == Scalar(-1));
  for (const auto& [ta, a] : pn_basis(2))
    for (const auto& [tb, b] : pn_basis(2))
      CHECK(supertrace_form(a, b).is_zero());
}

TEST_CASE("manin supertriple") {
  for (int n = 1; n <= 3; ++n) {
    auto rep = verify_manin_triple(n);
    INFO("n = ", n);
    for (const auto& d : rep.details) INFO(d);
    CHECK(rep.pass);
  }
}
