#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pq/frac.hpp"
#include "pq/scalar.hpp"

#include <random>

using namespace pq;

namespace {

std::mt19937 rng(20240817);

Scalar random_scalar() {
  std::uniform_int_distribution<int> exp(-4, 4), coeff(-6, 6), nterms(0, 5);
  Scalar s;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) s += Scalar::monomial(exp(rng), Rational(coeff(rng)));
  return s;
}

}  // namespace

TEST_CASE("basic ring identities") {
  Scalar q = Scalar::q();
  Scalar qi = Scalar::q(-1);
  CHECK((q - qi) * (q + qi) == Scalar::q(2) - Scalar::q(-2));
  CHECK(((q - qi) + (qi - q)).is_zero());
}

TEST_CASE("randomized distributivity and commutativity") {
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("eval_at_one is a ring homomorphism") {
  Scalar q = Scalar::q();
  CHECK((q - Scalar::q(-1)).eval_at_one() == 0);
  CHECK(((q + Scalar::q(-1)) * Scalar(Rational(1, 2)) - Scalar(1)).eval_at_one() == 0);
  CHECK(Scalar::q(3).eval_at_one() == 1);
  for (int trial = 0; trial < 100; ++trial) {
    Scalar a = random_scalar(), b = random_scalar();
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
  }
}

TEST_CASE("valuation and exact quotient at q=1") {
  Scalar eps = Scalar::epsilon();
  CHECK(eps.valuation_at_one() == 1);
  // q - q^-1 = q^-1 (q-1)(q+1)
  CHECK(eps.quotient_by_qminus1(1) == Scalar::q(-1) * (Scalar::q() + Scalar(1)));
  Scalar qm1 = Scalar::q() - Scalar(1);
  CHECK((qm1 * qm1).valuation_at_one() == 2);
  CHECK(Scalar::q().valuation_at_one() == 0);
  CHECK_THROWS_AS(Scalar::q().quotient_by_qminus1(1), std::domain_error);

  for (int trial = 0; trial < 100; ++trial) {
    Scalar a = random_scalar();
    if (a.is_zero()) continue;
    int v = a.valuation_at_one();
    for (int k = 0; k <= v; ++k)
      CHECK(a.quotient_by_qminus1(k) * qm1.pow(k) == a);
  }
}

TEST_CASE("frac canonicalization") {
  Scalar q = Scalar::q();
  // (q^2-1)/(q-1) -> q+1
  Frac f(q * q - Scalar(1), q - Scalar(1));
  CHECK(f == Frac(q + Scalar(1)));
  CHECK(f.is_laurent());

  CHECK_THROWS_AS(Frac(q, Scalar()), std::domain_error);

  for (int trial = 0; trial < 100; ++trial) {
    Scalar a = random_scalar(), b = random_scalar();
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(Frac(a, b) * Frac(b, a) == Frac(1));
    CHECK(Frac(a, b) + Frac(-a, b) == Frac(0));
  }
}

TEST_CASE("frac poles at q=1") {
  Scalar q = Scalar::q();
  Frac pole(Scalar(1), q - Scalar(1));
  CHECK(pole.has_pole_at_one());
  CHECK_THROWS_AS(pole.eval_at_one(), std::domain_error);
  Frac fine(q * q - Scalar(1), q + Scalar(1));
  CHECK(fine.eval_at_one() == 0);
  CHECK(Frac(Scalar::epsilon(), q - Scalar(1)).eval_at_one() == 2);
}

TEST_CASE("rendering and parsing round-trip") {
  Scalar s = Scalar::monomial(-2, Rational(3)) + Scalar(Rational(-1, 2)) + Scalar::q(3);
  CHECK(s.str() == "3*q^-2 - 1/2 + q^3");
  CHECK(Scalar::parse(s.str()) == s);
  CHECK(Scalar::parse("q") == Scalar::q());
  CHECK(Scalar::parse("-q^-1 + q") == Scalar::epsilon());
  CHECK(Scalar::parse("0").is_zero());
  CHECK_THROWS(Scalar::parse("3q +"));
  for (int trial = 0; trial < 100; ++trial) {
    Scalar a = random_scalar();
    CHECK(Scalar::parse(a.str()) == a);
  }
}
