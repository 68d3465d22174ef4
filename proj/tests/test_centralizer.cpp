#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pq/centralizer.hpp"

using namespace pq;

TEST_CASE("commutant of the identity is the full matrix algebra") {
  for (int n = 1; n <= 2; ++n) {
    CommutantProblem p;
    p.n = n;
    p.legs = 2;
    p.side = "identity";
    p.generators = {GradedOperator::identity(n, 2)};
    CommutantBasis b = solve_commutant(p);
    std::uint64_t dim = tensor_dim(n, 2);
    CHECK(b.dimension == dim * dim);
    CHECK(b.dimension_by_parity[0] == dim * dim / 2);
    CHECK(b.dimension_by_parity[1] == dim * dim / 2);
    CHECK(!b.evaluation_verified);
  }
}

TEST_CASE("commutant basis elements supercommute exactly") {
  CommutantProblem p = uqpn_problem(2, 2);
  CommutantBasis b = solve_commutant(p);
  CHECK(b.dimension == 3);
  for (const auto& x : b.basis) CHECK(supercommutes_with_all(x, p.generators));
}

TEST_CASE("quantum and classical commutant dimensions agree") {
  for (auto [n, legs] : {std::pair{1, 2}, {2, 2}, {2, 3}}) {
    CommutantBasis cq = solve_commutant(uqpn_problem(n, legs));
    CommutantBasis cc = solve_commutant(classical_problem(n, legs));
    INFO("n = ", n, ", legs = ", legs);
    CHECK(cq.dimension == cc.dimension);
    CHECK(cq.dimension_by_parity == cc.dimension_by_parity);
  }
}

TEST_CASE("brauer image exhausts the centralizer") {
  for (auto [n, legs] : {std::pair{1, 2}, {2, 2}, {2, 3}}) {
    auto rep = verify_brauer_centralizer(n, legs);
    INFO("n = ", n, ", legs = ", legs);
    for (const auto& d : rep.details) INFO(d);
    CHECK(rep.pass);
  }
  // the three-leg centralizer at n=2 has the expected word-count dimension
  CHECK(solve_commutant(uqpn_problem(2, 3)).dimension == 15);
}

TEST_CASE("commutant is stable under adjoining pairwise products") {
  CommutantProblem p = uqpn_problem(2, 2);
  CommutantProblem q = p;
  for (const auto& a : p.generators)
    for (const auto& b : p.generators) q.generators.push_back(a * b);
  CHECK(solve_commutant(p).dimension == solve_commutant(q).dimension);
}

TEST_CASE("evaluation-verified mode under a tight budget") {
  CommutantBasis b = solve_commutant(uqpn_problem(2, 2), /*budget=*/16);
  CHECK(b.evaluation_verified);
  CHECK(b.dimension == 3);
  CHECK(b.basis.empty());
}

TEST_CASE("double centralizer measurements") {
  for (auto [n, legs] : {std::pair{1, 2}, {2, 2}}) {
    auto rep = verify_double_centralizer(n, legs);
    INFO("n = ", n, ", legs = ", legs);
    for (const auto& d : rep.details) INFO(d);
    CHECK(rep.pass);
  }
}
