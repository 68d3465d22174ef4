#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pq/serialize.hpp"
#include "pq/smatrix.hpp"

#include <cstdio>
#include <fstream>

using namespace pq;

TEST_CASE("operator round trip") {
  for (int n = 1; n <= 2; ++n) {
    GradedOperator S = build_S(n).op;
    CHECK(operator_from_json(operator_to_json(S)) == S);
    GradedOperator P = super_permutation(n);
    CHECK(operator_from_json(operator_to_json(P)) == P);
  }
}

TEST_CASE("canonical form is sorted and stable") {
  GradedOperator S = build_S(2).op;
  auto j = operator_to_json(S);
  CHECK(j.dump() == operator_to_json(S).dump());
  // entries come out in row-major order
  std::pair<std::uint64_t, std::uint64_t> prev{0, 0};
  bool first = true;
  for (const auto& e : j["entries"]) {
    std::pair<std::uint64_t, std::uint64_t> cur{e[0].get<std::uint64_t>(),
                                                e[1].get<std::uint64_t>()};
    if (!first) CHECK(prev < cur);
    prev = cur;
    first = false;
  }
}

TEST_CASE("relation set round trip") {
  for (int n = 1; n <= 2; ++n) {
    RelationSet rels = extract_relations(n);
    RelationSet back = relations_from_json(relations_to_json(rels));
    REQUIRE(back.size() == rels.size());
    for (const auto& [idx, e] : rels) CHECK(back.at(idx) == e);
  }
}

TEST_CASE("file cache") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "pq-cache-test";
  std::filesystem::remove_all(dir);
  ObjectCache cache(dir);
  REQUIRE(cache.enabled());

  GradedOperator S = build_S(2).op;
  CHECK(!cache.get("smatrix", 2, 2).has_value());
  cache.put("smatrix", 2, 2, operator_to_json(S));
  auto got = cache.get("smatrix", 2, 2);
  REQUIRE(got.has_value());
  CHECK(operator_from_json(*got) == S);

  // a stale version is ignored
  {
    std::ofstream out(dir / "smatrix-n2-l2.json");
    out << "{\"version\": 0, \"payload\": {}}\n";
  }
  CHECK(!cache.get("smatrix", 2, 2).has_value());

  // a corrupt entry is discarded, not trusted
  {
    std::ofstream out(dir / "smatrix-n2-l2.json");
    out << "{not json";
  }
  CHECK(!cache.get("smatrix", 2, 2).has_value());

  ObjectCache disabled{std::filesystem::path()};
  CHECK(!disabled.enabled());
  std::filesystem::remove_all(dir);
}
