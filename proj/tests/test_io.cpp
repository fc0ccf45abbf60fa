#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "facering/betti.hpp"
#include "facering/errors.hpp"
#include "facering/generators.hpp"
#include "facering/io.hpp"
#include "facering/report.hpp"
#include "fixtures.hpp"

using namespace facering;

TEST_CASE("complex documents") {
  CHECK(to_document(fixtures::boundary_triangle()) == R"({"n":3,"facets":[[1,2],[1,3],[2,3]]})");
  CHECK(to_document(SimplicialComplex::irrelevant(3)) == R"({"n":3,"facets":[]})");
  CHECK(to_document(SimplicialComplex::void_complex(3)) == R"({"n":3,"facets":[],"void":true})");

  const auto parsed = parse_document(R"({"n":3,"facets":[[2,3],[1,2],[1,3],[1]]})");
  REQUIRE(std::holds_alternative<SimplicialComplex>(parsed));
  CHECK(std::get<SimplicialComplex>(parsed) == fixtures::boundary_triangle());
  CHECK(std::get<SimplicialComplex>(parse_document(R"({"n":2,"facets":[]})")).is_irrelevant());
  CHECK(std::get<SimplicialComplex>(parse_document(R"({"n":2,"facets":[[]]})")).is_irrelevant());
  CHECK(std::get<SimplicialComplex>(parse_document(R"({"n":2,"facets":[],"void":true})")).is_void());
}

TEST_CASE("graph documents") {
  CHECK(to_document(fixtures::path_graph(3)) == R"({"n":3,"edges":[[1,2],[2,3]]})");
  const auto parsed = parse_document(R"({"n":4,"edges":[[1,2],[2,3],[3,4],[1,4]]})");
  REQUIRE(std::holds_alternative<Graph>(parsed));
  CHECK(std::get<Graph>(parsed) == fixtures::cycle_graph(4));
}

TEST_CASE("malformed documents") {
  const char* bad[] = {
      "", "{", "[]", R"({"facets":[]})", R"({"n":0,"facets":[]})",
      R"({"n":64,"facets":[]})", R"({"n":"3","facets":[]})", R"({"n":3})",
      R"({"n":3,"facets":[],"edges":[]})", R"({"n":3,"facets":[[2,1]]})",
      R"({"n":3,"facets":[[1,1]]})", R"({"n":3,"facets":[[4]]})", R"({"n":3,"facets":[[0]]})",
      R"({"n":3,"facets":[["1"]]})", R"({"n":3,"facets":[1]})", R"({"n":3,"edges":[[1]]})",
      R"({"n":3,"edges":[[1,2,3]]})", R"({"n":3,"edges":[[2,1]]})",
      R"({"n":3,"facets":[[1]],"void":true})", R"({"n":3,"facets":[],"void":1})"};
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_document(text), ParseError);
  }
  CHECK_THROWS_AS(parse_document(R"({"n":3,"edges":[[1,1]]})"), ParseError);
}

TEST_CASE("documents round-trip") {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_complex(1 + static_cast<int>(rng.below(12)), rng, 6);
    const auto back = parse_document(to_document(c));
    REQUIRE(std::get<SimplicialComplex>(back) == c);
    const auto g = random_chordal(1 + static_cast<int>(rng.below(12)), Density::parse("1/3"), trial);
    REQUIRE(std::get<Graph>(parse_document(to_document(g))) == g);
  }
}

TEST_CASE("digests") {
  CHECK(digest(fixtures::two_edges()).size() == 16);
  CHECK(digest(fixtures::two_edges()) ==
        digest(SimplicialComplex::from_vertex_lists(4, {{3, 4}, {1, 2}, {1}})));
  CHECK(digest(fixtures::two_edges()) != digest(fixtures::four_cycle()));
  CHECK(digest(SimplicialComplex::irrelevant(3)) != digest(SimplicialComplex::void_complex(3)));
}

TEST_CASE("table documents") {
  const auto t = hochster_betti(fixtures::boundary_triangle(), FieldSpec::prime(3));
  CHECK(table_to_document(t) == R"({"n":3,"field":"prime 3","entries":[[0,0,1],[1,3,1]]})");
}

TEST_CASE("report rendering") {
  VerificationReport r;
  r.compare("a", "x == y", "d1", "1", "1");
  r.compare("bb", "x == z", "d1", "1", "2");
  r.skip("c", "x", "d1", "zero ideal");
  CHECK(r.count(Verdict::pass) == 1);
  CHECK(r.count(Verdict::fail) == 1);
  CHECK(r.count(Verdict::skip) == 1);
  CHECK_FALSE(r.passed());

  const std::string structured = r.to_structured();
  CHECK(structured.find(R"({"check":"a","rule":"x == y","digest":"d1","expected":"1","actual":"1","verdict":"pass"})") == 0);
  CHECK(std::count(structured.begin(), structured.end(), '\n') == 3);
  const std::string human = r.to_human();
  CHECK(human.find("[fail] bb") != std::string::npos);
  CHECK(human.find("1 passed, 1 failed, 1 skipped: FAIL") != std::string::npos);

  VerificationReport only_skips;
  only_skips.skip("c", "x", "d", "degenerate");
  CHECK(only_skips.passed());
  r.merge(only_skips);
  CHECK(r.records().size() == 4);
}
