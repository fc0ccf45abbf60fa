#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "facering/alexander.hpp"
#include "facering/errors.hpp"
#include "facering/formulas.hpp"
#include "facering/generators.hpp"
#include "fixtures.hpp"

using namespace facering;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

HVector h(std::initializer_list<long> xs) { return {ints(xs)}; }

bool has_check(const VerificationReport& r, const std::string& check, Verdict v) {
  for (const auto& rec : r.records()) {
    if (rec.check == check && rec.verdict == v) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Betti numbers from h for pure resolutions") {
  CHECK(betti_from_h_pure({h({1, 2, -1}), 4, 2, {2, 3, 4}}) == ints({4, 4, 1}));
  CHECK(betti_from_h_pure({h({1, 1, 1}), 3, 2, {3}}) == ints({1}));
  CHECK(betti_from_h_pure({h({1, 0, 0, 0}), 3, 3, {}}).empty());
  CHECK_THROWS_AS(betti_from_h_pure({h({1, 1}), 3, 4, {1}}), PreconditionError);
  CHECK_THROWS_AS(betti_from_h_pure({h({1, 1}), 3, 1, {3, 2}}), PreconditionError);
  CHECK_THROWS_AS(betti_from_h_pure({h({1, 1}), 3, 1, {0}}), PreconditionError);
}

TEST_CASE("Betti numbers from h for linear resolutions") {
  CHECK(betti_from_h_linear(h({1, 1, 0}), 3, 2, 2, 0) == ints({1}));
  CHECK(betti_from_h_linear(h({1, 1, 1}), 3, 2, 3, 0) == ints({1}));
  CHECK(betti_from_h_linear(h({1}), 3, 0, 1, 2) == ints({3, 3, 1}));
  CHECK_THROWS_AS(betti_from_h_linear(h({1}), 3, 0, 0, 2), PreconditionError);
  CHECK_THROWS_AS(betti_from_h_linear(h({1}), 3, 0, 1, -1), PreconditionError);
}

TEST_CASE("vanishing sums") {
  CHECK(vanishing_sum(h({1, 2, -1}), 2, 1) == 0);
  CHECK(vanishing_sum(h({1, 2, -1}), 2, 2) == -4);
  CHECK(vanishing_sum(h({1, 2, -1}), 2, 5) == 0);
  CHECK(vanishing_sum(h({1, 2, -1}), 2, 40) == 0);
  CHECK_THROWS_AS(vanishing_sum(h({1}), 2, 0), PreconditionError);
  CHECK(pure_degrees_from_h(h({1, 2, -1}), 2) == std::vector<int>{2, 3, 4});
  CHECK(pure_degrees_from_h(h({1, 1, 1}), 1) == std::vector<int>{3});
  CHECK(pure_degrees_from_h(h({1, 0, 0}), 0).empty());
}

TEST_CASE("lower bound records") {
  auto r = betti_inequality_check(ints({4, 4, 1}), 3, "x");
  CHECK(r.passed());
  CHECK(r.count(Verdict::pass) == 3);
  r = betti_inequality_check(ints({3, 3, 1}), 3, "x");
  CHECK(r.passed());
  r = betti_inequality_check({}, 0, "x");
  CHECK(r.passed());
  CHECK(r.records().size() == 1);
  r = betti_inequality_check(ints({2, 3, 1}), 3, "x");
  CHECK_FALSE(r.passed());
  r = betti_inequality_check(ints({3, 3}), 3, "x");
  CHECK_FALSE(r.passed());
}

TEST_CASE("multiplicity from pure resolutions") {
  // Two disjoint edges: (-1)^2 2! 2 = -4*4 + 4*9 - 1*16 = 4.
  auto id = multiplicity_from_pure_resolution(ints({4, 4, 1}), std::vector<int>{2, 3, 4}, 2, 2);
  CHECK(id.holds);
  CHECK(id.lhs == 4);
  CHECK(id.rhs == 4);
  CHECK(id.multiplicity_from_resolution == 2);

  // Dual of the triangle boundary: Koszul on three variables, e = 1.
  id = multiplicity_from_pure_resolution(ints({3, 3, 1}), std::vector<int>{1, 2, 3}, 3, 1);
  CHECK(id.holds);
  CHECK(id.lhs == -6);

  id = multiplicity_from_pure_resolution(ints({4, 4, 1}), std::vector<int>{2, 3, 4}, 2, 3);
  CHECK_FALSE(id.holds);
  CHECK_THROWS_AS(
      multiplicity_from_pure_resolution(ints({1}), std::vector<int>{2}, 0, 1),
      PreconditionError);
  CHECK_THROWS_AS(
      multiplicity_from_pure_resolution(ints({1, 1}), std::vector<int>{2}, 1, 1),
      PreconditionError);
}

TEST_CASE("Eagon-Reiner identity") {
  auto r = eagon_reiner_identity_check(fixtures::boundary_triangle(), Q);
  REQUIRE(r.records().size() == 1);
  CHECK(r.records()[0].expected == "(3,3,1)");
  CHECK(r.records()[0].verdict == Verdict::pass);

  r = eagon_reiner_identity_check(SimplicialComplex::simplex(3), Q);
  CHECK(r.records()[0].verdict == Verdict::skip);
  CHECK(r.passed());

  // Three points: h = (1,2), right side 2t + 3.
  r = eagon_reiner_identity_check(SimplicialComplex::from_vertex_lists(3, {{1}, {2}, {3}}), Q);
  CHECK(r.records()[0].verdict == Verdict::pass);
  CHECK(r.records()[0].actual == "(3,2)");

  r = eagon_reiner_identity_check(fixtures::two_edges(), Q);
  CHECK(r.records()[0].verdict == Verdict::skip);
}

TEST_CASE("pure suite") {
  const auto c = fixtures::two_edges();
  auto r = pure_resolution_suite(c, hochster_betti(c, Q), "x");
  CHECK(r.passed());
  CHECK(has_check(r, "pure-betti-formula", Verdict::pass));
  CHECK(has_check(r, "pure-multiplicity-identity", Verdict::pass));

  const auto mixed = SimplicialComplex::from_vertex_lists(
      5, {{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}});
  r = pure_resolution_suite(mixed, hochster_betti(mixed, Q), "x");
  CHECK(r.count(Verdict::skip) == 1);

  // A table that does not belong to the complex must fail.
  r = pure_resolution_suite(fixtures::boundary_triangle(), hochster_betti(c, Q), "x");
  CHECK_FALSE(r.passed());
}

TEST_CASE("Cohen-Macaulay dual suite") {
  auto r = cm_dual_suite(fixtures::boundary_triangle(), Q);
  CHECK(r.passed());
  CHECK(has_check(r, "cm-dual-betti-formula", Verdict::pass));
  CHECK(has_check(r, "eagon-reiner-identity", Verdict::pass));
  CHECK(has_check(r, "cm-dual-multiplicity-count", Verdict::pass));

  r = cm_dual_suite(SimplicialComplex::simplex(3), Q);
  CHECK(r.passed());
  CHECK(has_check(r, "cm-dual-suite", Verdict::skip));

  CHECK_THROWS_AS(cm_dual_suite(fixtures::two_edges(), Q), PreconditionError);
  CHECK_THROWS_AS(cm_dual_suite(SimplicialComplex::void_complex(3), Q), PreconditionError);

  const auto g = random_chordal(6, Density::parse("1/2"), 3);
  const auto c = clique_complex(g);
  if (is_cohen_macaulay(c, Q)) CHECK(cm_dual_suite(c, Q).passed());
}

TEST_CASE("chordal suite") {
  auto r = chordal_suite(fixtures::path_graph(3), Q);
  CHECK(r.passed());
  CHECK(has_check(r, "chordal-betti-formula", Verdict::pass));
  CHECK(has_check(r, "chordal-vanishing", Verdict::pass));

  r = chordal_suite(Graph::complete(4), Q);
  CHECK(r.passed());
  CHECK(has_check(r, "chordal-resolution", Verdict::skip));

  CHECK(chordal_suite(random_chordal(8, Density::parse("0.4"), 7), Q).passed());
  CHECK_THROWS_AS(chordal_suite(fixtures::cycle_graph(5), Q), PreconditionError);
}

TEST_CASE("full verification") {
  CHECK(verify_complex(fixtures::two_edges(), Q).passed());
  CHECK(verify_complex(SimplicialComplex::irrelevant(4), Q).passed());
  CHECK_THROWS_AS(verify_complex(SimplicialComplex::void_complex(4), Q), PreconditionError);
  const auto r = verify_graph(fixtures::cycle_graph(5), Q);
  CHECK(r.passed());
  CHECK(has_check(r, "chordal-suite", Verdict::skip));

  Rng rng(30);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = random_complex(1 + static_cast<int>(rng.below(7)), rng, 5);
    REQUIRE(verify_complex(c, Q).passed());
    REQUIRE(verify_complex(c, FieldSpec::prime(2)).passed());
  }
}
