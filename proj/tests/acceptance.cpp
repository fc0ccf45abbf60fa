// Acceptance gate: one pass/fail line per criterion, exact integer checks.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "facering/alexander.hpp"
#include "facering/betti.hpp"
#include "facering/formulas.hpp"
#include "facering/generators.hpp"
#include "facering/hilbert.hpp"
#include "facering/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace facering;

namespace {

const FieldSpec Q = FieldSpec::rationals();

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void expect(bool ok, const std::function<std::string()>& detail) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_failure_ = detail();
  }

  void note(std::string text) { notes_ += (notes_.empty() ? "" : ", ") + text; }

  bool passed() const { return failures_ == 0 && checks_ > 0; }

  void print() const {
    std::printf("criterion %d %s: %s (%zu checks, %zu failed%s%s)\n", id_,
                passed() ? "PASS" : "FAIL", title_.c_str(), checks_, failures_,
                notes_.empty() ? "" : "; ", notes_.c_str());
    if (failures_) std::printf("    first failure: %s\n", first_failure_.c_str());
  }

 private:
  int id_;
  std::string title_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
  std::string notes_;
};

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

struct Gate {
  Criterion self_consistency{1, "Hochster table reproduces the Hilbert series"};
  Criterion pure_formula{2, "pure Betti numbers from the h-vector"};
  Criterion vanishing{3, "vanishing sums outside the resolution degrees"};
  Criterion lower_bound{4, "beta_i >= C(P, i+1) on pure resolutions"};
  Criterion multiplicity_id{5, "multiplicity e = f_{d-1} = sum h_i and the signed moment identity"};
  Criterion cm_dual{6, "Cohen-Macaulay dual suite and Eagon-Reiner identity"};
  Criterion chordal{7, "chordal graph pipeline"};
  Criterion duality{8, "Alexander duality"};

  std::size_t corpus = 0;
  std::size_t pure = 0;
  std::size_t cohen_macaulay = 0;

  /// Criteria 1-6 on one complex of the shared corpus.
  void complex_instance(const SimplicialComplex& c) {
    ++corpus;
    const std::string doc = to_document(c);
    const GradedBettiTable table = hochster_betti(c, Q);
    const HilbertSeries series = series_from_complex(c);
    const HilbertSeries from_table = series_from_resolution(table);
    self_consistency.expect(series == from_table, [&] {
      return doc + ": " + series.to_string() + " vs " + from_table.to_string();
    });

    const FVector f = f_vector(c);
    const HVector h = h_from_f(f);
    const int n = c.n();
    const int d = f.d();
    const Integer e = multiplicity(c);
    Integer h_sum = 0;
    for (const auto& x : h.entries) h_sum += x;
    multiplicity_id.expect(e == f.entries.back() && e == h_sum && e == series.numerator_at_one(),
                           [&] { return doc + ": e=" + e.get_str() + " sum h=" + h_sum.get_str(); });

    const ResolutionShape shape = classify_resolution(table);
    if (shape.is_pure()) pure_instance(c, doc, table, shape, h, n, d);

    const auto criteria = cohen_macaulay_criteria(c, Q);
    cm_dual.expect(criteria.agree(), [&] { return doc + ": Reisner and dual-linearity disagree"; });
    if (criteria.reisner) {
      ++cohen_macaulay;
      const VerificationReport report = cm_dual_suite(c, Q);
      cm_dual.expect(report.passed(), [&] { return doc + ":\n" + report.to_human(); });
    }
  }

  void pure_instance(const SimplicialComplex& c, const std::string& doc,
                     const GradedBettiTable& table, const ResolutionShape& shape,
                     const HVector& h, int n, int d) {
    ++pure;
    const auto oracle = betti_sequence(table);
    const auto formula = betti_from_h_pure({h, n, d, shape.degrees});
    pure_formula.expect(formula == oracle, [&] {
      return doc + ": formula " + to_string(formula) + " vs oracle " + to_string(oracle);
    });
    if (shape.is_zero_ideal()) return;

    const int codim = n - d;
    for (int s = 1; s <= n + shape.degrees.back(); ++s) {
      if (std::find(shape.degrees.begin(), shape.degrees.end(), s) != shape.degrees.end()) continue;
      const Integer v = vanishing_sum(h, codim, s);
      vanishing.expect(v == 0, [&] { return doc + ": s=" + std::to_string(s) + " gives " + v.get_str(); });
    }

    const auto bounds = betti_inequality_check(oracle, shape.projective_dimension, digest(c));
    lower_bound.expect(bounds.passed(), [&] { return doc + ":\n" + bounds.to_human(); });

    if (codim > 0) {
      const auto id = multiplicity_from_pure_resolution(oracle, shape.degrees, codim,
                                                        f_vector(c).entries.back());
      multiplicity_id.expect(id.holds, [&] {
        return doc + ": " + id.lhs.get_str() + " vs " + id.rhs.get_str();
      });
    }
  }

  void pinned() {
    const auto two = betti_from_h_pure({{ints({1, 2, -1})}, 4, 2, {2, 3, 4}});
    pure_formula.expect(two == ints({4, 4, 1}), [&] { return "pinned (4,4,1): got " + to_string(two); });

    lower_bound.expect(betti_inequality_check(ints({4, 4, 1}), 3, "pinned").passed(),
                       [] { return std::string("pinned (4,4,1), P=3"); });
    lower_bound.expect(betti_inequality_check(ints({3, 3, 1}), 3, "pinned").passed(),
                       [] { return std::string("pinned (3,3,1), P=3"); });

    const auto id = multiplicity_from_pure_resolution(ints({4, 4, 1}), std::vector<int>{2, 3, 4}, 2,
                                                      multiplicity(fixtures::two_edges()));
    multiplicity_id.expect(id.holds && id.lhs == 4 && id.multiplicity_from_resolution == 2,
                           [&] { return "pinned two edges: " + id.lhs.get_str() + " vs " + id.rhs.get_str(); });

    const auto triangle = fixtures::boundary_triangle();
    const auto dual_betti = betti_sequence(hochster_betti(alexander_dual(triangle), Q));
    cm_dual.expect(dual_betti == ints({3, 3, 1}),
                   [&] { return "pinned triangle dual: " + to_string(dual_betti); });
    const auto er = eagon_reiner_identity_check(triangle, Q);
    cm_dual.expect(er.passed() && er.records().size() == 1 && er.records()[0].actual == "(3,3,1)",
                   [&] { return "pinned triangle identity:\n" + er.to_human(); });
    const auto degenerate = eagon_reiner_identity_check(SimplicialComplex::simplex(3), Q);
    cm_dual.expect(degenerate.records().size() == 1 &&
                       degenerate.records()[0].verdict == Verdict::skip,
                   [&] { return "full simplex not recorded as degenerate:\n" + degenerate.to_human(); });
  }

  void chordal_graph(const Graph& g) {
    const std::string doc = to_document(g);
    const SimplicialComplex c = clique_complex(g);

    std::vector<Face> expected;
    for (const auto& [u, v] : complement(g).edges()) expected.push_back(vertex_bit(u) | vertex_bit(v));
    sort_canonical(expected);
    const auto nonfaces = minimal_nonfaces(c);
    chordal.expect(nonfaces == expected, [&] { return doc + ": minimal non-faces differ from complement edges"; });

    const auto forest = is_quasi_forest(c);
    chordal.expect(forest.is_quasi_forest && oracle::is_leaf_order(forest.leaf_order),
                   [&] { return doc + ": clique complex is not a quasi-forest"; });
    chordal.expect(is_chordal(one_skeleton(c)).chordal,
                   [&] { return doc + ": 1-skeleton is not chordal"; });

    if (c.is_simplex()) return;  // complete graph: zero ideal
    const GradedBettiTable table = hochster_betti(c, Q);
    const ResolutionShape shape = classify_resolution(table);
    const bool two_linear = shape.is_linear() && shape.start() == 2;
    chordal.expect(two_linear, [&] { return doc + ": resolution is not 2-linear\n" + table.diagram(); });
    if (!two_linear) return;

    const FVector f = f_vector(c);
    const HVector h = h_from_f(f);
    const int n = g.n();
    const int p = shape.steps();
    const auto oracle = betti_sequence(table);
    const auto formula = betti_from_h_linear(h, n, f.d(), 2, p);
    chordal.expect(formula == oracle, [&] {
      return doc + ": formula " + to_string(formula) + " vs oracle " + to_string(oracle);
    });
    for (int j = 1; j <= n; ++j) {
      if (j != 1 && j <= p + 2) continue;
      const Integer v = vanishing_sum(h, n - f.d(), j);
      vanishing.expect(v == 0, [&] { return doc + ": chordal j=" + std::to_string(j) + " gives " + v.get_str(); });
    }
  }

  void dual_instance(const SimplicialComplex& c) {
    const std::string doc = to_document(c);
    const SimplicialComplex dual = alexander_dual(c);
    duality.expect(dual == oracle::alexander_dual(c), [&] { return doc + ": dual differs from subset scan"; });
    duality.expect(alexander_dual(dual) == c, [&] { return doc + ": not an involution"; });
    const FVector f = f_vector(c);
    const FVector predicted = dual_f_vector(f, c.n());
    const FVector actual = f_vector(dual);
    duality.expect(predicted == actual, [&] {
      return doc + ": dual f " + to_string(actual.entries) + " vs formula " + to_string(predicted.entries);
    });
    if (c.is_simplex()) return;
    const int k = *k_star(f, c.n());
    const int dim = series_from_complex(dual).denominator_exponent;
    duality.expect(dim == c.n() - k, [&] {
      return doc + ": dim k[dual] = " + std::to_string(dim) + ", n - k* = " + std::to_string(c.n() - k);
    });
  }
};

}  // namespace

int main() {
  Gate gate;

  for (int n = 1; n <= 5; ++n) {
    for_each_complex(n, [&](const SimplicialComplex& c) { gate.complex_instance(c); });
  }
  const std::size_t exhaustive = gate.corpus;
  Rng rng(2024);
  for (int trial = 0; trial < 600; ++trial) {
    gate.complex_instance(random_complex(6 + trial % 2, rng, 7));
  }
  gate.pinned();
  const std::string corpus_note = std::to_string(exhaustive) + " exhaustive + " +
                                  std::to_string(gate.corpus - exhaustive) + " random complexes";
  gate.self_consistency.note(corpus_note);
  gate.pure_formula.note(std::to_string(gate.pure) + " pure");
  gate.cm_dual.note(std::to_string(gate.cohen_macaulay) + " Cohen-Macaulay");

  const Density densities[] = {Density::parse("1/4"), Density::parse("1/2"), Density::parse("3/4")};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    gate.chordal_graph(random_chordal(n, densities[seed % 3], seed));
  }
  Rng forest_rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_quasi_forest(1 + static_cast<int>(forest_rng.below(10)), forest_rng);
    gate.chordal.expect(is_chordal(one_skeleton(c)).chordal,
                        [&] { return to_document(c) + ": quasi-forest with non-chordal 1-skeleton"; });
  }
  gate.chordal.note("200 chordal graphs, 200 quasi-forests");

  for (int n = 1; n <= 4; ++n) {
    gate.dual_instance(SimplicialComplex::void_complex(n));
    for_each_complex(n, [&](const SimplicialComplex& c) { gate.dual_instance(c); });
  }
  Rng dual_rng(31337);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 5 + static_cast<int>(dual_rng.below(6));
    gate.dual_instance(random_complex(n, dual_rng, 1 + static_cast<int>(dual_rng.below(10))));
  }
  gate.duality.note("exhaustive n <= 4 + 10000 random, 5 <= n <= 10");

  const Criterion* all[] = {&gate.self_consistency, &gate.pure_formula, &gate.vanishing,
                            &gate.lower_bound,      &gate.multiplicity_id, &gate.cm_dual,
                            &gate.chordal,          &gate.duality};
  bool ok = true;
  for (const Criterion* c : all) {
    c->print();
    ok = ok && c->passed();
  }
  return ok ? 0 : 1;
}
