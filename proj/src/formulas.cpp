#include "facering/formulas.hpp"

#include <algorithm>

#include "facering/alexander.hpp"
#include "facering/errors.hpp"
#include "facering/hilbert.hpp"
#include "facering/io.hpp"

namespace facering {

namespace rule {
constexpr const char* kHilbert = "H(z) from Hochster table == h(z)/(1-z)^d";
constexpr const char* kMultiplicity = "e = f_{d-1} = sum h_i";
constexpr const char* kHilbertPolynomial = "leading binomial coefficient m_0 of the Hilbert polynomial == e";
constexpr const char* kDualF = "f*_i = C(n,i+1) - f_{n-i-2}";
constexpr const char* kDualDim = "dim k[D*] = n - k*";
constexpr const char* kInvolution = "(D*)* == D";
constexpr const char* kPureBetti = "beta_i = sum_l (-1)^(l+i+1) C(n-d,l) h_{d_i-l}";
constexpr const char* kPureDegrees = "{d_i} == {s >= 1 : [z^s](1-z)^(n-d) h(z) != 0}";
constexpr const char* kVanishing = "sum_l (-1)^l C(n-d,l) h_{s-l} == 0 for s not in {d_i}";
constexpr const char* kSignLinkage = "sum_l (-1)^l C(n-d,l) h_{d_i-l} == (-1)^(i+1) beta_i";
constexpr const char* kLowerBound = "beta_i >= C(P, i+1), P = projective dimension";
constexpr const char* kPureMultiplicity = "(-1)^c c! e == sum_i (-1)^(i+1) beta_i d_i^c, c = n-d";
constexpr const char* kCmAgree = "Reisner criterion == (n-d)-linearity of I(D*)";
constexpr const char* kCmLinear = "I(D*) has a linear resolution starting in degree t = n-d";
constexpr const char* kCmKStar = "k* == n - d*";
constexpr const char* kCmBetti = "beta*_i = sum_l (-1)^(l+i+1) C(k*,l) h*_{t+i-l}";
constexpr const char* kCmVanishing = "sum_l (-1)^l C(k*,l) h*_{j-l} == 0 for 0<j<t or p+t<j<=n";
constexpr const char* kCmMultiplicity = "(-1)^k* k*! e(k[D*]) == sum_i (-1)^(i+1) beta*_i (t+i)^k*";
constexpr const char* kCmCount = "C(n,k*) - f_{k*-1} == e(k[D*]) from the dual resolution";
constexpr const char* kEagonReiner = "sum_{i>=1} beta*_i t^(i-1) == sum_i h_i (t+1)^i";
constexpr const char* kChordalNonfaces = "minimal non-faces of D(G) == edges of the complement";
constexpr const char* kChordalLinear = "k[D(G)] has a 2-linear resolution";
constexpr const char* kChordalBetti = "beta_i = sum_l (-1)^(l+i+1) C(n-d,l) h_{2+i-l}";
constexpr const char* kChordalVanishing = "sum_l (-1)^l C(n-d,l) h_{j-l} == 0 for j=1 or p+2<j<=n";
constexpr const char* kChordalQuasiForest = "D(G) admits a leaf order";
constexpr const char* kChordalSkeleton = "1-skeleton of D(G) is chordal";
}  // namespace rule

std::vector<Integer> betti_from_h_pure(const PureBettiInput& in) {
  if (in.n < in.d || in.d < 0) {
    throw PreconditionError("need 0 <= d <= n");
  }
  for (std::size_t i = 0; i < in.degrees.size(); ++i) {
    if (in.degrees[i] <= 0) throw PreconditionError("resolution degrees must be positive");
    if (i && in.degrees[i] <= in.degrees[i - 1]) {
      throw PreconditionError("resolution degrees must be strictly increasing");
    }
  }
  const int codim = in.n - in.d;
  std::vector<Integer> out;
  for (std::size_t i = 0; i < in.degrees.size(); ++i) {
    const int di = in.degrees[i];
    Integer sum = 0;
    for (int l = 0; l <= di; ++l) {
      Integer term = binomial(codim, l) * in.h.h(di - l);
      if ((l + static_cast<int>(i) + 1) % 2) sum -= term; else sum += term;
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<Integer> betti_from_h_linear(const HVector& h, int n, int d, int t, int p) {
  if (t < 1) throw PreconditionError("linear start degree must be positive");
  if (p < 0) throw PreconditionError("number of steps must be nonnegative");
  std::vector<int> degrees;
  for (int i = 0; i <= p; ++i) degrees.push_back(t + i);
  return betti_from_h_pure({h, n, d, std::move(degrees)});
}

Integer vanishing_sum(const HVector& h, int codim, int s) {
  if (s < 1) throw PreconditionError("vanishing sums start at s = 1");
  Integer sum = 0;
  for (int l = 0; l <= s; ++l) {
    Integer term = binomial(codim, l) * h.h(s - l);
    if (l % 2) sum -= term; else sum += term;
  }
  return sum;
}

std::vector<int> pure_degrees_from_h(const HVector& h, int codim) {
  std::vector<int> out;
  for (int s = 1; s <= h.d() + codim; ++s) {
    if (vanishing_sum(h, codim, s) != 0) out.push_back(s);
  }
  return out;
}

std::vector<Integer> betti_sequence(const GradedBettiTable& table) {
  std::vector<Integer> out;
  for (int i = 1; i <= table.projective_dimension(); ++i) {
    out.emplace_back(static_cast<unsigned long>(table.total(i)));
  }
  return out;
}

VerificationReport betti_inequality_check(std::span<const Integer> betti,
                                          int projective_dimension,
                                          const std::string& digest,
                                          const std::string& check) {
  VerificationReport report;
  const int big_p = projective_dimension;
  if (static_cast<int>(betti.size()) != big_p) {
    report.add({check, rule::kLowerBound, digest,
                std::to_string(big_p) + " Betti numbers",
                std::to_string(betti.size()) + " Betti numbers", Verdict::fail});
    return report;
  }
  if (big_p == 0) {
    report.add({check, rule::kLowerBound, digest, "vacuous", "()", Verdict::pass});
    return report;
  }
  for (int i = 0; i < big_p; ++i) {
    const Integer bound = binomial(big_p, i + 1);
    const Integer& value = betti[static_cast<std::size_t>(i)];
    report.add({check + "[" + std::to_string(i) + "]", rule::kLowerBound, digest,
                ">= " + bound.get_str(), value.get_str(),
                value >= bound ? Verdict::pass : Verdict::fail});
  }
  return report;
}

MultiplicityIdentity multiplicity_from_pure_resolution(std::span<const Integer> betti,
                                                       std::span<const int> degrees,
                                                       int codim,
                                                       const Integer& multiplicity) {
  if (codim <= 0) {
    throw PreconditionError("multiplicity identity needs n > d (nonzero ideal)");
  }
  if (betti.size() != degrees.size()) {
    throw PreconditionError("Betti numbers and degrees differ in length");
  }
  const auto c = static_cast<unsigned long>(codim);
  MultiplicityIdentity out;
  out.lhs = factorial(c) * multiplicity;
  if (codim % 2) out.lhs = -out.lhs;
  out.rhs = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    Integer term = betti[i] * power(Integer(degrees[i]), c);
    if (i % 2) out.rhs += term; else out.rhs -= term;
  }
  out.multiplicity_from_resolution = Rational(out.rhs, factorial(c));
  if (codim % 2) out.multiplicity_from_resolution = -out.multiplicity_from_resolution;
  out.multiplicity_from_resolution.canonicalize();
  out.holds = out.lhs == out.rhs;
  return out;
}

namespace {

std::string poly_string(std::vector<Integer> coefficients) {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  return to_string(coefficients);
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

std::string faces_string(const std::vector<Face>& faces) {
  std::string out = "[";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) out += ',';
    out += face_to_string(faces[i]);
  }
  return out + "]";
}

/// Eagon–Reiner generating-function identity with the dual table in hand.
void eagon_reiner_records(const HVector& h, const GradedBettiTable& dual_table,
                          const std::string& digest, VerificationReport& report) {
  std::vector<Integer> left;
  for (int i = 1; i <= dual_table.projective_dimension(); ++i) {
    left.emplace_back(static_cast<unsigned long>(dual_table.total(i)));
  }
  std::vector<Integer> right(static_cast<std::size_t>(h.d() + 1), Integer(0));
  for (int i = 0; i <= h.d(); ++i) {
    for (int k = 0; k <= i; ++k) right[static_cast<std::size_t>(k)] += h.h(i) * binomial(i, k);
  }
  report.compare("eagon-reiner-identity", rule::kEagonReiner, digest, poly_string(left),
                 poly_string(right));
}

/// Dual-suite records for a complex already known to be Cohen–Macaulay and
/// not the full simplex.
void cm_dual_records(const SimplicialComplex& complex, FieldSpec field,
                     const std::string& digest, VerificationReport& report) {
  const int n = complex.n();
  const FVector f = f_vector(complex);
  const HVector h = h_from_f(f);
  const int t = n - f.d();

  const SimplicialComplex dual = alexander_dual(complex);
  const GradedBettiTable dual_table = hochster_betti(dual, field);
  const ResolutionShape shape = classify_resolution(dual_table);
  report.compare("cm-dual-linear", rule::kCmLinear, digest,
                 "linear from " + std::to_string(t),
                 shape.is_linear() ? "linear from " + std::to_string(*shape.start())
                                   : "not linear");
  if (!shape.is_linear() || shape.start() != t) return;

  const int k = *k_star(f, n);
  const FVector dual_f = f_vector(dual);
  const int dual_d = dual_f.d();
  report.compare("cm-dual-kstar", rule::kCmKStar, digest, std::to_string(n - dual_d),
                 std::to_string(k));

  const HVector dual_h = h_from_f(dual_f);
  const int p = shape.steps();
  const auto oracle = betti_sequence(dual_table);
  // Binomial base k* = n - d*, i.e. the dual's codimension.
  const auto formula = betti_from_h_linear(dual_h, n, n - k, t, p);
  report.compare("cm-dual-betti-formula", rule::kCmBetti, digest, to_string(oracle),
                 to_string(formula));

  std::vector<std::string> nonzero;
  for (int j = 1; j <= n; ++j) {
    if (!(j < t || j > p + t)) continue;
    const Integer v = vanishing_sum(dual_h, k, j);
    if (v != 0) nonzero.push_back("s=" + std::to_string(j) + ":" + v.get_str());
  }
  std::string actual = "all zero";
  for (const auto& s : nonzero) actual += (actual == "all zero" ? " except " : ", ") + s;
  report.compare("cm-dual-vanishing", rule::kCmVanishing, digest, "all zero", actual);

  const Integer dual_e = dual_f.entries.back();
  const auto id = multiplicity_from_pure_resolution(oracle, shape.degrees, k, dual_e);
  report.compare("cm-dual-multiplicity", rule::kCmMultiplicity, digest, id.lhs.get_str(),
                 id.rhs.get_str());
  const Integer count = binomial(n, k) - f.f(k - 1);
  report.compare("cm-dual-multiplicity-count", rule::kCmCount, digest, count.get_str(),
                 id.multiplicity_from_resolution.get_str());

  report.merge(betti_inequality_check(oracle, shape.projective_dimension, digest,
                                      "cm-dual-lower-bound"));
  eagon_reiner_records(h, dual_table, digest, report);
}

}  // namespace

VerificationReport eagon_reiner_identity_check(const SimplicialComplex& complex,
                                               FieldSpec field) {
  VerificationReport report;
  const std::string id = digest(complex);
  const HVector h = h_from_f(f_vector(complex));
  if (complex.is_simplex()) {
    std::vector<Integer> right(static_cast<std::size_t>(h.d() + 1), Integer(0));
    for (int i = 0; i <= h.d(); ++i) {
      for (int k = 0; k <= i; ++k) right[static_cast<std::size_t>(k)] += h.h(i) * binomial(i, k);
    }
    report.skip("eagon-reiner-identity", rule::kEagonReiner, id,
                "degenerate: dual is void, left () vs right " + poly_string(right));
    return report;
  }
  if (!is_cohen_macaulay(complex, field)) {
    report.skip("eagon-reiner-identity", rule::kEagonReiner, id,
                "precondition not met: not Cohen-Macaulay over " + field.to_string());
    return report;
  }
  eagon_reiner_records(h, hochster_betti(alexander_dual(complex), field), id, report);
  return report;
}

VerificationReport pure_resolution_suite(const SimplicialComplex& complex,
                                         const GradedBettiTable& table,
                                         const std::string& digest) {
  VerificationReport report;
  const ResolutionShape shape = classify_resolution(table);
  if (!shape.is_pure()) {
    report.skip("pure-resolution", rule::kPureBetti, digest, "resolution is not pure");
    return report;
  }
  if (shape.is_zero_ideal()) {
    report.skip("pure-resolution", rule::kPureBetti, digest, "zero ideal");
    return report;
  }
  const int n = complex.n();
  const FVector f = f_vector(complex);
  const HVector h = h_from_f(f);
  const int d = f.d();
  const int codim = n - d;
  const auto oracle = betti_sequence(table);

  report.compare("pure-betti-formula", rule::kPureBetti, digest, to_string(oracle),
                 to_string(betti_from_h_pure({h, n, d, shape.degrees})));
  report.compare("pure-degrees-from-h", rule::kPureDegrees, digest, to_string(shape.degrees),
                 to_string(pure_degrees_from_h(h, codim)));

  std::string actual = "all zero";
  bool first = true;
  for (int s = 1; s <= n + shape.degrees.back(); ++s) {
    if (std::find(shape.degrees.begin(), shape.degrees.end(), s) != shape.degrees.end()) continue;
    const Integer v = vanishing_sum(h, codim, s);
    if (v == 0) continue;
    actual += (first ? " except s=" : ", s=") + std::to_string(s) + ":" + v.get_str();
    first = false;
  }
  report.compare("pure-vanishing-sums", rule::kVanishing, digest, "all zero", actual);

  std::vector<Integer> signed_betti;
  std::vector<Integer> sums;
  for (std::size_t i = 0; i < shape.degrees.size(); ++i) {
    signed_betti.push_back(i % 2 ? oracle[i] : Integer(-oracle[i]));
    sums.push_back(vanishing_sum(h, codim, shape.degrees[i]));
  }
  report.compare("pure-sign-linkage", rule::kSignLinkage, digest, to_string(signed_betti),
                 to_string(sums));

  report.merge(betti_inequality_check(oracle, shape.projective_dimension, digest,
                                      "pure-betti-lower-bound"));

  if (codim > 0) {
    const auto id =
        multiplicity_from_pure_resolution(oracle, shape.degrees, codim, f.entries.back());
    report.compare("pure-multiplicity-identity", rule::kPureMultiplicity, digest,
                   id.lhs.get_str(), id.rhs.get_str());
  } else {
    report.skip("pure-multiplicity-identity", rule::kPureMultiplicity, digest,
                "trivial: n = d");
  }
  return report;
}

VerificationReport cm_dual_suite(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) throw PreconditionError("Cohen-Macaulay suite on the void complex");
  VerificationReport report;
  const std::string id = digest(complex);
  const auto criteria = cohen_macaulay_criteria(complex, field);
  if (criteria.dual_linear) {
    report.compare("cm-criteria-agree", rule::kCmAgree, id, bool_string(criteria.reisner),
                   bool_string(*criteria.dual_linear));
  }
  if (!criteria.reisner) {
    throw PreconditionError("complex is not Cohen-Macaulay over " + field.to_string());
  }
  if (complex.is_simplex()) {
    report.skip("cm-dual-suite", rule::kCmLinear, id, "zero ideal: full simplex, dual is void");
    report.merge(eagon_reiner_identity_check(complex, field));
    return report;
  }
  cm_dual_records(complex, field, id, report);
  return report;
}

VerificationReport chordal_suite(const Graph& g, FieldSpec field) {
  const auto chordality = is_chordal(g);
  if (!chordality.chordal) {
    std::string cycle;
    for (int v : chordality.chordless_cycle) cycle += (cycle.empty() ? "" : "-") + std::to_string(v);
    throw PreconditionError("graph is not chordal: chordless cycle " + cycle);
  }
  VerificationReport report;
  const std::string id = digest(g);
  const SimplicialComplex complex = clique_complex(g);
  const int n = g.n();

  std::vector<Face> complement_edges;
  for (const auto& [u, v] : complement(g).edges()) {
    complement_edges.push_back(vertex_bit(u) | vertex_bit(v));
  }
  sort_canonical(complement_edges);
  report.compare("chordal-nonfaces", rule::kChordalNonfaces, id,
                 faces_string(complement_edges), faces_string(minimal_nonfaces(complex)));

  const auto forest = is_quasi_forest(complex);
  report.compare("chordal-quasi-forest", rule::kChordalQuasiForest, id, "true",
                 bool_string(forest.is_quasi_forest && is_leaf_order(forest.leaf_order)));
  report.compare("chordal-skeleton", rule::kChordalSkeleton, id, "true",
                 bool_string(is_chordal(one_skeleton(complex)).chordal));

  if (complex.is_simplex()) {
    report.skip("chordal-resolution", rule::kChordalLinear, id, "zero ideal: complete graph");
    return report;
  }
  const GradedBettiTable table = hochster_betti(complex, field);
  const ResolutionShape shape = classify_resolution(table);
  report.compare("chordal-linear", rule::kChordalLinear, id, "linear from 2",
                 shape.is_linear() ? "linear from " + std::to_string(*shape.start())
                                   : "not linear");
  if (!shape.is_linear() || shape.start() != 2) return report;

  const FVector f = f_vector(complex);
  const HVector h = h_from_f(f);
  const int d = f.d();
  const int p = shape.steps();
  const auto oracle = betti_sequence(table);
  report.compare("chordal-betti-formula", rule::kChordalBetti, id, to_string(oracle),
                 to_string(betti_from_h_linear(h, n, d, 2, p)));

  std::string actual = "all zero";
  bool first = true;
  for (int j = 1; j <= n; ++j) {
    if (!(j == 1 || j > p + 2)) continue;
    const Integer v = vanishing_sum(h, n - d, j);
    if (v == 0) continue;
    actual += (first ? " except j=" : ", j=") + std::to_string(j) + ":" + v.get_str();
    first = false;
  }
  report.compare("chordal-vanishing", rule::kChordalVanishing, id, "all zero", actual);
  report.merge(betti_inequality_check(oracle, shape.projective_dimension, id,
                                      "chordal-lower-bound"));
  return report;
}

VerificationReport verify_complex(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) throw PreconditionError("nothing to verify on the void complex");
  VerificationReport report;
  const std::string id = digest(complex);
  const int n = complex.n();
  const GradedBettiTable table = hochster_betti(complex, field);
  const HilbertSeries series = series_from_complex(complex);
  report.compare("hilbert-consistency", rule::kHilbert, id, series.to_string(),
                 series_from_resolution(table).to_string());

  const FVector f = f_vector(complex);
  const Integer e = multiplicity(complex);
  report.compare("multiplicity-h-sum", rule::kMultiplicity, id, e.get_str(),
                 series.numerator_at_one().get_str());
  const auto binomial_coefficients = hilbert_polynomial_binomial_coefficients(series);
  if (binomial_coefficients.empty()) {
    report.skip("multiplicity-hilbert-polynomial", rule::kHilbertPolynomial, id,
                "k[D] has dimension 0");
  } else {
    report.compare("multiplicity-hilbert-polynomial", rule::kHilbertPolynomial, id,
                   e.get_str(), binomial_coefficients.front().get_str());
  }

  const SimplicialComplex dual = alexander_dual(complex);
  report.compare("alexander-dual-f-vector", rule::kDualF, id, to_string(f_vector(dual).entries),
                 to_string(dual_f_vector(f, n).entries));
  report.compare("alexander-involution", rule::kInvolution, id, to_document(complex),
                 to_document(alexander_dual(dual)));
  if (!complex.is_simplex()) {
    report.compare("alexander-dual-dimension", rule::kDualDim, id,
                   std::to_string(dual.dimension() + 1),
                   std::to_string(n - *k_star(f, n)));
  }

  report.merge(pure_resolution_suite(complex, table, id));

  const auto criteria = cohen_macaulay_criteria(complex, field);
  if (criteria.dual_linear) {
    report.compare("cm-criteria-agree", rule::kCmAgree, id, bool_string(criteria.reisner),
                   bool_string(*criteria.dual_linear));
  }
  if (!criteria.reisner) {
    report.skip("cm-dual-suite", rule::kCmLinear, id, "not Cohen-Macaulay");
  } else if (complex.is_simplex()) {
    report.skip("cm-dual-suite", rule::kCmLinear, id, "zero ideal: full simplex, dual is void");
    report.merge(eagon_reiner_identity_check(complex, field));
  } else {
    cm_dual_records(complex, field, id, report);
  }
  return report;
}

VerificationReport verify_graph(const Graph& g, FieldSpec field) {
  VerificationReport report = verify_complex(clique_complex(g), field);
  const auto chordality = is_chordal(g);
  if (chordality.chordal) {
    report.merge(chordal_suite(g, field));
  } else {
    report.skip("chordal-suite", rule::kChordalLinear, digest(g),
                "not chordal: chordless cycle " + to_string(chordality.chordless_cycle));
  }
  return report;
}

}  // namespace facering
