#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shyang/exactalg/ncpoly.hpp"
#include "shyang/yangian/algebra.hpp"

namespace shyang::yangian {

struct CentralityEntry {
  Generator probe;
  NCPolynomial remainder;  // normal form of [Z, probe]
};

struct CentralityReport {
  int r = 0;
  NCPolynomial element;
  std::vector<CentralityEntry> entries;
  std::size_t steps = 0;
  /// Set when a normal form ran out of budget; entries then stop early.
  std::optional<std::string> budget_error;

  bool success() const;
};

/// Normal form of [Z^(r), g] for every probe g (closed-form Z^(r)).
CentralityReport verify_centrality(const YangianAlgebra& alg, int r,
                                   const std::vector<Generator>& probes);
/// Same check for an arbitrary candidate element (negative controls).
CentralityReport verify_centrality(const YangianAlgebra& alg, const NCPolynomial& element,
                                   const std::vector<Generator>& probes, int r = -1);

struct ConfluenceFailure {
  std::string kind;  // "associativity" or "idempotence"
  NCPolynomial p, q, r;
  NCPolynomial left, right;
};

struct ConfluenceReport {
  int degree_bound = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  int checks = 0;
  std::vector<ConfluenceFailure> failures;
  std::size_t steps = 0;

  bool success() const { return failures.empty(); }
};

/// Seeded random triples (p, q, r) whose combined canonical degree is at most
/// degree_bound. Checks nf(nf(pq) r) = nf(p nf(qr)) = nf(pqr) and
/// nf(nf(p)) = nf(p).
ConfluenceReport confluence_check(const YangianAlgebra& alg, int degree_bound, int samples,
                                  std::uint64_t seed);

/// Uniform draw in [0, bound) from a splitmix64 stream; reproducible on
/// every standard library, unlike the std distributions.
std::uint64_t seeded_draw(std::uint64_t& state, std::uint64_t bound);

/// Random element with at most `max_terms` words, each of canonical degree at
/// most `max_degree`, over admissible generators; shared with the test
/// suites. Deterministic in `state` on every platform.
NCPolynomial random_element(const YangianAlgebra& alg, std::uint64_t& state, int max_degree,
                            int max_terms);

struct OverlapFailure {
  Generator a, b, c;
  NCPolynomial left, right;  // nf(nf(ab) c) and nf(a nf(bc))
};

struct OverlapReport {
  int max_superscript = 0;
  int checked = 0;
  std::vector<OverlapFailure> failures;
  std::size_t steps = 0;

  bool success() const { return failures.empty(); }
};

/// Diamond-lemma check: every overlap a > b > c of admissible generators
/// with a.superscript + b.superscript + c.superscript <= max_superscript
/// resolves to the same normal form both ways.
OverlapReport overlap_check(const YangianAlgebra& alg, int max_superscript);

struct TruncationReport {
  std::vector<std::pair<int, NCPolynomial>> residues;  // (r, nf(Z^(r)))

  bool success() const;
};

/// In the truncated quotients Z(u) is a polynomial in u^-1 of degree 2n, so
/// Z^(r) must reduce to zero for 2n < r <= max_r. Trivially true in Full mode.
TruncationReport truncation_consistency(const YangianAlgebra& alg, int max_r);

struct GradedDimensionReport {
  std::vector<Generator> generators;
  std::vector<long long> counts;  // index = canonical degree
  bool full_mode = false;         // counts are those of the full PBW monoid
  /// Every enumerated PBW word was checked to be its own normal form.
  bool fixed_points_verified = false;
};

/// Number of PBW words of each canonical degree 0..degree in the current
/// quotient. With verify_fixed_points each word is also run through
/// normal_form (skipped in Full mode).
GradedDimensionReport graded_dimension(const YangianAlgebra& alg, int degree,
                                       bool verify_fixed_points = true);

}  // namespace shyang::yangian
