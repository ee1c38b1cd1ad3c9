#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "shyang/exactalg/cpoly.hpp"

namespace shyang::kleinian {

class ReexpressionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// C[x, y]^{Z/m} for (x, y) -> (zeta x, zeta^-1 y): generated by u = x^m,
/// v = y^m, w = xy with uv = w^m. Grading deg x = deg y = 1.
struct KleinianRing {
  int m = 0;
  CPolynomial x, y;
  CPolynomial u, v, w;   // in x, y
  CPolynomial relation;  // u v - w^m in the coordinates u, v, w

  static const std::vector<std::string>& plane_variables();      // x, y
  static const std::vector<std::string>& invariant_variables();  // u, v, w
  /// Degrees of u, v, w in the x, y grading.
  std::vector<int> invariant_weights() const { return {m, m, 2}; }
};

/// Throws std::invalid_argument for m < 2 and std::logic_error if uv = w^m
/// fails to expand identically.
KleinianRing build_kleinian(int m);

/// {p, q} = p_x q_y - p_y q_x for p, q in C[x, y].
CPolynomial induced_bracket(const KleinianRing& ring, const CPolynomial& p, const CPolynomial& q);

/// u, v, w -> x^m, y^m, xy.
CPolynomial to_plane(const KleinianRing& ring, const CPolynomial& q);

/// Rewrites an invariant polynomial in x, y through u, v, w, using only
/// monomials u^i w^k and v^j w^k. Throws ReexpressionError on a monomial
/// x^a y^b with a != b mod m.
CPolynomial to_invariants(const KleinianRing& ring, const CPolynomial& p);

/// Normal form in C[u, v, w] / (uv - w^m): u^a v^b -> u^(a-c) v^(b-c) w^(mc),
/// c = min(a, b).
CPolynomial reduce_relation(const KleinianRing& ring, const CPolynomial& q);

struct PoissonBracketTable {
  CPolynomial wu, wv, uv;  // {w,u}, {w,v}, {u,v} in u, v, w
};

/// Brackets of the generators, computed in x, y and re-expressed.
PoissonBracketTable bracket_table(const KleinianRing& ring);
/// {w,u} = -m u, {w,v} = m v, {u,v} = m^2 w^(m-1).
PoissonBracketTable expected_bracket_table(int m);

/// Bracket on C[u, v, w] extended from the generator table by Leibniz.
CPolynomial invariant_bracket(const KleinianRing& ring, const PoissonBracketTable& table,
                              const CPolynomial& p, const CPolynomial& q);

/// Monomials x^a y^b with a = b mod m and a + b <= degree_bound.
std::vector<CPolynomial> invariant_monomials(const KleinianRing& ring, int degree_bound);

struct JacobiReport {
  int degree_bound = 0;
  long triples = 0;
  long failures = 0;

  bool success() const { return failures == 0; }
};

/// Jacobi identity on all triples p <= q <= r of invariant monomials.
JacobiReport jacobi_check(const KleinianRing& ring, int degree_bound);

/// {g, uv - w^m} lies in (uv - w^m) for g in {u, v, w}.
bool relation_ideal_is_poisson(const KleinianRing& ring);

/// deg {a, b} = deg a + deg b - 2 for every pair of generators.
bool bracket_degree_check(const KleinianRing& ring);

}  // namespace shyang::kleinian
