#include "shyang/kleinian/kleinian.hpp"

#include <algorithm>

namespace shyang::kleinian {

namespace {

CPolynomial uvw(std::size_t i) {
  return CPolynomial::variable(KleinianRing::invariant_variables(), i);
}

CPolynomial uvw_monomial(int a, int b, int c) {
  CPolynomial p(KleinianRing::invariant_variables());
  p.add_term({a, b, c}, Scalar(1));
  return p;
}

}  // namespace

const std::vector<std::string>& KleinianRing::plane_variables() {
  static const std::vector<std::string> vars{"x", "y"};
  return vars;
}

const std::vector<std::string>& KleinianRing::invariant_variables() {
  static const std::vector<std::string> vars{"u", "v", "w"};
  return vars;
}

KleinianRing build_kleinian(int m) {
  if (m < 2) {
    throw std::invalid_argument("Kleinian ring needs m >= 2, got " + std::to_string(m));
  }
  KleinianRing r;
  r.m = m;
  r.x = CPolynomial::variable(KleinianRing::plane_variables(), 0);
  r.y = CPolynomial::variable(KleinianRing::plane_variables(), 1);
  r.u = r.x.pow(static_cast<unsigned>(m));
  r.v = r.y.pow(static_cast<unsigned>(m));
  r.w = r.x * r.y;
  r.relation = uvw(0) * uvw(1) - uvw(2).pow(static_cast<unsigned>(m));
  if (!to_plane(r, r.relation).is_zero()) {
    throw std::logic_error("uv - w^m does not vanish in C[x, y]");
  }
  return r;
}

CPolynomial induced_bracket(const KleinianRing&, const CPolynomial& p, const CPolynomial& q) {
  const auto& vars = KleinianRing::plane_variables();
  const CPolynomial a = p.with_variables(vars);
  const CPolynomial b = q.with_variables(vars);
  return a.derivative(0) * b.derivative(1) - a.derivative(1) * b.derivative(0);
}

CPolynomial to_plane(const KleinianRing& ring, const CPolynomial& q) {
  return q.with_variables(KleinianRing::invariant_variables()).substitute({ring.u, ring.v, ring.w});
}

CPolynomial to_invariants(const KleinianRing& ring, const CPolynomial& p) {
  CPolynomial out(KleinianRing::invariant_variables());
  const CPolynomial plane = p.with_variables(KleinianRing::plane_variables());
  for (const auto& [e, c] : plane.terms()) {
    const int a = e[0];
    const int b = e[1];
    if ((a - b) % ring.m != 0) {
      throw ReexpressionError("x^" + std::to_string(a) + " y^" + std::to_string(b) +
                              " is not invariant for m = " + std::to_string(ring.m));
    }
    const int k = std::min(a, b);
    out.add_term({(a - k) / ring.m, (b - k) / ring.m, k}, c);
  }
  return out;
}

CPolynomial reduce_relation(const KleinianRing& ring, const CPolynomial& q) {
  CPolynomial out(KleinianRing::invariant_variables());
  const CPolynomial in = q.with_variables(KleinianRing::invariant_variables());
  for (const auto& [e, c] : in.terms()) {
    const int k = std::min(e[0], e[1]);
    out.add_term({e[0] - k, e[1] - k, e[2] + ring.m * k}, c);
  }
  return out;
}

PoissonBracketTable bracket_table(const KleinianRing& ring) {
  PoissonBracketTable t;
  t.wu = to_invariants(ring, induced_bracket(ring, ring.w, ring.u));
  t.wv = to_invariants(ring, induced_bracket(ring, ring.w, ring.v));
  t.uv = to_invariants(ring, induced_bracket(ring, ring.u, ring.v));
  return t;
}

PoissonBracketTable expected_bracket_table(int m) {
  PoissonBracketTable t;
  t.wu = uvw_monomial(1, 0, 0) * Scalar(-m);
  t.wv = uvw_monomial(0, 1, 0) * Scalar(m);
  t.uv = uvw_monomial(0, 0, m - 1) * Scalar(m * m);
  return t;
}

CPolynomial invariant_bracket(const KleinianRing& ring, const PoissonBracketTable& table,
                              const CPolynomial& p, const CPolynomial& q) {
  const auto& vars = KleinianRing::invariant_variables();
  const CPolynomial a = p.with_variables(vars);
  const CPolynomial b = q.with_variables(vars);
  // {g_i, g_j} for g = (u, v, w).
  const CPolynomial zero(vars);
  const CPolynomial gb[3][3] = {
      {zero, table.uv, -table.wu},
      {-table.uv, zero, -table.wv},
      {table.wu, table.wv, zero},
  };
  CPolynomial out(vars);
  for (std::size_t i = 0; i < 3; ++i) {
    const CPolynomial da = a.derivative(i);
    if (da.is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      out += da * b.derivative(j) * gb[i][j];
    }
  }
  return reduce_relation(ring, out);
}

std::vector<CPolynomial> invariant_monomials(const KleinianRing& ring, int degree_bound) {
  std::vector<CPolynomial> out;
  for (int d = 0; d <= degree_bound; ++d) {
    for (int a = 0; a <= d; ++a) {
      if ((2 * a - d) % ring.m != 0) continue;
      CPolynomial p(KleinianRing::plane_variables());
      p.add_term({a, d - a}, Scalar(1));
      out.push_back(std::move(p));
    }
  }
  return out;
}

JacobiReport jacobi_check(const KleinianRing& ring, int degree_bound) {
  JacobiReport report;
  report.degree_bound = degree_bound;
  const auto mons = invariant_monomials(ring, degree_bound);
  const auto br = [&](const CPolynomial& p, const CPolynomial& q) {
    return induced_bracket(ring, p, q);
  };
  for (std::size_t i = 0; i < mons.size(); ++i) {
    for (std::size_t j = i; j < mons.size(); ++j) {
      const CPolynomial pq = br(mons[i], mons[j]);
      for (std::size_t k = j; k < mons.size(); ++k) {
        const CPolynomial& p = mons[i];
        const CPolynomial& q = mons[j];
        const CPolynomial& r = mons[k];
        const CPolynomial sum = br(p, br(q, r)) + br(q, br(r, p)) + br(r, pq);
        ++report.triples;
        if (!sum.is_zero()) ++report.failures;
      }
    }
  }
  return report;
}

bool relation_ideal_is_poisson(const KleinianRing& ring) {
  const PoissonBracketTable table = bracket_table(ring);
  for (std::size_t g = 0; g < 3; ++g) {
    if (!invariant_bracket(ring, table, uvw(g), ring.relation).is_zero()) {
      return false;
    }
  }
  return true;
}

bool bracket_degree_check(const KleinianRing& ring) {
  const CPolynomial gens[3] = {ring.u, ring.v, ring.w};
  const std::vector<int> unit{1, 1};
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      const CPolynomial c = induced_bracket(ring, a, b);
      if (c.is_zero()) continue;
      if (!c.is_homogeneous(unit) || c.total_degree() != a.total_degree() + b.total_degree() - 2) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace shyang::kleinian
