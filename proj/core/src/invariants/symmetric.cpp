#include "shyang/invariants/symmetric.hpp"

#include <stdexcept>

namespace shyang::invariants {

SymmetricContext::SymmetricContext(int n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("SymmetricContext needs n >= 2, got " + std::to_string(n));
  }
  for (int i = 1; i < 2 * n; ++i) {
    variables_.push_back("x_" + std::to_string(i));
  }
}

CPolynomial SymmetricContext::x(int i) const {
  if (i < 1 || i > 2 * n_) {
    throw std::out_of_range("x_" + std::to_string(i) + " outside x_1..x_" + std::to_string(2 * n_));
  }
  if (i < 2 * n_) {
    return CPolynomial::variable(variables_, static_cast<std::size_t>(i - 1));
  }
  CPolynomial sum(variables_);
  for (std::size_t k = 0; k < variables_.size(); ++k) {
    sum -= CPolynomial::variable(variables_, k);
  }
  return sum;
}

CPolynomial elementary_symmetric(const SymmetricContext& ctx, int j) {
  const int m = 2 * ctx.n();
  if (j < 0 || j > m) {
    throw std::out_of_range("e_" + std::to_string(j) + " outside e_0..e_" + std::to_string(m));
  }
  // Coefficients of prod_i (1 + x_i t), truncated at t^j.
  std::vector<CPolynomial> e(static_cast<std::size_t>(j) + 1, CPolynomial(ctx.variables()));
  e[0] = CPolynomial::constant(Scalar(1), ctx.variables());
  for (int i = 1; i <= m; ++i) {
    const CPolynomial xi = ctx.x(i);
    for (int k = std::min(i, j); k >= 1; --k) {
      e[k] += xi * e[k - 1];
    }
  }
  return e[j];
}

CPolynomial gamma_action_typeA(const SymmetricContext& ctx, const CPolynomial& p) {
  const int m = 2 * ctx.n();
  std::vector<CPolynomial> images;
  for (int i = 1; i < m; ++i) {
    images.push_back(-ctx.x(m + 1 - i));
  }
  return p.with_variables(ctx.variables()).substitute(images);
}

std::vector<CPolynomial> coinvariant_kernel_typeAB(const SymmetricContext& ctx) {
  std::vector<CPolynomial> out;
  for (int j = 3; j < 2 * ctx.n(); j += 2) {
    const CPolynomial e = elementary_symmetric(ctx, j);
    const CPolynomial odd_part = (e - gamma_action_typeA(ctx, e)) * make_scalar(1, 2);
    if (!(odd_part == e)) {
      throw std::logic_error("e_" + std::to_string(j) + " is not gamma-odd");
    }
    out.push_back(e);
  }
  return out;
}

CPolynomial rho_shift(const CPolynomial& p, const std::vector<Scalar>& rho) {
  if (rho.size() != p.num_variables()) {
    throw std::invalid_argument("rho has " + std::to_string(rho.size()) +
                                " coordinates but the polynomial has " +
                                std::to_string(p.num_variables()) + " variables");
  }
  std::vector<CPolynomial> images;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    images.push_back(CPolynomial::variable(p.variables(), i) -
                     CPolynomial::constant(rho[i], p.variables()));
  }
  return p.substitute(images);
}

}  // namespace shyang::invariants
