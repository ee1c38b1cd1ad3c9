#pragma once

#include <string>
#include <vector>

#include "shyang/exactalg/cpoly.hpp"

namespace shyang::invariants {

/// C[x_1, ..., x_2n] / (x_1 + ... + x_2n), realized on x_1..x_{2n-1} with
/// x_2n = -(x_1 + ... + x_{2n-1}).
class SymmetricContext {
 public:
  explicit SymmetricContext(int n);

  int n() const { return n_; }
  const std::vector<std::string>& variables() const { return variables_; }

  /// x_i for 1 <= i <= 2n, reduced in the quotient.
  CPolynomial x(int i) const;

 private:
  int n_;
  std::vector<std::string> variables_;
};

/// e_j of x_1..x_2n in the quotient; 0 <= j <= 2n.
CPolynomial elementary_symmetric(const SymmetricContext& ctx, int j);

/// The involution x_i -> -x_{2n+1-i}.
CPolynomial gamma_action_typeA(const SymmetricContext& ctx, const CPolynomial& p);

/// Generators e_3, e_5, ..., e_{2n-1} of the kernel of the coinvariant map.
/// Each is checked to equal (e_j - gamma(e_j)) / 2; throws std::logic_error
/// otherwise.
std::vector<CPolynomial> coinvariant_kernel_typeAB(const SymmetricContext& ctx);

/// x_i -> x_i - rho_i.
CPolynomial rho_shift(const CPolynomial& p, const std::vector<Scalar>& rho);

}  // namespace shyang::invariants
