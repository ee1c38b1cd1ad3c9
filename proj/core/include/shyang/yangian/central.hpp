#pragma once

#include <string>
#include <vector>

#include "shyang/exactalg/cpoly.hpp"
#include "shyang/exactalg/ncpoly.hpp"
#include "shyang/yangian/algebra.hpp"

namespace shyang::yangian {

/// Variable set {D1^1..D1^R, D2^1..D2^R} for the commutative D-subalgebra.
std::vector<std::string> d_variables(int max_superscript);

/// The variable D_i^(r) (r >= 1) or the constant 1 (r = 0) over d_variables(R).
CPolynomial d_coeff(int i, int r, int max_superscript);

/// Embeds a polynomial over D-variables into the free algebra as a sum of
/// PBW-ordered words (D1-block then D2-block, ascending).
NCPolynomial d_to_nc(const CPolynomial& p, Alphabet alphabet = {});

/// D~_i^(t): the u^-t coefficient of D_i(u)^-1, from the convolution
/// sum_{s=0}^t D_i^(s) D~_i^(t-s) = delta_{t,0}.
CPolynomial d_inverse_coeff(const YangianAlgebra& alg, int i, int t);
CPolynomial d_inverse_coeff(int i, int t);

/// u^-r coefficient of D_2(u-1): sum_{s=0}^r C(r-1, r-s) D_2^(s); zero for r = -1.
CPolynomial shifted_d2_coeff(const YangianAlgebra& alg, int r);

struct CentralElement {
  int r = 0;
  NCPolynomial as_polynomial;
};

/// Reads Z^(0)..Z^(r_max) off u(u-1)^(2n-1) D_1(u) D_2(u-1) by multiplying
/// the polynomial and the truncated series out directly.
std::vector<CentralElement> central_series_expand(const YangianAlgebra& alg, int r_max);

enum class CentralFormula {
  /// Z^(r) = sum_s C(2n-1, 2n-1-r+s) (-1)^(r-s) C^(s)
  Corrected,
  /// sum_s C(2n-1, 2n-1-s) (-1)^(2n-s) C^(s), the index convention that does
  /// not reproduce the series expansion; kept for comparison only.
  Printed,
};

/// C^(s) = sum_t D_1^(t) D2o^(s-t), D2o = shifted_d2_coeff.
CPolynomial c_coeff(int n, int s);

CentralElement central_element_closed_form(const YangianAlgebra& alg, int r,
                                           CentralFormula formula = CentralFormula::Corrected);

}  // namespace shyang::yangian
