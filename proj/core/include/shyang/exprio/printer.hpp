#pragma once

#include <string>

#include "shyang/exactalg/cpoly.hpp"
#include "shyang/exactalg/ncpoly.hpp"
#include "shyang/exprio/parser.hpp"

namespace shyang::exprio {

/// Terms by descending canonical degree, ascending monomial order within a
/// degree: "D1^1 + D2^1 - 3". The zero polynomial prints as "0".
std::string print(const NCPolynomial& p);

/// Terms by descending total degree, then descending exponent vectors;
/// variables print by name, x_1^2 * x_2.
std::string print(const CPolynomial& p);

/// Reparses to a structurally equal tree.
std::string print(const Expr& e);

}  // namespace shyang::exprio
