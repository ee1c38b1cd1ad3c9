#pragma once

#include <map>
#include <string>
#include <vector>

#include "shyang/exactalg/scalar.hpp"

namespace shyang {

using Exponents = std::vector<int>;

/// Commutative multivariate polynomial over a named, ordered variable set.
///
/// Operands of binary operations must share the variable set; a polynomial
/// over the empty set (a constant) is promoted to the other operand's set.
class CPolynomial {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  CPolynomial() = default;
  explicit CPolynomial(std::vector<std::string> variables);

  static CPolynomial constant(const Scalar& c, std::vector<std::string> variables = {});
  static CPolynomial variable(const std::vector<std::string>& variables, std::size_t index);
  static CPolynomial variable(const std::vector<std::string>& variables, const std::string& name);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  /// Index of a variable by name, or -1.
  int index_of(const std::string& name) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Exponents& e) const;

  /// Total degree (-1 for zero). With weights, the weighted degree.
  int total_degree() const;
  int weighted_degree(const std::vector<int>& weights) const;
  bool is_homogeneous(const std::vector<int>& weights) const;

  void add_term(const Exponents& e, const Scalar& c);

  CPolynomial& operator+=(const CPolynomial& other);
  CPolynomial& operator-=(const CPolynomial& other);
  CPolynomial& operator*=(const Scalar& c);
  CPolynomial operator-() const;

  friend CPolynomial operator+(CPolynomial a, const CPolynomial& b) { return a += b; }
  friend CPolynomial operator-(CPolynomial a, const CPolynomial& b) { return a -= b; }
  friend CPolynomial operator*(CPolynomial a, const Scalar& c) { return a *= c; }
  friend CPolynomial operator*(const Scalar& c, CPolynomial a) { return a *= c; }
  friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b);

  CPolynomial pow(unsigned exponent) const;

  /// Simultaneous substitution x_i -> images[i]. All images must share one
  /// variable set, which becomes the variable set of the result.
  CPolynomial substitute(const std::vector<CPolynomial>& images) const;

  /// Re-expresses over a larger (or reordered) variable set containing every
  /// variable this polynomial actually uses.
  CPolynomial with_variables(const std::vector<std::string>& variables) const;

  CPolynomial derivative(std::size_t index) const;

  bool operator==(const CPolynomial& other) const;

 private:
  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Brings two operands onto a common variable set (constant promotion).
void unify_variables(CPolynomial& a, CPolynomial& b);

}  // namespace shyang
