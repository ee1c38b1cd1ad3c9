#pragma once

#include <map>
#include <stdexcept>

#include "shyang/exactalg/generator.hpp"
#include "shyang/exactalg/scalar.hpp"

namespace shyang {

/// Ambient alphabet of a noncommutative polynomial: the parameter n fixing
/// which E-superscripts are admissible. n = 0 marks a polynomial that has not
/// been tied to an algebra yet (scalars, hand-built test data); it is
/// compatible with every alphabet.
struct Alphabet {
  int n = 0;

  bool operator==(const Alphabet&) const = default;
};

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of the free associative algebra on the Yangian generators with
/// exact rational coefficients. Zero coefficients are never stored.
class NCPolynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialLess>;

  NCPolynomial() = default;
  explicit NCPolynomial(Alphabet alphabet) : alphabet_(alphabet) {}

  static NCPolynomial constant(const Scalar& c, Alphabet alphabet = {});
  static NCPolynomial monomial(const Monomial& m, const Scalar& c = Scalar(1),
                               Alphabet alphabet = {});
  static NCPolynomial generator(const Generator& g, Alphabet alphabet = {});

  Alphabet alphabet() const { return alphabet_; }
  NCPolynomial with_alphabet(Alphabet alphabet) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Maximum canonical degree over terms; -1 for the zero polynomial.
  int degree() const;
  Scalar coefficient(const Monomial& m) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Scalar& c);

  NCPolynomial& operator+=(const NCPolynomial& other);
  NCPolynomial& operator-=(const NCPolynomial& other);
  NCPolynomial& operator*=(const Scalar& c);

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(NCPolynomial a, const Scalar& c) { return a *= c; }
  friend NCPolynomial operator*(const Scalar& c, NCPolynomial a) { return a *= c; }
  NCPolynomial operator-() const;

  bool operator==(const NCPolynomial& other) const { return terms_ == other.terms_; }

 private:
  Alphabet alphabet_;
  TermMap terms_;
};

/// Resolves the common alphabet of two operands; throws AlphabetMismatch.
Alphabet merge_alphabets(Alphabet a, Alphabet b);

/// Concatenation product, extended bilinearly.
NCPolynomial nc_mul(const NCPolynomial& a, const NCPolynomial& b);
NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);

/// ab - ba in the free algebra.
NCPolynomial nc_commutator(const NCPolynomial& a, const NCPolynomial& b);

NCPolynomial nc_pow(const NCPolynomial& a, unsigned exponent);

}  // namespace shyang
