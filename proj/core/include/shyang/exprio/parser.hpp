#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shyang/exactalg/cpoly.hpp"
#include "shyang/exactalg/ncpoly.hpp"
#include "shyang/yangian/algebra.hpp"
#include "shyang/yangian/central.hpp"

namespace shyang::invariants {
class SymmetricContext;
}

namespace shyang::exprio {

struct Position {
  int line = 1;
  int column = 1;

  bool operator==(const Position&) const = default;
};

/// Syntax or elaboration error; what() is "line L, column C: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(Position pos, const std::string& message);

  Position position() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  Position pos_;
  std::string message_;
};

/// Parse tree. Sum children carry a sign each; Atom names are D1, D2, E, F,
/// Z (with index = superscript), e, x (index = subscript), u, v, w.
struct Expr {
  enum class Kind { Sum, Product, Power, Commutator, Number, Atom };

  Kind kind = Kind::Number;
  Position pos;
  std::vector<Expr> children;
  std::vector<int> signs;  // Sum only, +1 or -1 per child
  Scalar value;            // Number
  std::string atom;        // Atom
  int index = 0;           // Atom
  unsigned exponent = 1;   // Power

  /// Structural equality, ignoring positions.
  bool same_as(const Expr& other) const;
};

struct ParseLimits {
  int max_depth = 200;
  int max_integer = 100000;  // superscripts, subscripts and exponents
};

/// expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := atom ['^' int] | '(' expr ')' ['^' int] | '[' expr ',' expr ']'
///         | fraction; fraction := ['-'] digits ['/' digits].
Expr parse(std::string_view text, const ParseLimits& limits = {});

struct ElaborationOptions {
  yangian::CentralFormula formula = yangian::CentralFormula::Corrected;
  unsigned max_power = 64;
};

/// Value in the free algebra on the Yangian generators (not reduced).
/// Z^r expands to the closed-form central element. Inadmissible generators
/// and commutative atoms raise ParseError at their position.
NCPolynomial elaborate_nc(const Expr& e, const yangian::YangianAlgebra& alg,
                          const ElaborationOptions& options = {});

/// Atoms available to commutative elaboration. x_i and e_j need a symmetric
/// context; u, v, w become variables of C[u, v, w].
struct CommutativeScope {
  const invariants::SymmetricContext* symmetric = nullptr;
};

CPolynomial elaborate_c(const Expr& e, const CommutativeScope& scope,
                        const ElaborationOptions& options = {});

}  // namespace shyang::exprio
