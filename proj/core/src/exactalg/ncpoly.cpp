#include "shyang/exactalg/ncpoly.hpp"

#include <algorithm>
#include <string>

namespace shyang {

Alphabet merge_alphabets(Alphabet a, Alphabet b) {
  if (a.n == 0) {
    return b;
  }
  if (b.n == 0 || a == b) {
    return a;
  }
  throw AlphabetMismatch("alphabet mismatch: n=" + std::to_string(a.n) +
                         " vs n=" + std::to_string(b.n));
}

NCPolynomial NCPolynomial::constant(const Scalar& c, Alphabet alphabet) {
  NCPolynomial p(alphabet);
  p.add_term(Monomial(), c);
  return p;
}

NCPolynomial NCPolynomial::monomial(const Monomial& m, const Scalar& c, Alphabet alphabet) {
  NCPolynomial p(alphabet);
  p.add_term(m, c);
  return p;
}

NCPolynomial NCPolynomial::generator(const Generator& g, Alphabet alphabet) {
  return monomial(Monomial{g}, Scalar(1), alphabet);
}

NCPolynomial NCPolynomial::with_alphabet(Alphabet alphabet) const {
  NCPolynomial out = *this;
  out.alphabet_ = merge_alphabets(alphabet_, alphabet);
  return out;
}

int NCPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    d = std::max(d, m.degree());
  }
  return d;
}

Scalar NCPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPolynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other) {
  alphabet_ = merge_alphabets(alphabet_, other.alphabet_);
  for (const auto& [m, c] : other.terms_) {
    add_term(m, c);
  }
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& other) {
  alphabet_ = merge_alphabets(alphabet_, other.alphabet_);
  for (const auto& [m, c] : other.terms_) {
    add_term(m, -c);
  }
  return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial out = *this;
  out *= Scalar(-1);
  return out;
}

NCPolynomial nc_mul(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial out(merge_alphabets(a.alphabet(), b.alphabet()));
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) { return nc_mul(a, b); }

NCPolynomial nc_commutator(const NCPolynomial& a, const NCPolynomial& b) {
  return nc_mul(a, b) - nc_mul(b, a);
}

NCPolynomial nc_pow(const NCPolynomial& a, unsigned exponent) {
  NCPolynomial out = NCPolynomial::constant(Scalar(1), a.alphabet());
  for (unsigned i = 0; i < exponent; ++i) {
    out = nc_mul(out, a);
  }
  return out;
}

}  // namespace shyang
