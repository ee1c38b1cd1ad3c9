#include "shyang/exactalg/cpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace shyang {

CPolynomial::CPolynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

CPolynomial CPolynomial::constant(const Scalar& c, std::vector<std::string> variables) {
  CPolynomial p(std::move(variables));
  p.add_term(Exponents(p.num_variables(), 0), c);
  return p;
}

CPolynomial CPolynomial::variable(const std::vector<std::string>& variables, std::size_t index) {
  if (index >= variables.size()) {
    throw std::out_of_range("variable index out of range");
  }
  CPolynomial p(variables);
  Exponents e(variables.size(), 0);
  e[index] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

CPolynomial CPolynomial::variable(const std::vector<std::string>& variables,
                                  const std::string& name) {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) {
    throw std::invalid_argument("unknown variable '" + name + "'");
  }
  return variable(variables, static_cast<std::size_t>(it - variables.begin()));
}

int CPolynomial::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  return it == variables_.end() ? -1 : static_cast<int>(it - variables_.begin());
}

bool CPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 &&
                            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                        [](int e) { return e == 0; }));
}

Scalar CPolynomial::constant_term() const { return coefficient(Exponents(variables_.size(), 0)); }

Scalar CPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int CPolynomial::total_degree() const {
  return weighted_degree(std::vector<int>(variables_.size(), 1));
}

int CPolynomial::weighted_degree(const std::vector<int>& weights) const {
  if (weights.size() != variables_.size()) {
    throw std::invalid_argument("weight vector size mismatch");
  }
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      w += e[i] * weights[i];
    }
    d = std::max(d, w);
  }
  return d;
}

bool CPolynomial::is_homogeneous(const std::vector<int>& weights) const {
  if (weights.size() != variables_.size()) {
    throw std::invalid_argument("weight vector size mismatch");
  }
  int expected = -1;
  for (const auto& [e, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      w += e[i] * weights[i];
    }
    if (expected >= 0 && w != expected) {
      return false;
    }
    expected = w;
  }
  return true;
}

void CPolynomial::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != variables_.size()) {
    throw std::invalid_argument("exponent vector size mismatch");
  }
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

void unify_variables(CPolynomial& a, CPolynomial& b) {
  if (a.variables() == b.variables()) {
    return;
  }
  if (a.num_variables() == 0 && a.is_constant()) {
    a = CPolynomial::constant(a.constant_term(), b.variables());
    return;
  }
  if (b.num_variables() == 0 && b.is_constant()) {
    b = CPolynomial::constant(b.constant_term(), a.variables());
    return;
  }
  throw std::invalid_argument("variable set mismatch between polynomials");
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& other) {
  CPolynomial rhs = other;
  unify_variables(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) {
    add_term(e, c);
  }
  return *this;
}

CPolynomial& CPolynomial::operator-=(const CPolynomial& other) {
  CPolynomial rhs = other;
  unify_variables(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) {
    add_term(e, -c);
  }
  return *this;
}

CPolynomial& CPolynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

CPolynomial CPolynomial::operator-() const {
  CPolynomial out = *this;
  out *= Scalar(-1);
  return out;
}

CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
  CPolynomial lhs = a;
  CPolynomial rhs = b;
  unify_variables(lhs, rhs);
  CPolynomial out(lhs.variables());
  Exponents e(lhs.num_variables());
  for (const auto& [ea, ca] : lhs.terms()) {
    for (const auto& [eb, cb] : rhs.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CPolynomial CPolynomial::pow(unsigned exponent) const {
  CPolynomial result = constant(Scalar(1), variables_);
  CPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = result * base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

CPolynomial CPolynomial::substitute(const std::vector<CPolynomial>& images) const {
  if (images.size() != variables_.size()) {
    throw std::invalid_argument("substitution needs one image per variable");
  }
  std::vector<std::string> target;
  for (const auto& img : images) {
    if (img.num_variables() > 0) {
      if (!target.empty() && target != img.variables()) {
        throw std::invalid_argument("substitution images use different variable sets");
      }
      target = img.variables();
    }
  }
  // Cache powers per variable; exponents are small in practice.
  std::vector<std::vector<CPolynomial>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const CPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(constant(Scalar(1), target));
    }
    while (static_cast<int>(cache.size()) <= k) {
      CPolynomial img = images[i];
      if (img.num_variables() == 0) {
        img = constant(img.constant_term(), target);
      }
      cache.push_back(cache.back() * img);
    }
    return cache[k];
  };
  CPolynomial out(target);
  for (const auto& [e, c] : terms_) {
    CPolynomial term = constant(c, target);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) {
        term = term * power(i, e[i]);
      }
    }
    out += term;
  }
  return out;
}

CPolynomial CPolynomial::with_variables(const std::vector<std::string>& variables) const {
  std::vector<int> map(variables_.size(), -1);
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), variables_[i]);
    if (it != variables.end()) {
      map[i] = static_cast<int>(it - variables.begin());
    }
  }
  CPolynomial out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) {
        continue;
      }
      if (map[i] < 0) {
        throw std::invalid_argument("variable '" + variables_[i] + "' missing from target set");
      }
      ne[map[i]] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

CPolynomial CPolynomial::derivative(std::size_t index) const {
  if (index >= variables_.size()) {
    throw std::out_of_range("variable index out of range");
  }
  CPolynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) {
      continue;
    }
    Exponents ne = e;
    ne[index] -= 1;
    out.add_term(ne, c * e[index]);
  }
  return out;
}

bool CPolynomial::operator==(const CPolynomial& other) const {
  if (variables_ == other.variables_) {
    return terms_ == other.terms_;
  }
  CPolynomial a = *this;
  CPolynomial b = other;
  try {
    unify_variables(a, b);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return a.terms_ == b.terms_;
}

}  // namespace shyang
