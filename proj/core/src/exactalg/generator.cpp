#include "shyang/exactalg/generator.hpp"

#include <algorithm>
#include <numeric>

namespace shyang {

const char* family_name(Family f) {
  switch (f) {
    case Family::F:
      return "F";
    case Family::D1:
      return "D1";
    case Family::D2:
      return "D2";
    case Family::E:
      return "E";
  }
  return "?";
}

std::string to_string(const Generator& g) {
  return std::string(family_name(g.family)) + "^" + std::to_string(g.superscript);
}

Monomial::Monomial(std::vector<Generator> word) : word_(std::move(word)) {
  degree_ = std::accumulate(word_.begin(), word_.end(), 0,
                            [](int acc, const Generator& g) { return acc + g.superscript; });
}

Monomial::Monomial(std::initializer_list<Generator> word)
    : Monomial(std::vector<Generator>(word)) {}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.word_.reserve(word_.size() + other.word_.size());
  out.word_ = word_;
  out.word_.insert(out.word_.end(), other.word_.begin(), other.word_.end());
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::prefix(std::size_t end) const {
  return Monomial(std::vector<Generator>(word_.begin(), word_.begin() + end));
}

Monomial Monomial::suffix(std::size_t begin) const {
  return Monomial(std::vector<Generator>(word_.begin() + begin, word_.end()));
}

bool out_of_order(const Generator& a, const Generator& b) {
  if (a.family != b.family) {
    return a.family > b.family;
  }
  return a.superscript > b.superscript;
}

bool Monomial::is_pbw_ordered() const {
  for (std::size_t i = 0; i + 1 < word_.size(); ++i) {
    if (out_of_order(word_[i], word_[i + 1])) {
      return false;
    }
  }
  return true;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) {
    return a.degree() < b.degree();
  }
  const auto& wa = a.word();
  const auto& wb = b.word();
  const bool fam = std::lexicographical_compare(
      wa.begin(), wa.end(), wb.begin(), wb.end(),
      [](const Generator& x, const Generator& y) { return x.family < y.family; });
  if (fam) {
    return true;
  }
  const bool fam_rev = std::lexicographical_compare(
      wb.begin(), wb.end(), wa.begin(), wa.end(),
      [](const Generator& x, const Generator& y) { return x.family < y.family; });
  if (fam_rev) {
    return false;
  }
  return std::lexicographical_compare(
      wa.begin(), wa.end(), wb.begin(), wb.end(),
      [](const Generator& x, const Generator& y) { return x.superscript < y.superscript; });
}

std::string to_string(const Monomial& m) {
  if (m.is_identity()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (i > 0) {
      out += " * ";
    }
    out += to_string(m[i]);
  }
  return out;
}

}  // namespace shyang
