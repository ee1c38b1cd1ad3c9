#include "shyang/exactalg/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace shyang {

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator");
  }
  Scalar s(numerator, denominator);
  s.canonicalize();
  return s;
}

Scalar binomial(long n, long k) {
  if (k < 0) {
    return Scalar(0);
  }
  if (n < 0) {
    Scalar value = binomial(k - n - 1, k);
    return (k % 2 == 0) ? value : Scalar(-value);
  }
  if (k > n) {
    return Scalar(0);
  }
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(out);
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(const std::string& text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') {
    ++pos;
  }
  const std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == digits_begin) {
    throw std::invalid_argument("malformed fraction: '" + text + "'");
  }
  if (pos < text.size()) {
    if (text[pos] != '/') {
      throw std::invalid_argument("malformed fraction: '" + text + "'");
    }
    const std::size_t den_begin = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == den_begin || pos != text.size()) {
      throw std::invalid_argument("malformed fraction: '" + text + "'");
    }
  }
  Scalar s;
  try {
    s = Scalar(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed fraction: '" + text + "'");
  }
  if (s.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  s.canonicalize();
  return s;
}

}  // namespace shyang
