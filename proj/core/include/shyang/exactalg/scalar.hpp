#pragma once

#include <gmpxx.h>

#include <string>

namespace shyang {

/// Exact rational number, always in lowest terms with positive denominator.
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar make_scalar(long numerator, long denominator = 1);

/// Generalized binomial coefficient C(n, k).
///
/// C(n, k) = 0 for k < 0 and for 0 <= n < k. For negative n the upper
/// index is extended by C(n, k) = (-1)^k C(k - n - 1, k), so C(-1, 0) = 1.
Scalar binomial(long n, long k);

/// "p/q" or "p" when q = 1.
std::string to_string(const Scalar& s);

/// Parses "-? digits ['/' digits]"; throws std::invalid_argument on anything else
/// or a zero denominator.
Scalar parse_scalar(const std::string& text);

}  // namespace shyang
