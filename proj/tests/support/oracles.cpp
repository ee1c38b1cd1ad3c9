#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

#include "shyang/yangian/central.hpp"
#include "shyang/yangian/checks.hpp"

namespace shyang::testing {

std::vector<long long> free_commutative_counts(const std::vector<int>& degrees, int max_degree) {
  std::vector<long long> counts(static_cast<std::size_t>(max_degree) + 1, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int deg) {
    if (i == degrees.size()) {
      ++counts[static_cast<std::size_t>(deg)];
      return;
    }
    for (int d = deg; d <= max_degree; d += degrees[i]) walk(i + 1, d);
  };
  walk(0, 0);
  return counts;
}

std::vector<CPolynomial> central_series_oracle(int n, int r_max) {
  const int big = std::max(r_max, 1);
  const auto vars = yangian::d_variables(big);
  const auto var = [&](int family, int r) {
    return CPolynomial::variable(vars, static_cast<std::size_t>((family - 1) * big + r - 1));
  };
  const auto one = CPolynomial::constant(Scalar(1), vars);
  // Series in x = 1/u, as coefficient lists of length r_max + 1.
  using Series = std::vector<CPolynomial>;
  const auto len = static_cast<std::size_t>(r_max) + 1;
  // u (u-1)^(2n-1) = u^(2n) (1 - x)^(2n-1), so Z^(r), the coefficient of
  // u^(2n-r), is the coefficient of x^r in the product of the three series.
  const std::size_t full = len;
  Series poly(full, one * Scalar(0));
  for (int k = 0; k <= 2 * n - 1 && static_cast<std::size_t>(k) < full; ++k) {
    poly[static_cast<std::size_t>(k)] = one * binomial(2 * n - 1, k) * Scalar(k % 2 == 0 ? 1 : -1);
  }
  // D1(u) = 1 + sum D1^r x^r.
  Series d1(full, one * Scalar(0));
  d1[0] = one;
  for (int r = 1; r <= big && static_cast<std::size_t>(r) < full; ++r) d1[r] = var(1, r);
  // D2(u-1) = 1 + sum_r D2^r (u-1)^-r, (u-1)^-r = x^r (1-x)^-r
  //         = sum_j C(r+j-1, j) x^(r+j).
  Series d2(full, one * Scalar(0));
  d2[0] = one;
  for (int r = 1; r <= big; ++r) {
    for (int j = 0; r + j < static_cast<int>(full); ++j) {
      d2[static_cast<std::size_t>(r + j)] += var(2, r) * binomial(r + j - 1, j);
    }
  }
  Series prod(full, one * Scalar(0));
  for (std::size_t i = 0; i < full; ++i)
    for (std::size_t j = 0; i + j < full; ++j)
      for (std::size_t k = 0; i + j + k < full; ++k) prod[i + j + k] += poly[i] * d1[j] * d2[k];
  return prod;
}

CPolynomial elementary_by_subsets(int n, int j) {
  const int m = 2 * n;
  std::vector<std::string> vars;
  for (int i = 1; i < m; ++i) vars.push_back("x_" + std::to_string(i));
  std::vector<CPolynomial> x;
  for (int i = 0; i < m - 1; ++i)
    x.push_back(CPolynomial::variable(vars, static_cast<std::size_t>(i)));
  CPolynomial last(vars);
  for (const auto& xi : x) last -= xi;
  x.push_back(last);
  CPolynomial sum(vars);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != j) continue;
    CPolynomial term = CPolynomial::constant(Scalar(1), vars);
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) term = term * x[static_cast<std::size_t>(i)];
    sum += term;
  }
  return sum;
}

std::vector<invariants::ExactMatrix> signed_permutations(int r) {
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<invariants::ExactMatrix> out;
  do {
    for (unsigned signs = 0; signs < (1u << r); ++signs) {
      invariants::ExactMatrix m(static_cast<std::size_t>(r),
                                std::vector<Scalar>(static_cast<std::size_t>(r), Scalar(0)));
      for (int i = 0; i < r; ++i) {
        m[static_cast<std::size_t>(i)]
         [static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
             (signs & (1u << i)) ? -1 : 1;
      }
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CPolynomial random_cpoly(const std::vector<std::string>& vars, std::uint64_t& state, int max_degree,
                         int terms) {
  CPolynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    const auto deg = yangian::seeded_draw(state, static_cast<std::uint64_t>(max_degree) + 1);
    for (std::uint64_t k = 0; k < deg; ++k) e[yangian::seeded_draw(state, vars.size())] += 1;
    const long num = static_cast<long>(yangian::seeded_draw(state, 11)) - 5;
    const long den = 1 + static_cast<long>(yangian::seeded_draw(state, 4));
    p.add_term(e, make_scalar(num, den));
  }
  return p;
}

}  // namespace shyang::testing
