#pragma once

// Reference computations used only by the tests. Each one avoids the code
// path it is compared against.

#include <cstdint>
#include <string>
#include <vector>

#include "shyang/exactalg/cpoly.hpp"
#include "shyang/exactalg/ncpoly.hpp"
#include "shyang/invariants/molien.hpp"

namespace shyang::testing {

/// Coefficients of prod_i 1/(1 - t^degrees[i]) through t^max_degree, by
/// counting exponent vectors directly.
std::vector<long long> free_commutative_counts(const std::vector<int>& degrees, int max_degree);

/// Z^(0..r_max) of u (u-1)^(2n-1) D1(u) D2(u-1) in the commuting variables
/// D1^1..D1^R, D2^1..D2^R (R = r_max), built from the binomial series of
/// (1 - 1/u)^k term by term.
std::vector<CPolynomial> central_series_oracle(int n, int r_max);

/// e_j as the sum over j-subsets of {x_1, ..., x_2n}, then x_2n eliminated.
CPolynomial elementary_by_subsets(int n, int j);

/// The 2^r r! signed permutation matrices of size r.
std::vector<invariants::ExactMatrix> signed_permutations(int r);

/// Deterministic pseudo-random polynomial in the given variables.
CPolynomial random_cpoly(const std::vector<std::string>& vars, std::uint64_t& state, int max_degree,
                         int terms);

}  // namespace shyang::testing
