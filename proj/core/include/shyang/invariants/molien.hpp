#pragma once

#include <stdexcept>
#include <vector>

#include "shyang/exactalg/scalar.hpp"
#include "shyang/invariants/dynkin.hpp"

namespace shyang::invariants {

using ExactMatrix = std::vector<std::vector<Scalar>>;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Weyl group as integer matrices on the root lattice, generated from
/// the simple reflections s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i.
std::vector<ExactMatrix> weyl_group_matrices(LieType t, int rank);

/// Coefficients 0..degree_bound of (1/|G|) sum_g 1/det(1 - t g). Throws
/// GroupError unless the matrices are distinct, square of one size and
/// closed under multiplication.
std::vector<Scalar> molien_series(const std::vector<ExactMatrix>& group, int degree_bound);

/// Degrees d_i with Molien series prod_i 1/(1 - t^d_i) through degree_bound,
/// sorted. Throws GroupError on closure failure or when no product form
/// with one factor per dimension matches.
std::vector<int> molien_degrees(const std::vector<ExactMatrix>& group, int degree_bound = 64);

}  // namespace shyang::invariants
