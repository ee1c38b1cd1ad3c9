#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shyang/exactalg/scalar.hpp"

namespace shyang::invariants {

enum class LieType { A, B, C, D, E, F, G };

char type_letter(LieType t);
LieType parse_type(std::string_view text);
/// "B2" -> (B, 2). Throws std::invalid_argument for unknown or invalid types.
std::pair<LieType, int> parse_type_rank(std::string_view text);
bool valid_type_rank(LieType t, int rank);
std::string type_name(LieType t, int rank);

struct DynkinDatum {
  LieType type = LieType::A;
  int rank = 0;
  std::vector<int> degrees;
  std::vector<int> kazhdan_degrees;  // 2 * degrees

  std::string name() const { return type_name(type, rank); }
  Integer degree_product() const;
};

/// |W| from the classical closed forms and the exceptional constants.
Integer weyl_group_order(LieType t, int rank);

/// Cartan matrix A with A[i][j] = <alpha_i^vee, alpha_j> in Bourbaki labelling.
std::vector<std::vector<int>> cartan_matrix(LieType t, int rank);

/// Degrees from the shipped table. Throws std::invalid_argument for an
/// invalid type or a rank the table does not cover.
DynkinDatum fundamental_degrees(LieType t, int rank);

/// Entries of a degree table (lines "TYPE RANK d_1 ... d_rank").
std::vector<DynkinDatum> parse_degree_table(std::string_view text);
const std::vector<DynkinDatum>& builtin_degree_table();

struct LambdaPartition {
  std::vector<std::size_t> lambda0;  // indices with Kazhdan degree = 0 mod 4
  std::vector<std::size_t> lambda2;  // indices with Kazhdan degree = 2 mod 4
};

LambdaPartition lambda_partition(const DynkinDatum& datum);
/// Kazhdan degrees at the given indices, sorted.
std::vector<int> kazhdan_at(const DynkinDatum& datum, const std::vector<std::size_t>& indices);

struct FoldingPair {
  DynkinDatum folded;
  DynkinDatum unfolded;
  int gamma0_order = 0;
};

/// (B_n, A_2n-1), (C_n, D_n+1), (F4, E6), (G2, D4).
FoldingPair folding_pair(LieType folded, int rank);

struct FoldingReport {
  FoldingPair pair;
  LambdaPartition partition;          // of the unfolded datum
  std::vector<int> unfolded_lambda0;  // sorted Kazhdan degrees
  std::vector<int> unfolded_lambda2;
  std::vector<int> folded_kazhdan;  // sorted
  bool multisets_equal = false;
  bool ranks_equal = false;

  bool pass() const { return multisets_equal && ranks_equal; }
};

FoldingReport folding_degree_check(const FoldingPair& pair);

}  // namespace shyang::invariants
