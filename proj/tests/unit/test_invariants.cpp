#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "shyang/invariants/dynkin.hpp"
#include "shyang/invariants/molien.hpp"
#include "shyang/invariants/symmetric.hpp"
#include "shyang/invariants/table1.hpp"

namespace shyang::invariants {
namespace {

using IntVec = std::vector<int>;

ExactMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  ExactMatrix m;
  for (const auto& row : rows) {
    m.emplace_back();
    for (long v : row) m.back().push_back(Scalar(v));
  }
  return m;
}

// Restricts p to the variables of the symmetric context.
CPolynomial over(const SymmetricContext& ctx, const CPolynomial& p) {
  return p.with_variables(ctx.variables());
}

TEST(Symmetric, SmallElementaryPolynomials) {
  const SymmetricContext ctx(2);
  EXPECT_EQ(elementary_symmetric(ctx, 0), CPolynomial::constant(Scalar(1), ctx.variables()));
  EXPECT_TRUE(elementary_symmetric(ctx, 1).is_zero());
  const auto x1 = ctx.x(1);
  const auto x2 = ctx.x(2);
  const auto x3 = ctx.x(3);
  const auto e2 = -(x1 * x1) - x2 * x2 - x3 * x3 - x1 * x2 - x1 * x3 - x2 * x3;
  EXPECT_EQ(elementary_symmetric(ctx, 2), e2);
  EXPECT_THROW(elementary_symmetric(ctx, 5), std::out_of_range);
  EXPECT_THROW(elementary_symmetric(ctx, -1), std::out_of_range);
  EXPECT_THROW(SymmetricContext(1), std::invalid_argument);
}

class SymmetricN : public ::testing::TestWithParam<int> {};

TEST_P(SymmetricN, ElementaryMatchesSubsetSum) {
  const SymmetricContext ctx(GetParam());
  for (int j = 0; j <= 2 * ctx.n(); ++j) {
    EXPECT_EQ(elementary_symmetric(ctx, j),
              over(ctx, shyang::testing::elementary_by_subsets(ctx.n(), j)))
        << "j=" << j;
  }
}

TEST_P(SymmetricN, GammaActsBySignOnElementary) {
  const SymmetricContext ctx(GetParam());
  for (int j = 2; j <= 2 * ctx.n(); ++j) {
    const auto e = elementary_symmetric(ctx, j);
    EXPECT_EQ(gamma_action_typeA(ctx, e), j % 2 == 0 ? e : -e) << "j=" << j;
  }
}

TEST_P(SymmetricN, CoinvariantKernelIsOddElementary) {
  const SymmetricContext ctx(GetParam());
  const auto kernel = coinvariant_kernel_typeAB(ctx);
  ASSERT_EQ(kernel.size(), static_cast<std::size_t>(ctx.n() - 1));
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const int j = 3 + 2 * static_cast<int>(i);
    EXPECT_EQ(kernel[i], elementary_symmetric(ctx, j));
    EXPECT_EQ(gamma_action_typeA(ctx, kernel[i]), -kernel[i]);
  }
}

TEST_P(SymmetricN, GammaIsAnInvolutiveRingAutomorphism) {
  const SymmetricContext ctx(GetParam());
  std::uint64_t state = 42 + static_cast<std::uint64_t>(ctx.n());
  const auto gamma = [&](const CPolynomial& p) { return gamma_action_typeA(ctx, p); };
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = shyang::testing::random_cpoly(ctx.variables(), state, 3, 4);
    const auto q = shyang::testing::random_cpoly(ctx.variables(), state, 3, 4);
    EXPECT_EQ(gamma(gamma(p)), p);
    EXPECT_EQ(gamma(p * q), gamma(p) * gamma(q));
    EXPECT_EQ(gamma(p + q), gamma(p) + gamma(q));
  }
  CPolynomial total(ctx.variables());
  for (int i = 1; i <= 2 * ctx.n(); ++i) total += gamma(ctx.x(i));
  EXPECT_TRUE(total.is_zero());
  const auto c = CPolynomial::constant(Scalar(7), ctx.variables());
  EXPECT_EQ(gamma(c), c);
}

INSTANTIATE_TEST_SUITE_P(N, SymmetricN, ::testing::Values(2, 3, 4));

TEST(RhoShift, ExamplesAndInverse) {
  const SymmetricContext ctx(2);
  const auto& vars = ctx.variables();
  const std::vector<Scalar> zero(vars.size(), Scalar(0));
  std::vector<Scalar> rho(vars.size(), Scalar(0));
  rho[0] = 1;
  const auto x1 = ctx.x(1);
  EXPECT_EQ(rho_shift(x1, rho), x1 - CPolynomial::constant(Scalar(1), vars));
  std::uint64_t state = 9;
  const std::vector<Scalar> r{make_scalar(1, 2), Scalar(-3), make_scalar(2, 7)};
  std::vector<Scalar> minus;
  for (const auto& s : r) minus.push_back(-s);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = shyang::testing::random_cpoly(vars, state, 4, 5);
    EXPECT_EQ(rho_shift(p, zero), p);
    EXPECT_EQ(rho_shift(rho_shift(p, r), minus), p);
  }
  EXPECT_THROW(rho_shift(x1, {Scalar(1)}), std::invalid_argument);
}

TEST(Dynkin, ParsingAndValidity) {
  EXPECT_EQ(parse_type_rank("B2"), std::make_pair(LieType::B, 2));
  EXPECT_EQ(parse_type_rank("E6"), std::make_pair(LieType::E, 6));
  EXPECT_THROW(parse_type_rank("Q3"), std::invalid_argument);
  EXPECT_THROW(parse_type_rank("E9"), std::invalid_argument);
  EXPECT_THROW(fundamental_degrees(LieType::G, 3), std::invalid_argument);
  EXPECT_EQ(type_name(LieType::F, 4), "F4");
}

TEST(Dynkin, DegreeExamples) {
  const auto a3 = fundamental_degrees(LieType::A, 3);
  EXPECT_EQ(a3.degrees, (IntVec{2, 3, 4}));
  EXPECT_EQ(a3.kazhdan_degrees, (IntVec{4, 6, 8}));
  EXPECT_EQ(a3.degree_product(), 24);
  const auto b2 = fundamental_degrees(LieType::B, 2);
  EXPECT_EQ(b2.degrees, (IntVec{2, 4}));
  EXPECT_EQ(b2.kazhdan_degrees, (IntVec{4, 8}));
}

TEST(Dynkin, TableIsConsistentWithGroupOrders) {
  const auto& table = builtin_degree_table();
  EXPECT_GE(table.size(), 45u);
  for (const auto& d : table) {
    EXPECT_EQ(d.degree_product(), weyl_group_order(d.type, d.rank)) << d.name();
    ASSERT_EQ(d.degrees.size(), static_cast<std::size_t>(d.rank)) << d.name();
    for (std::size_t i = 0; i < d.degrees.size(); ++i) {
      EXPECT_EQ(d.kazhdan_degrees[i], 2 * d.degrees[i]) << d.name();
    }
  }
}

TEST(Dynkin, DegreeTableParser) {
  const auto table = parse_degree_table("# comment\nA 2 2 3\n\nG 2 2 6\n");
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[1].name(), "G2");
  EXPECT_THROW(parse_degree_table("A 2 2\n"), std::invalid_argument);
  EXPECT_THROW(parse_degree_table("A 2 2 x\n"), std::invalid_argument);
}

TEST(Molien, SmallGroups) {
  EXPECT_EQ(molien_degrees({matrix({{1}})}), (IntVec{1}));
  EXPECT_EQ(molien_degrees({matrix({{1}}), matrix({{-1}})}), (IntVec{2}));
  EXPECT_EQ(molien_degrees(shyang::testing::signed_permutations(2)), (IntVec{2, 4}));
  EXPECT_EQ(molien_degrees(shyang::testing::signed_permutations(3)), (IntVec{2, 4, 6}));
  const auto series = molien_series({matrix({{1}}), matrix({{-1}})}, 5);
  EXPECT_EQ(series, (std::vector<Scalar>{1, 0, 1, 0, 1, 0}));
}

TEST(Molien, RejectsNonGroupsAndNonReflectionGroups) {
  EXPECT_THROW(molien_degrees({matrix({{1}}), matrix({{2}})}), GroupError);
  EXPECT_THROW(molien_degrees({matrix({{1, 0}, {0, 1}}), matrix({{1}})}), GroupError);
  const auto rot = matrix({{0, -1}, {1, 0}});
  const std::vector<ExactMatrix> c4{matrix({{1, 0}, {0, 1}}), rot, matrix({{-1, 0}, {0, -1}}),
                                    matrix({{0, 1}, {-1, 0}})};
  EXPECT_EQ(molien_series(c4, 4), (std::vector<Scalar>{1, 0, 1, 0, 3}));
  EXPECT_THROW(molien_degrees(c4, 16), GroupError);
}

TEST(Molien, WeylGroupSizes) {
  EXPECT_EQ(weyl_group_matrices(LieType::A, 3).size(), 24u);
  EXPECT_EQ(weyl_group_matrices(LieType::B, 3).size(), 48u);
  EXPECT_EQ(weyl_group_matrices(LieType::G, 2).size(), 12u);
  EXPECT_EQ(weyl_group_matrices(LieType::D, 4).size(), 192u);
}

struct TypeRank {
  LieType type;
  int rank;
};

class MolienMatchesTable : public ::testing::TestWithParam<TypeRank> {};

TEST_P(MolienMatchesTable, Degrees) {
  const auto [type, rank] = GetParam();
  const auto group = weyl_group_matrices(type, rank);
  EXPECT_EQ(Integer(static_cast<long>(group.size())), weyl_group_order(type, rank));
  auto expected = fundamental_degrees(type, rank).degrees;
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(molien_degrees(group), expected) << type_name(type, rank);
}

std::vector<TypeRank> molien_cases() {
  std::vector<TypeRank> out;
  for (int r = 1; r <= 6; ++r) out.push_back({LieType::A, r});
  for (int r = 2; r <= 6; ++r) out.push_back({LieType::B, r});
  for (int r = 2; r <= 6; ++r) out.push_back({LieType::C, r});
  for (int r = 3; r <= 6; ++r) out.push_back({LieType::D, r});
  out.push_back({LieType::E, 6});
  out.push_back({LieType::F, 4});
  out.push_back({LieType::G, 2});
  return out;
}

INSTANTIATE_TEST_SUITE_P(Types, MolienMatchesTable, ::testing::ValuesIn(molien_cases()),
                         [](const auto& info) {
                           return type_name(info.param.type, info.param.rank);
                         });

TEST(Lambda, Partitions) {
  const auto a3 = fundamental_degrees(LieType::A, 3);
  const auto p = lambda_partition(a3);
  EXPECT_EQ(kazhdan_at(a3, p.lambda0), (IntVec{4, 8}));
  EXPECT_EQ(kazhdan_at(a3, p.lambda2), (IntVec{6}));
  const auto b2 = lambda_partition(fundamental_degrees(LieType::B, 2));
  EXPECT_EQ(b2.lambda0.size(), 2u);
  EXPECT_TRUE(b2.lambda2.empty());
  for (const auto& d : builtin_degree_table()) {
    const auto part = lambda_partition(d);
    EXPECT_EQ(part.lambda0.size() + part.lambda2.size(), static_cast<std::size_t>(d.rank));
  }
}

TEST(Folding, Pairs) {
  EXPECT_EQ(folding_pair(LieType::B, 3).unfolded.name(), "A5");
  EXPECT_EQ(folding_pair(LieType::C, 3).unfolded.name(), "D4");
  EXPECT_EQ(folding_pair(LieType::F, 4).unfolded.name(), "E6");
  EXPECT_EQ(folding_pair(LieType::G, 2).unfolded.name(), "D4");
  EXPECT_EQ(folding_pair(LieType::B, 3).gamma0_order, 2);
  EXPECT_EQ(folding_pair(LieType::C, 4).gamma0_order, 2);
  EXPECT_EQ(folding_pair(LieType::F, 4).gamma0_order, 2);
  EXPECT_EQ(folding_pair(LieType::G, 2).gamma0_order, 6);
  EXPECT_THROW(folding_pair(LieType::A, 3), std::invalid_argument);
  EXPECT_THROW(folding_pair(LieType::F, 5), std::invalid_argument);
}

TEST(Folding, Examples) {
  const auto b2 = folding_degree_check(folding_pair(LieType::B, 2));
  EXPECT_TRUE(b2.pass());
  EXPECT_EQ(b2.unfolded_lambda0, (IntVec{4, 8}));
  EXPECT_EQ(b2.unfolded_lambda2, (IntVec{6}));
  EXPECT_EQ(b2.folded_kazhdan, (IntVec{4, 8}));
  const auto c3 = folding_degree_check(folding_pair(LieType::C, 3));
  EXPECT_FALSE(c3.pass());
  EXPECT_EQ(c3.unfolded_lambda0, (IntVec{4, 8, 8, 12}));
  EXPECT_FALSE(c3.ranks_equal);
  const auto f4 = folding_degree_check(folding_pair(LieType::F, 4));
  EXPECT_TRUE(f4.pass());
  EXPECT_EQ(f4.unfolded_lambda0, (IntVec{4, 12, 16, 24}));
  EXPECT_FALSE(folding_degree_check(folding_pair(LieType::G, 2)).pass());
}

TEST(Folding, PassSetIsTheHypothesis) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_TRUE(folding_degree_check(folding_pair(LieType::B, n)).pass()) << "B" << n;
  }
  for (int n = 2; n <= 11; ++n) {
    EXPECT_EQ(folding_degree_check(folding_pair(LieType::C, n)).pass(), n % 2 == 0) << "C" << n;
  }
}

TEST(Table1, ListedRows) {
  for (LieType t :
       {LieType::A, LieType::B, LieType::C, LieType::D, LieType::E, LieType::F, LieType::G}) {
    EXPECT_FALSE(universality_table(t, OrbitClass::Regular));
    EXPECT_EQ(table1_row(t, OrbitClass::Regular), "Regular (any type)");
    EXPECT_TRUE(universality_table(t, OrbitClass::Other));
    const bool bcfg = t == LieType::B || t == LieType::C || t == LieType::F || t == LieType::G;
    EXPECT_EQ(universality_table(t, OrbitClass::Subregular), !bcfg) << type_letter(t);
    if (t != LieType::C) {
      EXPECT_THROW(universality_table(t, OrbitClass::TwoJordanBlocksC), std::invalid_argument);
    }
    if (t != LieType::G) {
      EXPECT_THROW(universality_table(t, OrbitClass::Dim8G), std::invalid_argument);
    }
  }
  EXPECT_FALSE(universality_table(LieType::C, OrbitClass::TwoJordanBlocksC));
  EXPECT_FALSE(universality_table(LieType::G, OrbitClass::Dim8G));
  EXPECT_EQ(table1_row(LieType::A, OrbitClass::Subregular), "not listed");
  EXPECT_EQ(parse_orbit_class("Dim8"), OrbitClass::Dim8G);
  EXPECT_THROW(parse_orbit_class("Minimal"), std::invalid_argument);
}

}  // namespace
}  // namespace shyang::invariants
