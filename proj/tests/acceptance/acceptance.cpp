// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shyang/exprio/parser.hpp"
#include "shyang/exprio/printer.hpp"
#include "shyang/invariants/dynkin.hpp"
#include "shyang/invariants/molien.hpp"
#include "shyang/invariants/symmetric.hpp"
#include "shyang/invariants/table1.hpp"
#include "shyang/kleinian/kleinian.hpp"
#include "shyang/yangian/algebra.hpp"
#include "shyang/yangian/central.hpp"
#include "shyang/yangian/checks.hpp"

namespace {

using namespace shyang;
using yangian::Mode;
using yangian::YangianAlgebra;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool criterion_1(Outcome& o) {
  for (int n : {2, 3}) {
    const YangianAlgebra alg(n, Mode::Full);
    const auto series = yangian::central_series_expand(alg, 6);
    const auto oracle = testing::central_series_oracle(n, 6);
    for (int r = 0; r <= 6; ++r) {
      const auto closed = yangian::central_element_closed_form(alg, r).as_polynomial;
      const auto idx = static_cast<std::size_t>(r);
      const std::string tag = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      o.require(closed == series[idx].as_polynomial, "closed form != series at " + tag);
      o.require(closed == yangian::d_to_nc(oracle[idx], alg.alphabet()),
                "closed form != independent expansion at " + tag);
    }
  }
  const YangianAlgebra alg(2, Mode::Full);
  const auto printed =
      yangian::central_element_closed_form(alg, 1, yangian::CentralFormula::Printed).as_polynomial;
  const auto series = yangian::central_series_expand(alg, 1)[1].as_polynomial;
  o.require(!(printed == series), "printed indexing unexpectedly agrees at n=2 r=1");
  o.require(series.coefficient(Monomial{}) == -3 && printed.coefficient(Monomial{}) == 1,
            "constant terms are not -3 (series) and 1 (printed)");
  o.detail =
      o.ok ? "Z^1 = " + exprio::print(series) + "; printed form gives " + exprio::print(printed)
           : o.detail;
  return o.ok;
}

bool criterion_2(Outcome& o) {
  const YangianAlgebra alg(2, Mode::Full);
  const std::vector<Generator> probes{D1(1), D1(2), D2(1), D2(2), E(3), E(4), F(1), F(2)};
  int checked = 0;
  for (int r = 1; r <= 4; ++r) {
    const auto report = yangian::verify_centrality(alg, r, probes);
    o.require(!report.budget_error, "budget exhausted at r=" + std::to_string(r));
    for (const auto& e : report.entries) {
      ++checked;
      o.require(e.remainder.is_zero(), "[Z^" + std::to_string(r) + ", " + to_string(e.probe) +
                                           "] = " + exprio::print(e.remainder));
    }
  }
  o.require(checked == 32, "expected 32 commutators, checked " + std::to_string(checked));
  if (o.ok) o.detail = "32 commutators reduce to 0";
  return o.ok;
}

bool criterion_3(Outcome& o) {
  const YangianAlgebra alg(2, Mode::Full);
  const auto report = yangian::confluence_check(alg, 8, 200, 42);
  o.require(report.samples == 200, "ran " + std::to_string(report.samples) + " samples");
  o.require(report.success(), std::to_string(report.failures.size()) + " failures");
  if (o.ok) o.detail = std::to_string(report.checks) + " checks, 0 failures, seed 42";
  return o.ok;
}

bool criterion_4(Outcome& o) {
  const YangianAlgebra alg(2, Mode::TruncatedSO);
  for (int r : {1, 3}) {
    const auto z = yangian::central_element_closed_form(alg, r).as_polynomial;
    o.require(alg.normal_form(z).is_zero(), "Z^" + std::to_string(r) + " does not reduce to 0");
  }
  const auto dims = yangian::graded_dimension(alg, 10);
  o.require(dims.fixed_points_verified, "PBW words were not all normal forms");
  o.require(dims.generators.size() == 4, "expected 4 generators");
  const auto expected = testing::free_commutative_counts({1, 2, 3, 1}, 10);
  o.require(dims.counts == expected, "graded dimensions differ from the free counts");
  if (o.ok) o.detail = "dim in degree 10 = " + std::to_string(dims.counts.back());
  return o.ok;
}

bool criterion_5(Outcome& o) {
  for (int n : {2, 3, 4}) {
    const invariants::SymmetricContext ctx(n);
    for (int j = 2; j <= 2 * n; ++j) {
      const auto e = invariants::elementary_symmetric(ctx, j);
      o.require(e == testing::elementary_by_subsets(n, j).with_variables(ctx.variables()),
                "e_" + std::to_string(j) + " differs from the subset sum");
      o.require(invariants::gamma_action_typeA(ctx, e) == (j % 2 == 0 ? e : -e),
                "gamma(e_" + std::to_string(j) + ") has the wrong sign at n=" + std::to_string(n));
    }
    const auto kernel = invariants::coinvariant_kernel_typeAB(ctx);
    o.require(kernel.size() == static_cast<std::size_t>(n - 1), "kernel size");
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      o.require(kernel[i] == invariants::elementary_symmetric(ctx, 3 + 2 * static_cast<int>(i)),
                "kernel generator " + std::to_string(i) + " at n=" + std::to_string(n));
    }
  }
  if (o.ok) o.detail = "n = 2, 3, 4";
  return o.ok;
}

bool criterion_6(Outcome& o) {
  using invariants::LieType;
  struct Case {
    LieType type;
    int rank;
    bool pass;
  };
  const std::vector<Case> cases{
      {LieType::B, 2, true}, {LieType::B, 3, true}, {LieType::B, 4, true},  {LieType::C, 2, true},
      {LieType::C, 4, true}, {LieType::F, 4, true}, {LieType::C, 3, false}, {LieType::G, 2, false}};
  for (const auto& c : cases) {
    const auto report = invariants::folding_degree_check(invariants::folding_pair(c.type, c.rank));
    o.require(report.pass() == c.pass, invariants::type_name(c.type, c.rank) + " verdict");
  }
  double f4_seconds = 0;
  for (const auto& [type, rank] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 3}, {LieType::B, 2}, {LieType::B, 3}, {LieType::D, 4}, {LieType::F, 4}}) {
    const auto start = std::chrono::steady_clock::now();
    const auto degrees = invariants::molien_degrees(invariants::weyl_group_matrices(type, rank));
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    if (type == LieType::F) f4_seconds = took.count();
    auto table = invariants::fundamental_degrees(type, rank).degrees;
    std::sort(table.begin(), table.end());
    o.require(degrees == table, "Molien degrees differ for " + invariants::type_name(type, rank));
  }
  o.require(f4_seconds < 10, "Molien for F4 took " + std::to_string(f4_seconds) + " s");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "8 folding verdicts, 5 Molien checks, F4 in %.2f s", f4_seconds);
    o.detail = buf;
  }
  return o.ok;
}

bool criterion_7(Outcome& o) {
  using invariants::LieType;
  using invariants::OrbitClass;
  struct Row {
    LieType type;
    OrbitClass orbit;
    const char* cited;
  };
  // The listed pairs: Regular in any type, Subregular in B, C, F, G, two
  // Jordan blocks in C, dimension 8 in G.
  const std::vector<Row> listed{
      {LieType::A, OrbitClass::Regular, "Regular (any type)"},
      {LieType::B, OrbitClass::Subregular, "Subregular (types B, C, F, G)"},
      {LieType::C, OrbitClass::Subregular, "Subregular (types B, C, F, G)"},
      {LieType::F, OrbitClass::Subregular, "Subregular (types B, C, F, G)"},
      {LieType::G, OrbitClass::Subregular, "Subregular (types B, C, F, G)"},
      {LieType::C, OrbitClass::TwoJordanBlocksC, "Two Jordan blocks (type C)"},
      {LieType::G, OrbitClass::Dim8G, "dimension 8 (type G)"}};
  for (const auto& row : listed) {
    const std::string tag = std::string(1, invariants::type_letter(row.type)) + " " +
                            invariants::orbit_class_name(row.orbit);
    o.require(!invariants::universality_table(row.type, row.orbit), tag + " should be listed");
    o.require(invariants::table1_row(row.type, row.orbit) == row.cited,
              tag + " cites the wrong row");
  }
  for (LieType t :
       {LieType::A, LieType::B, LieType::C, LieType::D, LieType::E, LieType::F, LieType::G}) {
    o.require(!invariants::universality_table(t, OrbitClass::Regular),
              "Regular is listed in every type");
    o.require(invariants::universality_table(t, OrbitClass::Other),
              "Other orbits are never listed");
  }
  for (LieType t : {LieType::A, LieType::D, LieType::E}) {
    o.require(invariants::universality_table(t, OrbitClass::Subregular),
              "simply-laced subregular slices are universal");
  }
  if (o.ok) o.detail = "7 listed pairs plus the universal complement";
  return o.ok;
}

bool criterion_8(Outcome& o) {
  for (int m = 2; m <= 8; ++m) {
    const std::string tag = " at m=" + std::to_string(m);
    const auto ring = kleinian::build_kleinian(m);
    o.require(ring.u * ring.v == ring.w.pow(static_cast<unsigned>(m)), "uv != w^m" + tag);
    o.require(kleinian::to_plane(ring, ring.relation).is_zero(), "relation" + tag);
    const auto table = kleinian::bracket_table(ring);
    const auto expected = kleinian::expected_bracket_table(m);
    o.require(table.wu == expected.wu && table.wv == expected.wv && table.uv == expected.uv,
              "bracket table" + tag);
    o.require(kleinian::induced_bracket(ring, ring.u, ring.v) ==
                  Scalar(m * m) * ring.w.pow(static_cast<unsigned>(m - 1)),
              "{u,v} re-expansion" + tag);
    o.require(kleinian::jacobi_check(ring, 8).success(), "Jacobi" + tag);
    o.require(kleinian::bracket_degree_check(ring), "bracket degree" + tag);
  }
  if (o.ok) o.detail = "m = 2..8, Jacobi to degree 8";
  return o.ok;
}

bool criterion_9(Outcome& o) {
  const YangianAlgebra alg(2, Mode::Full);
  std::uint64_t state = 42;
  int mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const auto p = yangian::random_element(alg, state, 8, 4);
    try {
      if (!(exprio::elaborate_nc(exprio::parse(exprio::print(p)), alg) == p)) ++mismatches;
    } catch (const exprio::ParseError&) {
      ++mismatches;
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " of 500 round trips failed");
  int crashes = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string bytes(static_cast<std::size_t>(yangian::seeded_draw(state, 64)), '\0');
    for (auto& b : bytes) b = static_cast<char>(yangian::seeded_draw(state, 256));
    try {
      exprio::elaborate_nc(exprio::parse(bytes), alg);
    } catch (const exprio::ParseError&) {
    } catch (...) {
      ++crashes;
    }
  }
  o.require(crashes == 0, std::to_string(crashes) + " of 10000 fuzz inputs crashed");
  if (o.ok) o.detail = "500 round trips, 10000 fuzz inputs";
  return o.ok;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no limit
  std::function<bool(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "central element closed form equals the series", 1, criterion_1},
      {2, "centrality against the eight probes", 60, criterion_2},
      {3, "confluence of seeded random triples", 120, criterion_3},
      {4, "truncated presentation in type B", 30, criterion_4},
      {5, "gamma action and coinvariant kernel", 0, criterion_5},
      {6, "folding degrees and Molien oracle", 0, criterion_6},
      {7, "universality table", 0, criterion_7},
      {8, "Kleinian singularity brackets", 10, criterion_8},
      {9, "printer round trip and parser fuzzing", 30, criterion_9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    if (o.ok && c.limit_seconds > 0 && took.count() >= c.limit_seconds) {
      o.ok = false;
      o.detail = "exceeded the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    if (!o.ok) ++failed;
    std::printf("%s  %d  %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, took.count(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
