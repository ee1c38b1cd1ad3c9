#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iterator>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "shyang/exprio/parser.hpp"
#include "shyang/exprio/printer.hpp"
#include "shyang/exprio/report.hpp"
#include "shyang/invariants/dynkin.hpp"
#include "shyang/invariants/symmetric.hpp"
#include "shyang/invariants/table1.hpp"
#include "shyang/kleinian/kleinian.hpp"
#include "shyang/yangian/algebra.hpp"
#include "shyang/yangian/central.hpp"
#include "shyang/yangian/checks.hpp"
#include "shyang/yangian/rule_table.hpp"

namespace shyang::cli {

namespace {

using exprio::Report;
using exprio::Status;
using yangian::seeded_draw;
using yangian::YangianAlgebra;

struct Config {
  int n = 2;
  std::string mode = "full";
  int degree_bound = 12;
  std::uint64_t seed = 42;
  std::string output = "text";
  std::size_t step_budget = yangian::kDefaultStepBudget;
  std::string rules;
  bool timing = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::unique_ptr<YangianAlgebra> make_algebra(const Config& cfg) {
  const yangian::Mode mode = yangian::parse_mode(cfg.mode);
  if (cfg.rules.empty()) {
    return std::make_unique<YangianAlgebra>(cfg.n, mode, yangian::RelationTable::builtin(),
                                            cfg.step_budget);
  }
  const auto table = yangian::RelationTable::from_file(cfg.rules);
  auto alg = std::make_unique<YangianAlgebra>(cfg.n, mode, table, cfg.step_budget);
  alg->validate_rules(2 * cfg.n + 6);
  return alg;
}

void add_common(Report& r, const Config& cfg) {
  r.add_param("n", static_cast<std::int64_t>(cfg.n));
  r.add_param("mode", cfg.mode);
}

std::string join(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// Splits on commas outside brackets and parentheses.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::string escape(const std::string& s) {
  std::string out;
  for (unsigned char c : s) {
    if (c >= 0x20 && c < 0x7f && c != '\\') {
      out += static_cast<char>(c);
    } else {
      static const char* hex = "0123456789abcdef";
      out += "\\x";
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

// Commands. Each fills the report; exceptions are mapped to exit codes by run().

void cmd_central(const Config& cfg, int r_max, const std::string& formula_name, Report& rep) {
  yangian::CentralFormula formula;
  if (formula_name == "corrected") {
    formula = yangian::CentralFormula::Corrected;
  } else if (formula_name == "printed") {
    formula = yangian::CentralFormula::Printed;
  } else {
    throw UsageError("--formula must be corrected or printed");
  }
  if (r_max < 0) throw UsageError("--r-max must be >= 0");
  const auto alg = make_algebra(cfg);
  add_common(rep, cfg);
  rep.add_param("r_max", static_cast<std::int64_t>(r_max));
  rep.add_param("formula", formula_name);
  const auto oracle = yangian::central_series_expand(*alg, r_max);
  for (int r = 0; r <= r_max; ++r) {
    std::size_t steps = 0;
    const auto closed = alg->normal_form(
        yangian::central_element_closed_form(*alg, r, formula).as_polynomial, &steps);
    rep.steps += steps;
    const auto expected =
        alg->normal_form(oracle[static_cast<std::size_t>(r)].as_polynomial, &steps);
    rep.steps += steps;
    rep.add_witness("Z^" + std::to_string(r), exprio::print(closed), closed == expected,
                    exprio::print(expected));
  }
}

void cmd_verify(const Config& cfg, int r, const std::string& probes_text, Report& rep) {
  const auto alg = make_algebra(cfg);
  add_common(rep, cfg);
  rep.add_param("r", static_cast<std::int64_t>(r));
  std::vector<std::string> probes;
  if (probes_text.empty()) {
    for (const auto& g : {D1(1), D1(2), D2(1), D2(2), E(2 * cfg.n - 1), E(2 * cfg.n), F(1), F(2)}) {
      probes.push_back(to_string(g));
    }
  } else {
    probes = split_top_level(probes_text);
  }
  rep.add_param("probes", static_cast<std::int64_t>(probes.size()));
  const NCPolynomial z = yangian::central_element_closed_form(*alg, r).as_polynomial;
  for (const auto& text : probes) {
    const NCPolynomial probe = exprio::elaborate_nc(exprio::parse(text), *alg);
    std::size_t steps = 0;
    const NCPolynomial rem = alg->reduced_commutator(z, probe, &steps);
    rep.steps += steps;
    rep.add_witness("[Z^" + std::to_string(r) + ", " + text + "]", exprio::print(rem),
                    rem.is_zero(), "0");
  }
}

void cmd_confluence(const Config& cfg, int samples, int overlap_bound, Report& rep) {
  const auto alg = make_algebra(cfg);
  add_common(rep, cfg);
  rep.add_param("degree_bound", static_cast<std::int64_t>(cfg.degree_bound));
  rep.add_param("samples", static_cast<std::int64_t>(samples));
  rep.add_param("seed", static_cast<std::int64_t>(cfg.seed));
  rep.add_param("overlap_bound", static_cast<std::int64_t>(overlap_bound));

  const auto conf = yangian::confluence_check(*alg, cfg.degree_bound, samples, cfg.seed);
  rep.steps += conf.steps;
  rep.add_witness("random triples",
                  std::to_string(conf.failures.size()) + " failures in " +
                      std::to_string(conf.checks + samples) + " checks",
                  conf.success(), "0 failures");
  for (const auto& f : conf.failures) {
    rep.add_witness(f.kind + " p = " + exprio::print(f.p) + ", q = " + exprio::print(f.q) +
                        ", r = " + exprio::print(f.r),
                    exprio::print(f.left), false, exprio::print(f.right));
  }
  if (overlap_bound > 0) {
    const auto ov = yangian::overlap_check(*alg, overlap_bound);
    rep.steps += ov.steps;
    rep.add_witness("overlaps",
                    std::to_string(ov.failures.size()) + " failures in " +
                        std::to_string(ov.checked) + " overlaps",
                    ov.success(), "0 failures");
    for (const auto& f : ov.failures) {
      rep.add_witness("(" + to_string(f.a) + " * " + to_string(f.b) + ") * " + to_string(f.c),
                      exprio::print(f.left), false, exprio::print(f.right));
    }
  }
  const auto trunc = yangian::truncation_consistency(*alg, 2 * cfg.n + 3);
  for (const auto& [r, residue] : trunc.residues) {
    rep.add_witness("Z^" + std::to_string(r), exprio::print(residue), residue.is_zero(), "0");
  }
}

void cmd_dims(const Config& cfg, Report& rep) {
  const auto alg = make_algebra(cfg);
  add_common(rep, cfg);
  rep.add_param("degree_bound", static_cast<std::int64_t>(cfg.degree_bound));
  std::string gens;
  const auto dims = yangian::graded_dimension(*alg, cfg.degree_bound);
  for (const auto& g : dims.generators) gens += (gens.empty() ? "" : ", ") + to_string(g);
  rep.add_witness("PBW generators", gens, true);
  for (std::size_t d = 0; d < dims.counts.size(); ++d) {
    rep.add_witness("dim[" + std::to_string(d) + "]", std::to_string(dims.counts[d]), true);
  }
  if (dims.fixed_points_verified) {
    rep.add_witness("PBW words are normal forms", "verified", true);
  }
}

void cmd_fold(const std::string& type_rank, Report& rep) {
  const auto [type, rank] = invariants::parse_type_rank(type_rank);
  const auto report = invariants::folding_degree_check(invariants::folding_pair(type, rank));
  const auto& p = report.pair;
  rep.add_param("type", type_rank);
  rep.add_witness("unfolded", p.unfolded.name(), true);
  rep.add_witness("gamma0_order", std::to_string(p.gamma0_order), true);
  rep.add_witness("folded Kazhdan degrees", join(report.folded_kazhdan), true);
  std::vector<int> unfolded = p.unfolded.kazhdan_degrees;
  std::sort(unfolded.begin(), unfolded.end());
  rep.add_witness("unfolded Kazhdan degrees", join(unfolded), true);
  rep.add_witness("Lambda0", join(report.unfolded_lambda0), report.multisets_equal,
                  join(report.folded_kazhdan));
  rep.add_witness("Lambda2", join(report.unfolded_lambda2), true);
  rep.add_witness("|Lambda0| = rank " + p.folded.name(),
                  std::to_string(report.partition.lambda0.size()), report.ranks_equal,
                  std::to_string(p.folded.rank));
  rep.add_witness("verdict", report.pass() ? "pass" : "fail", report.pass(), "pass");
}

void cmd_table1(const std::string& type_text, const std::string& class_text, Report& rep) {
  const auto type = invariants::parse_type(type_text);
  const auto orbit = invariants::parse_orbit_class(class_text);
  rep.add_param("type", type_text);
  rep.add_param("orbit_class", invariants::orbit_class_name(orbit));
  const bool universal = invariants::universality_table(type, orbit);
  rep.add_witness(type_text + " " + invariants::orbit_class_name(orbit),
                  universal ? "universal" : "not universal", true);
  rep.add_witness("table row", invariants::table1_row(type, orbit), true);
}

void cmd_coinv(const Config& cfg, Report& rep) {
  rep.add_param("n", static_cast<std::int64_t>(cfg.n));
  const invariants::SymmetricContext ctx(cfg.n);
  for (int j = 2; j <= 2 * cfg.n; ++j) {
    const CPolynomial e = invariants::elementary_symmetric(ctx, j);
    const CPolynomial image = invariants::gamma_action_typeA(ctx, e);
    const CPolynomial expected = j % 2 == 0 ? e : -e;
    rep.add_witness("gamma(e_" + std::to_string(j) + ")", exprio::print(image), image == expected,
                    (j % 2 == 0 ? "" : "-") + std::string("e_") + std::to_string(j));
  }
  std::string names;
  bool ok = true;
  try {
    const auto kernel = invariants::coinvariant_kernel_typeAB(ctx);
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      names += (i == 0 ? "" : ", ") + std::string("e_") + std::to_string(2 * i + 3);
    }
  } catch (const std::logic_error& e) {
    names = e.what();
    ok = false;
  }
  std::string expected;
  for (int j = 3; j < 2 * cfg.n; j += 2) {
    expected += (expected.empty() ? "" : ", ") + std::string("e_") + std::to_string(j);
  }
  rep.add_witness("coinvariant kernel", "(" + names + ")", ok, "(" + expected + ")");
}

void cmd_kleinian(int m, int jacobi_bound, Report& rep) {
  rep.add_param("m", static_cast<std::int64_t>(m));
  rep.add_param("jacobi_bound", static_cast<std::int64_t>(jacobi_bound));
  const auto ring = kleinian::build_kleinian(m);
  rep.add_witness("u v - w^" + std::to_string(m), "0", true);
  const auto table = kleinian::bracket_table(ring);
  const auto expected = kleinian::expected_bracket_table(m);
  rep.add_witness("{w,u}", exprio::print(table.wu), table.wu == expected.wu,
                  exprio::print(expected.wu));
  rep.add_witness("{w,v}", exprio::print(table.wv), table.wv == expected.wv,
                  exprio::print(expected.wv));
  rep.add_witness("{u,v}", exprio::print(table.uv), table.uv == expected.uv,
                  exprio::print(expected.uv));
  const auto jac = kleinian::jacobi_check(ring, jacobi_bound);
  rep.add_witness(
      "Jacobi",
      std::to_string(jac.failures) + " failures in " + std::to_string(jac.triples) + " triples",
      jac.success(), "0 failures");
  rep.add_witness("Poisson ideal", kleinian::relation_ideal_is_poisson(ring) ? "yes" : "no",
                  kleinian::relation_ideal_is_poisson(ring), "yes");
  const bool deg = kleinian::bracket_degree_check(ring);
  rep.add_witness("bracket degree -2", deg ? "yes" : "no", deg, "yes");
}

void cmd_nf(const Config& cfg, const std::string& text, Report& rep) {
  const auto alg = make_algebra(cfg);
  add_common(rep, cfg);
  const NCPolynomial value = exprio::elaborate_nc(exprio::parse(text), *alg);
  std::size_t steps = 0;
  const NCPolynomial nf = alg->normal_form(value, &steps);
  rep.steps += steps;
  rep.add_witness(text, exprio::print(nf), true);
}

std::string fuzz_input(std::uint64_t& state) {
  static const char* const pieces[] = {
      "D1^1", "D2^2", "E^3", "F^1", "Z^1", "e_2", "x_1", "u", "v",  "w",          "D1^",
      "E^",   "e_",   "+",   "-",   "*",   "*",   "^2",  "^", "(",  ")",          "[",
      "]",    ",",    "/",   "0",   "3",   "1/2", "-4",  " ", "\n", "99999999999"};
  const auto len = seeded_draw(state, 24);
  // Mostly grammar fragments, a quarter raw bytes.
  const bool bytes = seeded_draw(state, 4) == 0;
  std::string s;
  for (std::uint64_t i = 0; i < len; ++i) {
    if (bytes) {
      s += static_cast<char>(seeded_draw(state, 256));
    } else {
      s += pieces[seeded_draw(state, std::size(pieces))];
    }
  }
  return s;
}

void cmd_parse_check(const Config& cfg, int samples, int fuzz, Report& rep) {
  const auto alg = make_algebra(cfg);
  add_common(rep, cfg);
  rep.add_param("samples", static_cast<std::int64_t>(samples));
  rep.add_param("fuzz", static_cast<std::int64_t>(fuzz));
  rep.add_param("seed", static_cast<std::int64_t>(cfg.seed));
  std::uint64_t state = cfg.seed;
  int round_trip_failures = 0;
  for (int i = 0; i < samples; ++i) {
    const NCPolynomial p = yangian::random_element(*alg, state, 8, 4);
    const std::string text = exprio::print(p);
    const NCPolynomial back = exprio::elaborate_nc(exprio::parse(text), *alg);
    if (!(back == p) || exprio::print(back) != text) {
      ++round_trip_failures;
      rep.add_witness(text, exprio::print(back), false, text);
    }
  }
  rep.add_witness("print/parse round trips",
                  std::to_string(round_trip_failures) + " failures in " + std::to_string(samples),
                  round_trip_failures == 0, "0 failures");

  int accepted = 0;
  int crashes = 0;
  for (int i = 0; i < fuzz; ++i) {
    const std::string input = fuzz_input(state);
    try {
      const auto e = exprio::parse(input);
      ++accepted;
      if (!exprio::parse(exprio::print(e)).same_as(e)) {
        ++crashes;
        rep.add_witness(escape(input), "reprint differs: " + exprio::print(e), false);
      }
    } catch (const exprio::ParseError&) {
    } catch (const std::exception& e) {
      ++crashes;
      rep.add_witness(escape(input), e.what(), false, "ParseError");
    }
  }
  rep.add_witness("fuzz inputs",
                  std::to_string(crashes) + " crashes in " + std::to_string(fuzz) + " (" +
                      std::to_string(accepted) + " accepted)",
                  crashes == 0, "0 crashes");
}

void emit(const Report& rep, const Config& cfg, std::ostream& out) {
  if (cfg.output == "json") {
    out << rep.to_json() << "\n";
  } else {
    out << rep.to_text();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shifted Yangian, invariant theory and Kleinian singularity checks", "shyang"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--n", cfg.n, "Shift parameter n (shift 2n-2)")->check(CLI::Range(2, 64));
  app.add_option("--mode", cfg.mode, "Algebra: full, gl or so")
      ->check(CLI::IsMember({"full", "gl", "so"}));
  app.add_option("--degree-bound", cfg.degree_bound, "Degree bound for sampled checks")
      ->check(CLI::Range(0, 64));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--step-budget", cfg.step_budget, "Rewrite budget per normal form");
  app.add_option("--rules", cfg.rules, "Relation table file")->check(CLI::ExistingFile);
  app.add_flag("--timing", cfg.timing, "Record wall-clock milliseconds in reports");

  Report rep;
  std::function<void()> action;

  auto* central = app.add_subcommand("central", "Central elements: closed form against series");
  int r_max = 6;
  std::string formula = "corrected";
  central->add_option("--r-max", r_max, "Largest r");
  central->add_option("--formula", formula, "corrected or printed");
  central->callback([&] { action = [&] { cmd_central(cfg, r_max, formula, rep); }; });

  auto* verify = app.add_subcommand("verify", "Centrality of Z^r against probes");
  int r = 1;
  std::string probes;
  verify->add_option("--r", r, "Which Z^r")->check(CLI::Range(0, 64));
  verify->add_option("--probes", probes, "Comma-separated probe expressions");
  verify->callback([&] { action = [&] { cmd_verify(cfg, r, probes, rep); }; });

  auto* confluence = app.add_subcommand("confluence", "Associativity of reduced products");
  int samples = 200;
  int overlap_bound = 0;
  confluence->add_option("--samples", samples, "Random triples")->check(CLI::Range(0, 1000000));
  confluence->add_option("--overlap-bound", overlap_bound,
                         "Also resolve all generator overlaps up to this total superscript");
  confluence->callback([&] { action = [&] { cmd_confluence(cfg, samples, overlap_bound, rep); }; });

  auto* dims = app.add_subcommand("dims", "Graded dimensions of the PBW basis");
  dims->callback([&] { action = [&] { cmd_dims(cfg, rep); }; });

  auto* fold = app.add_subcommand("fold", "Folding degree check for a non-simply-laced type");
  std::string type_rank;
  fold->add_option("type", type_rank, "Folded type, e.g. B2")->required();
  fold->callback([&] { action = [&] { cmd_fold(type_rank, rep); }; });

  auto* table1 = app.add_subcommand("table1", "Universality of the slice deformation");
  std::string type_letter;
  std::string orbit_class;
  table1->add_option("type", type_letter, "Lie type letter")->required();
  table1->add_option("class", orbit_class, "Regular, Subregular, TwoJordanBlocks, Dim8 or Other")
      ->required();
  table1->callback([&] { action = [&] { cmd_table1(type_letter, orbit_class, rep); }; });

  auto* coinv = app.add_subcommand("coinv", "Gamma action and coinvariant kernel in type A");
  coinv->callback([&] { action = [&] { cmd_coinv(cfg, rep); }; });

  auto* kleinian = app.add_subcommand("kleinian", "Type A Kleinian singularity brackets");
  int m = 2;
  int jacobi_bound = 8;
  kleinian->add_option("--m", m, "Cyclic group order")->check(CLI::Range(2, 64));
  kleinian->add_option("--jacobi-bound", jacobi_bound, "Degree bound for Jacobi triples")
      ->check(CLI::Range(0, 32));
  kleinian->callback([&] { action = [&] { cmd_kleinian(m, jacobi_bound, rep); }; });

  auto* nf = app.add_subcommand("nf", "PBW normal form of an expression");
  std::string expr_text;
  nf->add_option("expr", expr_text, "Expression")->required();
  nf->callback([&] { action = [&] { cmd_nf(cfg, expr_text, rep); }; });

  auto* parse_check = app.add_subcommand("parse-check", "Printer round trip and parser fuzzing");
  int rt_samples = 500;
  int fuzz = 10000;
  parse_check->add_option("--samples", rt_samples, "Round-trip samples")
      ->check(CLI::Range(0, 1000000));
  parse_check->add_option("--fuzz", fuzz, "Random inputs")->check(CLI::Range(0, 10000000));
  parse_check->callback([&] { action = [&] { cmd_parse_check(cfg, rt_samples, fuzz, rep); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  rep.operation = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    action();
    rep.settle();
    code = rep.status == Status::Pass ? kPass : kMathFailure;
  } catch (const yangian::BudgetExceeded& e) {
    rep.status = Status::Error;
    rep.add_witness("budget", e.what(), false);
    code = kBudget;
  } catch (const exprio::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const yangian::RuleTableError& e) {
    err << "rule table error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (cfg.timing) {
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    rep.add_param("timing", true);
  }
  emit(rep, cfg, out);
  return code;
}

}  // namespace shyang::cli
