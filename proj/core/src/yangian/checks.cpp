#include "shyang/yangian/checks.hpp"

#include <functional>

#include "shyang/yangian/central.hpp"

namespace shyang::yangian {

bool CentralityReport::success() const {
  if (budget_error) {
    return false;
  }
  for (const auto& e : entries) {
    if (!e.remainder.is_zero()) {
      return false;
    }
  }
  return true;
}

CentralityReport verify_centrality(const YangianAlgebra& alg, const NCPolynomial& element,
                                   const std::vector<Generator>& probes, int r) {
  CentralityReport report;
  report.r = r;
  report.element = element;
  for (const auto& g : probes) {
    const NCPolynomial probe = alg.gen(g);
    try {
      std::size_t steps = 0;
      NCPolynomial rem = alg.reduced_commutator(element, probe, &steps);
      report.steps += steps;
      report.entries.push_back({g, std::move(rem)});
    } catch (const BudgetExceeded& e) {
      report.budget_error = std::string("[Z, ") + to_string(g) + "]: " + e.what();
      break;
    }
  }
  return report;
}

CentralityReport verify_centrality(const YangianAlgebra& alg, int r,
                                   const std::vector<Generator>& probes) {
  const auto z = central_element_closed_form(alg, r);
  return verify_centrality(alg, z.as_polynomial, probes, r);
}

std::uint64_t seeded_draw(std::uint64_t& state, std::uint64_t bound) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z % bound;
}

NCPolynomial random_element(const YangianAlgebra& alg, std::uint64_t& state, int max_degree,
                            int max_terms) {
  // Full alphabet, also in truncated modes, so truncation substitutions get
  // exercised.
  std::vector<Generator> gens;
  const int top_sup = std::max(max_degree, 1);
  for (int r = 1; r <= top_sup; ++r) {
    for (Family f : {Family::F, Family::D1, Family::D2, Family::E}) {
      const Generator g{f, r};
      if (alg.admissible(g) && r <= max_degree) {
        gens.push_back(g);
      }
    }
  }
  NCPolynomial out(alg.alphabet());
  const int terms = 1 + static_cast<int>(seeded_draw(state, static_cast<std::uint64_t>(max_terms)));
  for (int k = 0; k < terms; ++k) {
    const int budget =
        static_cast<int>(seeded_draw(state, static_cast<std::uint64_t>(max_degree + 1)));
    std::vector<Generator> word;
    int used = 0;
    while (true) {
      std::vector<Generator> fitting;
      for (const auto& g : gens) {
        if (used + g.superscript <= budget) fitting.push_back(g);
      }
      if (fitting.empty()) break;
      const auto& g = fitting[seeded_draw(state, fitting.size())];
      word.push_back(g);
      used += g.superscript;
    }
    const long num = static_cast<long>(seeded_draw(state, 7)) - 3;
    const long den = 1 + static_cast<long>(seeded_draw(state, 3));
    out.add_term(Monomial(std::move(word)), make_scalar(num == 0 ? 1 : num, den));
  }
  return out;
}

ConfluenceReport confluence_check(const YangianAlgebra& alg, int degree_bound, int samples,
                                  std::uint64_t seed) {
  ConfluenceReport report;
  report.degree_bound = degree_bound;
  report.samples = samples;
  report.seed = seed;
  std::uint64_t state = seed;
  for (int i = 0; i < samples; ++i) {
    // Split the degree budget over the three factors.
    const int total =
        static_cast<int>(seeded_draw(state, static_cast<std::uint64_t>(degree_bound + 1)));
    const int dp = static_cast<int>(seeded_draw(state, static_cast<std::uint64_t>(total + 1)));
    const int dq = static_cast<int>(seeded_draw(state, static_cast<std::uint64_t>(total - dp + 1)));
    const int dr = total - dp - dq;
    const NCPolynomial p = random_element(alg, state, dp, 2);
    const NCPolynomial q = random_element(alg, state, dq, 2);
    const NCPolynomial r = random_element(alg, state, dr, 2);

    std::size_t steps = 0;
    const auto count = [&](std::size_t s) { report.steps += s; };
    const NCPolynomial np = alg.normal_form(p, &steps);
    count(steps);
    const NCPolynomial nq = alg.normal_form(q, &steps);
    count(steps);
    const NCPolynomial nr = alg.normal_form(r, &steps);
    count(steps);

    const NCPolynomial left = alg.reduced_product(alg.reduced_product(np, nq, &steps), nr, &steps);
    count(steps);
    const NCPolynomial right = alg.reduced_product(np, alg.reduced_product(nq, nr, &steps), &steps);
    count(steps);
    const NCPolynomial direct = alg.normal_form(nc_mul(nc_mul(p, q), r), &steps);
    count(steps);
    report.checks += 2;
    if (!(left == right) || !(left == direct)) {
      report.failures.push_back({"associativity", p, q, r, left, right == left ? direct : right});
    }
    const NCPolynomial again = alg.normal_form(np, &steps);
    count(steps);
    if (!(again == np)) {
      report.failures.push_back({"idempotence", p, q, r, np, again});
    }
  }
  return report;
}

OverlapReport overlap_check(const YangianAlgebra& alg, int max_superscript) {
  OverlapReport report;
  report.max_superscript = max_superscript;
  std::vector<Generator> gens;
  for (int r = 1; r <= max_superscript; ++r) {
    for (Family f : {Family::F, Family::D1, Family::D2, Family::E}) {
      const Generator g{f, r};
      if (alg.admissible(g)) {
        gens.push_back(g);
      }
    }
  }
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      if (!out_of_order(a, b)) continue;
      for (const auto& c : gens) {
        if (!out_of_order(b, c) ||
            a.superscript + b.superscript + c.superscript > max_superscript) {
          continue;
        }
        std::size_t steps = 0;
        const NCPolynomial ga = alg.gen(a);
        const NCPolynomial gb = alg.gen(b);
        const NCPolynomial gc = alg.gen(c);
        const NCPolynomial ab = alg.reduced_product(ga, gb, &steps);
        report.steps += steps;
        NCPolynomial left = alg.reduced_product(ab, gc, &steps);
        report.steps += steps;
        const NCPolynomial bc = alg.reduced_product(gb, gc, &steps);
        report.steps += steps;
        NCPolynomial right = alg.reduced_product(ga, bc, &steps);
        report.steps += steps;
        ++report.checked;
        if (!(left == right)) {
          report.failures.push_back({a, b, c, std::move(left), std::move(right)});
        }
      }
    }
  }
  return report;
}

bool TruncationReport::success() const {
  for (const auto& [r, residue] : residues) {
    if (!residue.is_zero()) {
      return false;
    }
  }
  return true;
}

TruncationReport truncation_consistency(const YangianAlgebra& alg, int max_r) {
  TruncationReport report;
  if (alg.mode() == Mode::Full) {
    return report;
  }
  for (int r = 2 * alg.n() + 1; r <= max_r; ++r) {
    const auto z = central_element_closed_form(alg, r);
    report.residues.emplace_back(r, alg.normal_form(z.as_polynomial));
  }
  return report;
}

GradedDimensionReport graded_dimension(const YangianAlgebra& alg, int degree,
                                       bool verify_fixed_points) {
  GradedDimensionReport report;
  report.full_mode = alg.mode() == Mode::Full;
  report.generators = alg.pbw_generators(degree);
  report.counts.assign(static_cast<std::size_t>(std::max(degree, 0)) + 1, 0);
  const bool verify = verify_fixed_points && !report.full_mode;
  const auto& gens = report.generators;
  std::vector<Generator> word;

  // PBW words are the non-decreasing sequences in the generator order.
  std::function<void(std::size_t, int)> walk = [&](std::size_t first, int deg) {
    report.counts[deg] += 1;
    if (verify) {
      const auto m = NCPolynomial::monomial(Monomial(word), Scalar(1), alg.alphabet());
      if (!(alg.normal_form(m) == m)) {
        throw std::logic_error("PBW word " + to_string(Monomial(word)) + " is not a normal form");
      }
    }
    for (std::size_t i = first; i < gens.size(); ++i) {
      if (deg + gens[i].superscript <= degree) {
        word.push_back(gens[i]);
        walk(i, deg + gens[i].superscript);
        word.pop_back();
      }
    }
  };
  if (degree >= 0) {
    walk(0, 0);
  }
  report.fixed_points_verified = verify;
  return report;
}

}  // namespace shyang::yangian
