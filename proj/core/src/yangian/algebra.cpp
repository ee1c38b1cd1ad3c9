#include "shyang/yangian/algebra.hpp"

#include <algorithm>

#include "shyang/yangian/central.hpp"

namespace shyang::yangian {

namespace {

constexpr std::size_t kMaxDepth = 1000;
constexpr int kMaxSubstitutionNesting = 64;

thread_local int substitution_nesting = 0;

struct NestingGuard {
  NestingGuard() {
    if (++substitution_nesting > kMaxSubstitutionNesting) {
      --substitution_nesting;
      throw BudgetExceeded("truncation substitutions nested deeper than " +
                           std::to_string(kMaxSubstitutionNesting) + " levels");
    }
  }
  ~NestingGuard() { --substitution_nesting; }
  NestingGuard(const NestingGuard&) = delete;
  NestingGuard& operator=(const NestingGuard&) = delete;
};

}  // namespace

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Full:
      return "full";
    case Mode::TruncatedGL:
      return "gl";
    case Mode::TruncatedSO:
      return "so";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  if (text == "full") return Mode::Full;
  if (text == "gl") return Mode::TruncatedGL;
  if (text == "so") return Mode::TruncatedSO;
  throw std::invalid_argument("unknown mode '" + text + "' (expected full, gl or so)");
}

struct YangianAlgebra::Context {
  std::size_t steps = 0;
  std::size_t depth = 0;
  std::size_t budget = 0;

  void step() {
    if (++steps > budget) {
      throw BudgetExceeded("normal form exceeded the step budget of " + std::to_string(budget) +
                           " rewrites");
    }
  }
};

std::size_t YangianAlgebra::PairHash::operator()(const PairKey& k) const {
  std::size_t h = static_cast<std::size_t>(k.g.family) * 1000003u + k.g.superscript;
  for (const auto& g : k.m.word()) {
    h = h * 131u + (static_cast<std::size_t>(g.family) << 24) + g.superscript;
  }
  return h;
}

YangianAlgebra::YangianAlgebra(int n, Mode mode, const RelationTable& table,
                               std::size_t step_budget)
    : n_(n), mode_(mode), table_(table), step_budget_(step_budget) {
  if (n < 2) {
    throw std::invalid_argument("YangianAlgebra: n must be >= 2 (got " + std::to_string(n) + ")");
  }
  if (step_budget == 0) {
    throw std::invalid_argument("YangianAlgebra: step budget must be positive");
  }
  if (mode_ == Mode::TruncatedSO) {
    // Precompute the eliminations of D2^(2r-1); this also checks that each
    // Z^(2r-1) is unitriangular in D2^(2r-1).
    for (int r = 1; r <= n_; ++r) {
      truncation_substitution(D2(2 * r - 1));
    }
  }
}

bool YangianAlgebra::admissible(const Generator& g) const {
  if (g.superscript < 1) {
    return false;
  }
  return g.family != Family::E || g.superscript > shift();
}

void YangianAlgebra::check_admissible(const Generator& g) const {
  if (g.superscript < 1) {
    throw InadmissibleGenerator(to_string(g) + ": superscript must be >= 1");
  }
  if (g.family == Family::E && g.superscript <= shift()) {
    throw InadmissibleGenerator(to_string(g) +
                                ": E superscript must exceed 2n-2 = " + std::to_string(shift()));
  }
}

NCPolynomial YangianAlgebra::gen(const Generator& g) const {
  check_admissible(g);
  return NCPolynomial::generator(g, alphabet());
}

std::vector<Generator> YangianAlgebra::pbw_generators(int max_superscript) const {
  std::vector<Generator> out;
  const int top = 2 * n_ - 1;
  switch (mode_) {
    case Mode::Full:
      for (int r = 1; r <= max_superscript; ++r) out.push_back(F(r));
      for (int r = 1; r <= max_superscript; ++r) out.push_back(D1(r));
      for (int r = 1; r <= max_superscript; ++r) out.push_back(D2(r));
      for (int r = shift() + 1; r <= max_superscript; ++r) out.push_back(E(r));
      break;
    case Mode::TruncatedGL:
      out.push_back(F(1));
      out.push_back(D1(1));
      for (int r = 1; r <= top; ++r) out.push_back(D2(r));
      out.push_back(E(top));
      break;
    case Mode::TruncatedSO:
      out.push_back(F(1));
      out.push_back(D1(1));
      for (int r = 2; r < top; r += 2) out.push_back(D2(r));
      out.push_back(E(top));
      break;
  }
  if (mode_ != Mode::Full) {
    std::erase_if(out, [&](const Generator& g) { return g.superscript > max_superscript; });
  }
  return out;
}

NCPolynomial YangianAlgebra::instantiate(const RewriteRule& rule, const Generator& a,
                                         const Generator& b) const {
  const long r = a.superscript;
  const long s = b.superscript;
  NCPolynomial out(alphabet());
  for (const auto& term : rule.replacement) {
    long lo = 0;
    long hi = 0;
    if (term.has_sum) {
      lo = term.sum_lo.eval(r, s);
      hi = term.sum_hi.eval(r, s);
    }
    for (long t = lo; t <= hi; ++t) {
      NCPolynomial prod = NCPolynomial::constant(term.coefficient, alphabet());
      for (const auto& f : term.factors) {
        const long idx = f.index.eval(r, s, t);
        NCPolynomial factor(alphabet());
        switch (f.kind) {
          case FactorKind::D1:
          case FactorKind::D2:
            if (idx < 0) {
              throw RuleTableError("rule line " + std::to_string(rule.line) +
                                   ": negative D superscript");
            }
            factor = idx == 0 ? one()
                              : NCPolynomial::generator(
                                    {f.kind == FactorKind::D1 ? Family::D1 : Family::D2,
                                     static_cast<int>(idx)},
                                    alphabet());
            break;
          case FactorKind::DI1:
          case FactorKind::DI2:
            if (idx < 0) {
              throw RuleTableError("rule line " + std::to_string(rule.line) +
                                   ": negative inverse-series index");
            }
            factor =
                d_to_nc(d_inverse_coeff(f.kind == FactorKind::DI1 ? 1 : 2, static_cast<int>(idx)),
                        alphabet());
            break;
          case FactorKind::E:
          case FactorKind::F: {
            const Generator g{f.kind == FactorKind::E ? Family::E : Family::F,
                              static_cast<int>(idx)};
            if (!admissible(g)) {
              throw RuleTableError("rule line " + std::to_string(rule.line) +
                                   " produced inadmissible generator " + to_string(g) +
                                   " for the pair " + to_string(a) + " * " + to_string(b));
            }
            factor = NCPolynomial::generator(g, alphabet());
            break;
          }
        }
        prod = nc_mul(prod, factor);
      }
      out += prod;
    }
  }
  return out;
}

NCPolynomial YangianAlgebra::swap_replacement(const Generator& a, const Generator& b) const {
  const auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = swap_cache_.find(key); it != swap_cache_.end()) {
      return it->second;
    }
  }
  const auto rules = table_.matching(a, b);
  if (rules.size() != 1) {
    throw RuleTableError(std::to_string(rules.size()) + " rules match the pair " + to_string(a) +
                         " * " + to_string(b) + " (expected exactly one)");
  }
  NCPolynomial value = instantiate(*rules.front(), a, b);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return swap_cache_.emplace(key, std::move(value)).first->second;
}

std::optional<NCPolynomial> YangianAlgebra::truncation_substitution(const Generator& g) const {
  if (mode_ == Mode::Full) {
    return std::nullopt;
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = substitution_cache_.find(g); it != substitution_cache_.end()) {
      return it->second;
    }
  }
  std::optional<NCPolynomial> value;
  const int top = 2 * n_ - 1;
  const bool so_odd = mode_ == Mode::TruncatedSO && g.family == Family::D2 &&
                      g.superscript % 2 == 1 && g.superscript <= top;
  if ((g.family == Family::D1 && g.superscript > 1) ||
      (g.family == Family::E && g.superscript > top) ||
      (g.family == Family::F && g.superscript > 1) ||
      (g.family == Family::D2 && g.superscript > top) || so_odd) {
    value = compute_substitution(g);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return substitution_cache_.emplace(g, std::move(value)).first->second;
}

NCPolynomial YangianAlgebra::compute_substitution(const Generator& g) const {
  const NestingGuard guard;
  const int top = 2 * n_ - 1;
  const auto d1 = gen(D1(1));
  switch (g.family) {
    case Family::D1:
      return NCPolynomial(alphabet());
    case Family::E:
      // [D1^(2), E^(s)] = E^(s+1) + D1^(1) E^(s) with D1^(2) = 0
      return -(d1 * gen(E(g.superscript - 1)));
    case Family::F:
      // [D1^(2), F^(s)] = -(F^(s+1) + F^(s) D1^(1)) with D1^(2) = 0
      return -(gen(F(g.superscript - 1)) * d1);
    case Family::D2:
      break;
  }
  if (g.superscript > top) {
    // D2^(r), r >= 2n, from [E^(2n-1), F^(b)] = -sum_t DI1^(t) D2^(r-t),
    // b = r - 2n + 2, with F^(b) = F^(1) (-D1^(1))^(b-1).
    const int r = g.superscript;
    const int b = r - top + 1;
    const NCPolynomial f_b = gen(F(1)) * nc_pow(-d1, static_cast<unsigned>(b - 1));
    const NCPolynomial e_top = gen(E(top));
    NCPolynomial value = -normal_form(e_top * f_b - f_b * e_top);
    for (int t = 1; t <= r; ++t) {
      value -= d_to_nc(d_inverse_coeff(1, t), alphabet()) * (r - t == 0 ? one() : gen(D2(r - t)));
    }
    return value;
  }
  // TruncatedSO: Z^(2k-1) = 0 solved for its D2^(2k-1) term.
  const auto z = central_element_closed_form(*this, g.superscript).as_polynomial;
  const Scalar lead = z.coefficient(Monomial{g});
  if (lead != 1) {
    throw std::logic_error("Z^(" + std::to_string(g.superscript) + ") is not unitriangular in " +
                           to_string(g));
  }
  return gen(g) - z;
}

NCPolynomial YangianAlgebra::apply_word(const std::vector<Generator>& word, const NCPolynomial& pbw,
                                        Context& ctx) const {
  NCPolynomial current = pbw;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    NCPolynomial next(alphabet());
    for (const auto& [m, c] : current.terms()) {
      NCPolynomial part = left_multiply(*it, m, ctx);
      part *= c;
      next += part;
    }
    current = std::move(next);
  }
  return current;
}

NCPolynomial YangianAlgebra::apply_word(const std::vector<Generator>& word, const Monomial& pbw,
                                        Context& ctx) const {
  return apply_word(word, NCPolynomial::monomial(pbw, Scalar(1), alphabet()), ctx);
}

// Normal form of g * m for a PBW word m of the quotient.
NCPolynomial YangianAlgebra::left_multiply(const Generator& g, const Monomial& m,
                                           Context& ctx) const {
  const auto sub = truncation_substitution(g);
  if (!sub && (m.is_identity() || !out_of_order(g, m[0]))) {
    std::vector<Generator> word;
    word.reserve(m.length() + 1);
    word.push_back(g);
    word.insert(word.end(), m.word().begin(), m.word().end());
    return NCPolynomial::monomial(Monomial(std::move(word)), Scalar(1), alphabet());
  }

  const PairKey key{g, m};
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = product_cache_.find(key); it != product_cache_.end()) {
      return it->second;
    }
  }
  if (++ctx.depth > kMaxDepth) {
    throw BudgetExceeded("normal form exceeded the recursion depth limit of " +
                         std::to_string(kMaxDepth));
  }
  ctx.step();

  NCPolynomial result(alphabet());
  if (sub) {
    for (const auto& [w, c] : sub->terms()) {
      NCPolynomial part = apply_word(w.word(), m, ctx);
      part *= c;
      result += part;
    }
  } else {
    const NCPolynomial replacement = swap_replacement(g, m[0]);
    const Monomial rest = m.suffix(1);
    for (const auto& [w, c] : replacement.terms()) {
      NCPolynomial part = apply_word(w.word(), rest, ctx);
      part *= c;
      result += part;
    }
  }
  --ctx.depth;

  std::lock_guard<std::mutex> lock(cache_mutex_);
  return product_cache_.emplace(key, std::move(result)).first->second;
}

NCPolynomial YangianAlgebra::normal_form(const NCPolynomial& p, std::size_t* steps) const {
  Context ctx;
  ctx.budget = step_budget_;
  NCPolynomial out(merge_alphabets(p.alphabet(), alphabet()));
  for (const auto& [w, c] : p.terms()) {
    for (const auto& g : w.word()) {
      check_admissible(g);
    }
    NCPolynomial part = apply_word(w.word(), Monomial(), ctx);
    part *= c;
    out += part;
  }
  if (steps != nullptr) {
    *steps = ctx.steps;
  }
  return out;
}

NCPolynomial YangianAlgebra::reduced_product(const NCPolynomial& a, const NCPolynomial& b,
                                             std::size_t* steps) const {
  return normal_form(nc_mul(a, b), steps);
}

NCPolynomial YangianAlgebra::reduced_commutator(const NCPolynomial& a, const NCPolynomial& b,
                                                std::size_t* steps) const {
  return normal_form(nc_commutator(a, b), steps);
}

void YangianAlgebra::validate_rules(int max_superscript) const {
  std::vector<Generator> gens;
  for (int r = 1; r <= max_superscript; ++r) {
    for (Family f : {Family::F, Family::D1, Family::D2, Family::E}) {
      const Generator g{f, r};
      if (admissible(g)) {
        gens.push_back(g);
      }
    }
  }
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      const auto rules = table_.matching(a, b);
      if (!out_of_order(a, b)) {
        if (!rules.empty()) {
          throw RuleTableError("rule line " + std::to_string(rules.front()->line) +
                               " matches the ordered pair " + to_string(a) + " * " + to_string(b));
        }
        continue;
      }
      if (rules.size() != 1) {
        throw RuleTableError(std::to_string(rules.size()) + " rules match " + to_string(a) + " * " +
                             to_string(b) + " (expected exactly one)");
      }
      const Monomial pattern{a, b};
      const NCPolynomial replacement = instantiate(*rules.front(), a, b);
      for (const auto& [w, c] : replacement.terms()) {
        if (w.degree() > pattern.degree() || !monomial_less(w, pattern)) {
          throw RuleTableError("rule line " + std::to_string(rules.front()->line) +
                               " is not decreasing: " + to_string(pattern) + " -> ... " +
                               to_string(w));
        }
      }
    }
  }
}

}  // namespace shyang::yangian
