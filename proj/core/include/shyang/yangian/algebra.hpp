#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "shyang/exactalg/cpoly.hpp"
#include "shyang/exactalg/ncpoly.hpp"
#include "shyang/yangian/rule_table.hpp"

namespace shyang::yangian {

/// Which quotient of Y_2(sigma) the normal form computes in.
///   Full         the shifted Yangian itself
///   TruncatedGL  kernel D1^(r), r > 1 (the subregular W-algebra of gl_2n)
///   TruncatedSO  additionally Z^(2r-1) = 0 for r = 1..n (type B_n)
enum class Mode { Full, TruncatedGL, TruncatedSO };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& text);

/// Raised when a normal form exceeds its rewrite-step or recursion budget.
/// A correct rule table never gets near the default budget, so this almost
/// always means a rule is not decreasing.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InadmissibleGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

class YangianAlgebra {
 public:
  YangianAlgebra(int n, Mode mode, const RelationTable& table = RelationTable::builtin(),
                 std::size_t step_budget = kDefaultStepBudget);

  YangianAlgebra(const YangianAlgebra&) = delete;
  YangianAlgebra& operator=(const YangianAlgebra&) = delete;

  int n() const { return n_; }
  /// s_{1,2} = 2n - 2; E^(r) exists only for r > shift().
  int shift() const { return 2 * n_ - 2; }
  Mode mode() const { return mode_; }
  Alphabet alphabet() const { return Alphabet{n_}; }
  const RelationTable& relations() const { return table_; }
  std::size_t step_budget() const { return step_budget_; }

  bool admissible(const Generator& g) const;
  /// Throws InadmissibleGenerator for F/D superscript < 1 or E^(r), r <= shift.
  void check_admissible(const Generator& g) const;
  NCPolynomial gen(const Generator& g) const;
  NCPolynomial one() const { return NCPolynomial::constant(Scalar(1), alphabet()); }
  NCPolynomial scalar(const Scalar& c) const { return NCPolynomial::constant(c, alphabet()); }

  /// PBW generators of the current quotient with superscript at most
  /// max_superscript (the bound only matters in Full mode), in PBW order.
  std::vector<Generator> pbw_generators(int max_superscript) const;

  /// Fixed point of the rewrite system. Every word of the result is PBW
  /// ordered and built from pbw_generators(). `steps`, when given, receives
  /// the number of rewrites that were not served from the cache.
  NCPolynomial normal_form(const NCPolynomial& p, std::size_t* steps = nullptr) const;

  NCPolynomial reduced_product(const NCPolynomial& a, const NCPolynomial& b,
                               std::size_t* steps = nullptr) const;
  NCPolynomial reduced_commutator(const NCPolynomial& a, const NCPolynomial& b,
                                  std::size_t* steps = nullptr) const;

  /// Instantiated replacement for the out-of-order pair a*b (memoized).
  /// Throws RuleTableError unless exactly one rule matches.
  NCPolynomial swap_replacement(const Generator& a, const Generator& b) const;

  /// Letter substitution imposed by the truncation, if g is not a PBW
  /// generator of the quotient.
  std::optional<NCPolynomial> truncation_substitution(const Generator& g) const;

  /// Checks, for every out-of-order pair with superscripts up to
  /// max_superscript, that exactly one rule matches and every word of the
  /// instantiated replacement has degree <= the pattern degree and is
  /// strictly smaller in the monomial order. Throws RuleTableError.
  void validate_rules(int max_superscript) const;

 private:
  struct Context;

  NCPolynomial instantiate(const RewriteRule& rule, const Generator& a, const Generator& b) const;
  NCPolynomial left_multiply(const Generator& g, const Monomial& m, Context& ctx) const;
  NCPolynomial apply_word(const std::vector<Generator>& word, const NCPolynomial& pbw,
                          Context& ctx) const;
  NCPolynomial apply_word(const std::vector<Generator>& word, const Monomial& pbw,
                          Context& ctx) const;
  NCPolynomial compute_substitution(const Generator& g) const;

  int n_;
  Mode mode_;
  RelationTable table_;
  std::size_t step_budget_;

  struct PairKey {
    Generator g;
    Monomial m;
    bool operator==(const PairKey& o) const { return g == o.g && m == o.m; }
  };
  struct PairHash {
    std::size_t operator()(const PairKey& k) const;
  };

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Generator, Generator>, NCPolynomial> swap_cache_;
  mutable std::map<Generator, std::optional<NCPolynomial>> substitution_cache_;
  mutable std::unordered_map<PairKey, NCPolynomial, PairHash> product_cache_;
};

}  // namespace shyang::yangian
