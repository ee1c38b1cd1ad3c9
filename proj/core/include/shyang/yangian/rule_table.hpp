#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shyang/exactalg/generator.hpp"
#include "shyang/exactalg/scalar.hpp"

namespace shyang::yangian {

class RuleTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer affine expression c0 + cr*r + cs*s + ct*t in the rule indices.
struct IndexExpr {
  long c0 = 0;
  long cr = 0;
  long cs = 0;
  long ct = 0;

  long eval(long r, long s, long t = 0) const { return c0 + cr * r + cs * s + ct * t; }
};

enum class Comparison { Less, LessEq, Equal, GreaterEq, Greater };

struct Guard {
  IndexExpr lhs;
  Comparison op = Comparison::Equal;
  IndexExpr rhs;

  bool holds(long r, long s) const;
};

/// Factor symbols usable in replacements: the four generator families plus
/// the inverse-series coefficients of D1 and D2.
enum class FactorKind { D1, D2, E, F, DI1, DI2 };

struct FactorTemplate {
  FactorKind kind = FactorKind::D1;
  IndexExpr index;
};

struct TermTemplate {
  Scalar coefficient{1};
  bool has_sum = false;
  IndexExpr sum_lo;
  IndexExpr sum_hi;
  std::vector<FactorTemplate> factors;
};

/// One oriented relation: left * right (out of PBW order) -> replacement.
struct RewriteRule {
  Family left = Family::D1;
  Family right = Family::D1;
  std::vector<Guard> guards;
  std::vector<TermTemplate> replacement;
  int line = 0;
  std::string source;

  bool matches(const Generator& a, const Generator& b) const;
};

/// Parsed rule file. Rules are templates over the superscripts (r, s) of the
/// out-of-order pair; the algebra instantiates and memoizes them on demand.
class RelationTable {
 public:
  RelationTable() = default;

  /// Parses the line-oriented rule format; throws RuleTableError with the
  /// offending line number.
  static RelationTable parse(std::string_view text);
  static RelationTable from_file(const std::string& path);
  /// The table shipped in core/data/yangian_relations.rules.
  static const RelationTable& builtin();

  const std::vector<RewriteRule>& rules() const { return rules_; }
  int version() const { return version_; }

  /// Rules whose pattern and guards match the pair.
  std::vector<const RewriteRule*> matching(const Generator& a, const Generator& b) const;

 private:
  std::vector<RewriteRule> rules_;
  int version_ = 0;
};

}  // namespace shyang::yangian
