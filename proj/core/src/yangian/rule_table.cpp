#include "shyang/yangian/rule_table.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace shyang::data {
std::string_view default_relation_rules();
}

namespace shyang::yangian {

bool Guard::holds(long r, long s) const {
  const long a = lhs.eval(r, s);
  const long b = rhs.eval(r, s);
  switch (op) {
    case Comparison::Less:
      return a < b;
    case Comparison::LessEq:
      return a <= b;
    case Comparison::Equal:
      return a == b;
    case Comparison::GreaterEq:
      return a >= b;
    case Comparison::Greater:
      return a > b;
  }
  return false;
}

bool RewriteRule::matches(const Generator& a, const Generator& b) const {
  if (a.family != left || b.family != right) {
    return false;
  }
  for (const auto& g : guards) {
    if (!g.holds(a.superscript, b.superscript)) {
      return false;
    }
  }
  return true;
}

namespace {

/// Hand-written scanner over one rule line.
class LineParser {
 public:
  LineParser(std::string_view text, int line) : text_(text), line_(line) {}

  RewriteRule parse_rule() {
    RewriteRule rule;
    rule.line = line_;
    rule.source = std::string(text_);
    rule.left = parse_pattern_factor('r');
    expect('*');
    rule.right = parse_pattern_factor('s');
    skip_ws();
    if (peek_word("when")) {
      pos_ += 4;
      rule.guards.push_back(parse_guard());
      while (true) {
        skip_ws();
        if (!peek_word("and")) {
          break;
        }
        pos_ += 3;
        rule.guards.push_back(parse_guard());
      }
    }
    skip_ws();
    if (text_.substr(pos_, 2) != "->") {
      fail("expected '->'");
    }
    pos_ += 2;
    rule.replacement = parse_replacement();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected trailing input");
    }
    return rule;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw RuleTableError("rule file line " + std::to_string(line_) + ", column " +
                         std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool peek_word(std::string_view w) const {
    if (text_.substr(pos_, w.size()) != w) {
      return false;
    }
    const std::size_t end = pos_ + w.size();
    return end >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
  }

  std::string read_identifier() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(begin, pos_ - begin));
  }

  long read_integer() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (begin == pos_) {
      fail("expected integer");
    }
    if (pos_ - begin > 9) {
      fail("integer too large");
    }
    return std::stol(std::string(text_.substr(begin, pos_ - begin)));
  }

  Family parse_family(const std::string& name) {
    if (name == "D1") return Family::D1;
    if (name == "D2") return Family::D2;
    if (name == "E") return Family::E;
    if (name == "F") return Family::F;
    fail("unknown generator family '" + name + "'");
  }

  Family parse_pattern_factor(char index_symbol) {
    const Family fam = parse_family(read_identifier());
    expect('^');
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != index_symbol) {
      fail(std::string("pattern index must be '") + index_symbol + "'");
    }
    ++pos_;
    return fam;
  }

  // idx := iterm (('+'|'-') iterm)* ; iterm := INT | [INT] symbol
  IndexExpr parse_index_expr() {
    IndexExpr out;
    long sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    parse_index_term(out, sign);
    while (true) {
      const char c = peek();
      const bool arrow = c == '-' && text_.substr(pos_, 2) == "->";
      if ((c == '+' || c == '-') && !arrow) {
        ++pos_;
        parse_index_term(out, c == '+' ? 1 : -1);
      } else {
        return out;
      }
    }
  }

  void parse_index_term(IndexExpr& out, long sign) {
    skip_ws();
    long coeff = 1;
    bool have_int = false;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = read_integer();
      have_int = true;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'r' || text_[pos_] == 's' || text_[pos_] == 't')) {
      const char sym = text_[pos_++];
      long& slot = sym == 'r' ? out.cr : (sym == 's' ? out.cs : out.ct);
      slot += sign * coeff;
      return;
    }
    if (!have_int) {
      fail("expected index term");
    }
    out.c0 += sign * coeff;
  }

  IndexExpr parse_index_atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      IndexExpr e = parse_index_expr();
      expect(')');
      return e;
    }
    IndexExpr e;
    parse_index_term(e, 1);
    return e;
  }

  Guard parse_guard() {
    Guard g;
    g.lhs = parse_index_expr();
    skip_ws();
    const auto two = text_.substr(pos_, 2);
    if (two == ">=") {
      g.op = Comparison::GreaterEq;
      pos_ += 2;
    } else if (two == "<=") {
      g.op = Comparison::LessEq;
      pos_ += 2;
    } else if (two == "==") {
      g.op = Comparison::Equal;
      pos_ += 2;
    } else if (peek() == '>') {
      g.op = Comparison::Greater;
      ++pos_;
    } else if (peek() == '<') {
      g.op = Comparison::Less;
      ++pos_;
    } else {
      fail("expected comparison operator");
    }
    g.rhs = parse_index_expr();
    return g;
  }

  FactorTemplate parse_factor() {
    const std::string name = read_identifier();
    FactorTemplate f;
    if (name == "D1")
      f.kind = FactorKind::D1;
    else if (name == "D2")
      f.kind = FactorKind::D2;
    else if (name == "E")
      f.kind = FactorKind::E;
    else if (name == "F")
      f.kind = FactorKind::F;
    else if (name == "DI1")
      f.kind = FactorKind::DI1;
    else if (name == "DI2")
      f.kind = FactorKind::DI2;
    else
      fail("unknown factor '" + name + "'");
    expect('^');
    f.index = parse_index_atom();
    return f;
  }

  TermTemplate parse_term(long sign) {
    TermTemplate term;
    term.coefficient = Scalar(sign);
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t begin = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
        ++pos_;
      }
      try {
        term.coefficient *= parse_scalar(std::string(text_.substr(begin, pos_ - begin)));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      if (peek() != '*') {
        return term;  // bare scalar
      }
      ++pos_;
    }
    skip_ws();
    if (peek_word("sum")) {
      pos_ += 3;
      expect('(');
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != 't') {
        fail("summation index must be 't'");
      }
      ++pos_;
      expect('=');
      term.has_sum = true;
      term.sum_lo = parse_index_expr();
      skip_ws();
      if (text_.substr(pos_, 2) != "..") {
        fail("expected '..'");
      }
      pos_ += 2;
      term.sum_hi = parse_index_expr();
      expect(')');
    }
    term.factors.push_back(parse_factor());
    while (peek() == '*') {
      ++pos_;
      term.factors.push_back(parse_factor());
    }
    return term;
  }

  std::vector<TermTemplate> parse_replacement() {
    std::vector<TermTemplate> out;
    skip_ws();
    long sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    out.push_back(parse_term(sign));
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') {
        break;
      }
      ++pos_;
      out.push_back(parse_term(c == '+' ? 1 : -1));
    }
    // A lone "0" replacement is the empty sum.
    if (out.size() == 1 && out[0].factors.empty() && out[0].coefficient == 0) {
      out.clear();
    }
    return out;
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

RelationTable RelationTable::parse(std::string_view text) {
  RelationTable table;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
    }
    if (!line.empty()) {
      if (line.substr(0, 8) == "version ") {
        try {
          table.version_ = std::stoi(std::string(line.substr(8)));
        } catch (const std::exception&) {
          throw RuleTableError("rule file line " + std::to_string(line_no) + ": malformed version");
        }
      } else {
        table.rules_.push_back(LineParser(line, line_no).parse_rule());
      }
    }
    start = end + 1;
  }
  if (table.version_ != 1) {
    throw RuleTableError("rule file: missing or unsupported 'version' line (expected 1)");
  }
  if (table.rules_.empty()) {
    throw RuleTableError("rule file: no rules");
  }
  return table;
}

RelationTable RelationTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw RuleTableError("cannot open rule file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const RelationTable& RelationTable::builtin() {
  static const RelationTable table = parse(data::default_relation_rules());
  return table;
}

std::vector<const RewriteRule*> RelationTable::matching(const Generator& a,
                                                        const Generator& b) const {
  std::vector<const RewriteRule*> out;
  for (const auto& rule : rules_) {
    if (rule.matches(a, b)) {
      out.push_back(&rule);
    }
  }
  return out;
}

}  // namespace shyang::yangian
