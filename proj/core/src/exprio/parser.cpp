#include "shyang/exprio/parser.hpp"

#include <cctype>

#include "shyang/invariants/symmetric.hpp"
#include "shyang/kleinian/kleinian.hpp"

namespace shyang::exprio {

ParseError::ParseError(Position pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

bool Expr::same_as(const Expr& other) const {
  if (kind != other.kind || signs != other.signs || value != other.value || atom != other.atom ||
      index != other.index || exponent != other.exponent ||
      children.size() != other.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i].same_as(other.children[i])) return false;
  }
  return true;
}

namespace {

enum class Tok {
  Ident,
  Int,
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Slash,
  Underscore,
  End
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Position pos;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.pos = pos_;
    if (i_ >= text_.size()) return t;
    const unsigned char c = static_cast<unsigned char>(text_[i_]);
    if (std::isdigit(c)) {
      t.kind = Tok::Int;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        t.text += take();
      }
      return t;
    }
    if (std::isalpha(c)) {
      t.kind = Tok::Ident;
      while (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_]))) {
        t.text += take();
      }
      return t;
    }
    t.text = std::string(1, take());
    switch (c) {
      case '+':
        t.kind = Tok::Plus;
        break;
      case '-':
        t.kind = Tok::Minus;
        break;
      case '*':
        t.kind = Tok::Star;
        break;
      case '^':
        t.kind = Tok::Caret;
        break;
      case '(':
        t.kind = Tok::LParen;
        break;
      case ')':
        t.kind = Tok::RParen;
        break;
      case '[':
        t.kind = Tok::LBracket;
        break;
      case ']':
        t.kind = Tok::RBracket;
        break;
      case ',':
        t.kind = Tok::Comma;
        break;
      case '/':
        t.kind = Tok::Slash;
        break;
      case '_':
        t.kind = Tok::Underscore;
        break;
      default: {
        std::string shown = std::isprint(c) ? "'" + t.text + "'" : "byte " + std::to_string(c);
        throw ParseError(t.pos, "unexpected character " + shown);
      }
    }
    return t;
  }

 private:
  char take() {
    const char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) take();
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseLimits& limits) : lexer_(text), limits_(limits) {
    advance();
  }

  Expr parse_all() {
    Expr e = expr();
    if (cur_.kind != Tok::End) {
      throw ParseError(cur_.pos, "unexpected " + describe(cur_) + " after expression");
    }
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  Token peek() const {
    Lexer copy = lexer_;
    return copy.next();
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) {
      throw ParseError(cur_.pos, std::string("expected ") + what + ", found " + describe(cur_));
    }
    Token t = cur_;
    advance();
    return t;
  }

  int small_int(const char* what) {
    const Token t = expect(Tok::Int, what);
    if (t.text.size() > 9 || std::stol(t.text) > limits_.max_integer) {
      throw ParseError(t.pos, "integer " + t.text.substr(0, 12) + " exceeds the limit " +
                                  std::to_string(limits_.max_integer));
    }
    return static_cast<int>(std::stol(t.text));
  }

  struct DepthGuard {
    DepthGuard(Parser& p, Position pos) : p_(p) {
      if (++p_.depth_ > p_.limits_.max_depth) {
        throw ParseError(pos, "nesting deeper than " + std::to_string(p_.limits_.max_depth));
      }
    }
    ~DepthGuard() { --p_.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
    Parser& p_;
  };

  Expr expr() {
    const DepthGuard guard(*this, cur_.pos);
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    sum.pos = cur_.pos;
    int sign = 1;
    // A leading "-digits" is a negative literal, not a sign.
    if (cur_.kind == Tok::Minus && peek().kind != Tok::Int) {
      sign = -1;
      advance();
    }
    sum.children.push_back(term());
    sum.signs.push_back(sign);
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      sign = cur_.kind == Tok::Plus ? 1 : -1;
      advance();
      sum.children.push_back(term());
      sum.signs.push_back(sign);
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1) {
      return std::move(sum.children[0]);
    }
    return sum;
  }

  Expr term() {
    Expr prod;
    prod.kind = Expr::Kind::Product;
    prod.pos = cur_.pos;
    prod.children.push_back(factor());
    while (cur_.kind == Tok::Star) {
      advance();
      prod.children.push_back(factor());
    }
    if (prod.children.size() == 1) {
      return std::move(prod.children[0]);
    }
    return prod;
  }

  Expr power_suffix(Expr base) {
    if (cur_.kind != Tok::Caret) return base;
    const Position pos = cur_.pos;
    advance();
    Expr p;
    p.kind = Expr::Kind::Power;
    p.pos = pos;
    p.exponent = static_cast<unsigned>(small_int("an exponent"));
    p.children.push_back(std::move(base));
    return p;
  }

  Expr factor() {
    const Position pos = cur_.pos;
    switch (cur_.kind) {
      case Tok::LParen: {
        advance();
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return power_suffix(std::move(inner));
      }
      case Tok::LBracket: {
        const DepthGuard guard(*this, pos);
        advance();
        Expr c;
        c.kind = Expr::Kind::Commutator;
        c.pos = pos;
        c.children.push_back(expr());
        expect(Tok::Comma, "','");
        c.children.push_back(expr());
        expect(Tok::RBracket, "']'");
        return c;
      }
      case Tok::Minus:
      case Tok::Int:
        return fraction();
      case Tok::Ident:
        return power_suffix(atom());
      default:
        throw ParseError(pos, "expected a factor, found " + describe(cur_));
    }
  }

  Expr fraction() {
    Expr n;
    n.kind = Expr::Kind::Number;
    n.pos = cur_.pos;
    std::string text;
    if (cur_.kind == Tok::Minus) {
      text = "-";
      advance();
    }
    text += expect(Tok::Int, "digits").text;
    if (cur_.kind == Tok::Slash) {
      advance();
      const Token den = expect(Tok::Int, "a denominator");
      if (den.text.find_first_not_of('0') == std::string::npos) {
        throw ParseError(den.pos, "zero denominator");
      }
      text += "/" + den.text;
    }
    n.value = parse_scalar(text);
    return n;
  }

  Expr atom() {
    const Token id = cur_;
    advance();
    Expr a;
    a.kind = Expr::Kind::Atom;
    a.pos = id.pos;
    a.atom = id.text;
    if (id.text == "D1" || id.text == "D2" || id.text == "E" || id.text == "F" || id.text == "Z") {
      expect(Tok::Caret, "'^' after generator name");
      a.index = small_int("a superscript");
    } else if (id.text == "e" || id.text == "x") {
      expect(Tok::Underscore, "'_' after variable name");
      a.index = small_int("a subscript");
    } else if (id.text != "u" && id.text != "v" && id.text != "w") {
      throw ParseError(id.pos, "unknown atom '" + id.text + "'");
    }
    return a;
  }

  Lexer lexer_;
  ParseLimits limits_;
  Token cur_;
  int depth_ = 0;
};

template <typename P, typename Leaf, typename Mul>
P fold(const Expr& e, const Leaf& leaf, const Mul& mul, const P& one, unsigned max_power) {
  switch (e.kind) {
    case Expr::Kind::Sum: {
      P out = one * Scalar(0);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        P part = fold<P>(e.children[i], leaf, mul, one, max_power);
        if (e.signs[i] < 0) {
          out -= part;
        } else {
          out += part;
        }
      }
      return out;
    }
    case Expr::Kind::Product: {
      P out = one;
      for (const auto& c : e.children) out = mul(out, fold<P>(c, leaf, mul, one, max_power));
      return out;
    }
    case Expr::Kind::Power: {
      if (e.exponent > max_power) {
        throw ParseError(e.pos, "exponent " + std::to_string(e.exponent) + " exceeds " +
                                    std::to_string(max_power));
      }
      const P base = fold<P>(e.children[0], leaf, mul, one, max_power);
      P out = one;
      for (unsigned k = 0; k < e.exponent; ++k) out = mul(out, base);
      return out;
    }
    case Expr::Kind::Commutator: {
      const P a = fold<P>(e.children[0], leaf, mul, one, max_power);
      const P b = fold<P>(e.children[1], leaf, mul, one, max_power);
      return mul(a, b) - mul(b, a);
    }
    case Expr::Kind::Number:
      return one * e.value;
    case Expr::Kind::Atom:
      return leaf(e);
  }
  return one;
}

}  // namespace

Expr parse(std::string_view text, const ParseLimits& limits) {
  Parser p(text, limits);
  return p.parse_all();
}

NCPolynomial elaborate_nc(const Expr& e, const yangian::YangianAlgebra& alg,
                          const ElaborationOptions& options) {
  const auto leaf = [&](const Expr& a) -> NCPolynomial {
    Generator g;
    if (a.atom == "D1") {
      g = D1(a.index);
    } else if (a.atom == "D2") {
      g = D2(a.index);
    } else if (a.atom == "E") {
      g = E(a.index);
    } else if (a.atom == "F") {
      g = F(a.index);
    } else if (a.atom == "Z") {
      return yangian::central_element_closed_form(alg, a.index, options.formula).as_polynomial;
    } else {
      throw ParseError(a.pos, "'" + a.atom + "' is not an element of the Yangian");
    }
    try {
      alg.check_admissible(g);
    } catch (const yangian::InadmissibleGenerator& err) {
      throw ParseError(a.pos, err.what());
    }
    return alg.gen(g);
  };
  const auto mul = [](const NCPolynomial& a, const NCPolynomial& b) { return nc_mul(a, b); };
  return fold<NCPolynomial>(e, leaf, mul, alg.one(), options.max_power);
}

CPolynomial elaborate_c(const Expr& e, const CommutativeScope& scope,
                        const ElaborationOptions& options) {
  std::vector<std::string> vars;
  if (scope.symmetric != nullptr) {
    vars = scope.symmetric->variables();
  }
  for (const auto& name : kleinian::KleinianRing::invariant_variables()) vars.push_back(name);

  const auto leaf = [&](const Expr& a) -> CPolynomial {
    if (a.atom == "u" || a.atom == "v" || a.atom == "w") {
      return CPolynomial::variable(vars, a.atom);
    }
    if (a.atom == "x" || a.atom == "e") {
      if (scope.symmetric == nullptr) {
        throw ParseError(a.pos, "'" + a.atom + "_' needs a symmetric-function context");
      }
      try {
        const CPolynomial p = a.atom == "x"
                                  ? scope.symmetric->x(a.index)
                                  : invariants::elementary_symmetric(*scope.symmetric, a.index);
        return p.with_variables(vars);
      } catch (const std::exception& err) {
        throw ParseError(a.pos, err.what());
      }
    }
    throw ParseError(a.pos, "'" + a.atom + "' is not a commutative atom");
  };
  const auto mul = [](const CPolynomial& a, const CPolynomial& b) { return a * b; };
  return fold<CPolynomial>(e, leaf, mul, CPolynomial::constant(Scalar(1), vars), options.max_power);
}

}  // namespace shyang::exprio
