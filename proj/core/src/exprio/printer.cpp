#include "shyang/exprio/printer.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

namespace shyang::exprio {

namespace {

// Joins (coefficient, monomial text) pairs; an empty monomial is a constant.
std::string join_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, mono] = terms[i];
    const bool negative = c < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Scalar mag = abs(c);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + " * " + mono;
    }
  }
  return out;
}

}  // namespace

std::string print(const NCPolynomial& p) {
  std::vector<std::pair<const Monomial*, const Scalar*>> order;
  for (const auto& [m, c] : p.terms()) order.emplace_back(&m, &c);
  // The term map is already in monomial order; only the degree blocks flip.
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first->degree() > b.first->degree();
  });
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [m, c] : order) {
    terms.emplace_back(*c, m->is_identity() ? std::string() : to_string(*m));
  }
  return join_terms(terms);
}

std::string print(const CPolynomial& p) {
  std::vector<std::pair<const Exponents*, const Scalar*>> order;
  for (const auto& [e, c] : p.terms()) order.emplace_back(&e, &c);
  const auto total = [](const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const int da = total(*a.first);
    const int db = total(*b.first);
    if (da != db) return da > db;
    return *a.first > *b.first;
  });
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [e, c] : order) {
    std::string mono;
    for (std::size_t i = 0; i < e->size(); ++i) {
      const int k = (*e)[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += " * ";
      mono += p.variables()[i];
      if (k > 1) mono += "^" + std::to_string(k);
    }
    terms.emplace_back(*c, mono);
  }
  return join_terms(terms);
}

namespace {

enum class Context { Top, Term, Factor };

std::string print_expr(const Expr& e, Context ctx) {
  switch (e.kind) {
    case Expr::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        std::string child = print_expr(e.children[i], Context::Term);
        if (i == 0) {
          // "-3" would reparse as a negative literal.
          if (e.signs[i] < 0 && std::isdigit(static_cast<unsigned char>(child.front()))) {
            child = "(" + child + ")";
          }
          if (e.signs[i] < 0) out += "-";
        } else {
          out += e.signs[i] < 0 ? " - " : " + ";
        }
        out += child;
      }
      return ctx == Context::Top ? out : "(" + out + ")";
    }
    case Expr::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " * ";
        out += print_expr(e.children[i], Context::Factor);
      }
      return ctx == Context::Factor ? "(" + out + ")" : out;
    }
    case Expr::Kind::Power: {
      const Expr& base = e.children[0];
      const std::string b = base.kind == Expr::Kind::Atom
                                ? print_expr(base, Context::Factor)
                                : "(" + print_expr(base, Context::Top) + ")";
      return b + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::Commutator:
      return "[" + print_expr(e.children[0], Context::Top) + ", " +
             print_expr(e.children[1], Context::Top) + "]";
    case Expr::Kind::Number:
      return to_string(e.value);
    case Expr::Kind::Atom:
      if (e.atom == "e" || e.atom == "x") return e.atom + "_" + std::to_string(e.index);
      if (e.atom == "u" || e.atom == "v" || e.atom == "w") return e.atom;
      return e.atom + "^" + std::to_string(e.index);
  }
  return "";
}

}  // namespace

std::string print(const Expr& e) { return print_expr(e, Context::Top); }

}  // namespace shyang::exprio
