#include "shyang/yangian/central.hpp"

#include <algorithm>
#include <stdexcept>

namespace shyang::yangian {

std::vector<std::string> d_variables(int max_superscript) {
  std::vector<std::string> vars;
  const int R = std::max(max_superscript, 1);
  for (int i = 1; i <= 2; ++i) {
    for (int r = 1; r <= R; ++r) {
      vars.push_back("D" + std::to_string(i) + "^" + std::to_string(r));
    }
  }
  return vars;
}

CPolynomial d_coeff(int i, int r, int max_superscript) {
  const auto vars = d_variables(max_superscript);
  if (r == 0) {
    return CPolynomial::constant(Scalar(1), vars);
  }
  if (r < 0 || r > std::max(max_superscript, 1) || (i != 1 && i != 2)) {
    throw std::out_of_range("D coefficient outside the variable set");
  }
  return CPolynomial::variable(vars, "D" + std::to_string(i) + "^" + std::to_string(r));
}

NCPolynomial d_to_nc(const CPolynomial& p, Alphabet alphabet) {
  std::vector<Generator> gens;
  for (const auto& name : p.variables()) {
    if (name.size() < 4 || name[0] != 'D' || (name[1] != '1' && name[1] != '2') || name[2] != '^') {
      throw std::invalid_argument("not a D-variable: '" + name + "'");
    }
    gens.push_back({name[1] == '1' ? Family::D1 : Family::D2, std::stoi(name.substr(3))});
  }
  // Variables are listed D1 ascending then D2 ascending, which is PBW order.
  std::vector<std::size_t> order(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return gens[a] < gens[b]; });
  NCPolynomial out(alphabet);
  for (const auto& [e, c] : p.terms()) {
    std::vector<Generator> word;
    for (std::size_t idx : order) {
      for (int k = 0; k < e[idx]; ++k) {
        word.push_back(gens[idx]);
      }
    }
    out.add_term(Monomial(std::move(word)), c);
  }
  return out;
}

CPolynomial d_inverse_coeff(int i, int t) {
  if (t < 0) {
    throw std::invalid_argument("d_inverse_coeff: t must be >= 0");
  }
  const int R = std::max(t, 1);
  std::vector<CPolynomial> inv;
  inv.push_back(CPolynomial::constant(Scalar(1), d_variables(R)));
  for (int k = 1; k <= t; ++k) {
    CPolynomial acc(d_variables(R));
    for (int s = 1; s <= k; ++s) {
      acc -= d_coeff(i, s, R) * inv[k - s];
    }
    inv.push_back(acc);
  }
  return inv[t];
}

CPolynomial d_inverse_coeff(const YangianAlgebra&, int i, int t) { return d_inverse_coeff(i, t); }

namespace {

CPolynomial shifted_d2(int r, int R) {
  CPolynomial out(d_variables(R));
  if (r < 0) {
    return out;
  }
  for (int s = 0; s <= r; ++s) {
    const Scalar b = binomial(r - 1, r - s);
    if (b != 0) {
      out += d_coeff(2, s, R) * b;
    }
  }
  return out;
}

}  // namespace

CPolynomial shifted_d2_coeff(const YangianAlgebra&, int r) {
  if (r < -1) {
    throw std::invalid_argument("shifted_d2_coeff: r must be >= -1");
  }
  return shifted_d2(r, std::max(r, 1));
}

CPolynomial c_coeff(int /*n*/, int s) {
  const int R = std::max(s, 1);
  CPolynomial out(d_variables(R));
  for (int t = 0; t <= s; ++t) {
    out += d_coeff(1, t, R) * shifted_d2(s - t, R);
  }
  return out;
}

std::vector<CentralElement> central_series_expand(const YangianAlgebra& alg, int r_max) {
  if (r_max < 0) {
    throw std::invalid_argument("central_series_expand: r_max must be >= 0");
  }
  const int n = alg.n();
  const int R = std::max(r_max, 1);
  const auto vars = d_variables(R);
  using Series = std::vector<CPolynomial>;  // coefficients of u^0, u^-1, ...
  const auto zero_series = [&] { return Series(r_max + 1, CPolynomial(vars)); };
  const auto mul = [&](const Series& a, const Series& b) {
    Series out = zero_series();
    for (int i = 0; i <= r_max; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= r_max; ++j) {
        if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
      }
    }
    return out;
  };

  // (u-1)^-1 = u^-1 + u^-2 + ...; build its powers by repeated products.
  Series inv_shift = zero_series();
  for (int k = 1; k <= r_max; ++k) {
    inv_shift[k] = CPolynomial::constant(Scalar(1), vars);
  }
  Series d1 = zero_series();
  Series d2_shifted = zero_series();
  Series power = zero_series();
  power[0] = CPolynomial::constant(Scalar(1), vars);
  for (int k = 0; k <= r_max; ++k) {
    d1[k] = d_coeff(1, k, R);
    const CPolynomial dk = d_coeff(2, k, R);
    for (int j = 0; j <= r_max; ++j) {
      if (!power[j].is_zero()) d2_shifted[j] += dk * power[j];
    }
    power = mul(power, inv_shift);
  }
  const Series c = mul(d1, d2_shifted);

  // u (u-1)^(2n-1) as an integer coefficient list, highest power 2n first.
  std::vector<Scalar> poly{Scalar(1)};  // poly[k] = coefficient of u^(deg-k)
  for (int k = 0; k < 2 * n - 1; ++k) {
    std::vector<Scalar> next(poly.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i];
    }
    poly = std::move(next);
  }
  // The extra factor u only shifts degrees: poly[k] multiplies u^(2n-k).

  std::vector<CentralElement> out;
  for (int r = 0; r <= r_max; ++r) {
    // u^(2n-r) coefficient: sum over k + j = r of poly[k] * C^(j)
    CPolynomial z(vars);
    for (int k = 0; k <= r && k < static_cast<int>(poly.size()); ++k) {
      z += c[r - k] * poly[k];
    }
    out.push_back({r, d_to_nc(z, alg.alphabet())});
  }
  return out;
}

CentralElement central_element_closed_form(const YangianAlgebra& alg, int r,
                                           CentralFormula formula) {
  if (r < 0) {
    throw std::invalid_argument("central_element_closed_form: r must be >= 0");
  }
  const int n = alg.n();
  const int R = std::max(r, 1);
  CPolynomial z(d_variables(R));
  for (int s = 0; s <= r; ++s) {
    Scalar coeff;
    if (formula == CentralFormula::Corrected) {
      coeff = binomial(2 * n - 1, 2 * n - 1 - r + s);
      if ((2 * n - r + s) % 2 != 0) coeff = -coeff;
    } else {
      coeff = binomial(2 * n - 1, 2 * n - 1 - s);
      if ((2 * n - s) % 2 != 0) coeff = -coeff;
    }
    if (coeff != 0) {
      z += c_coeff(n, s).with_variables(d_variables(R)) * coeff;
    }
  }
  return {r, d_to_nc(z, alg.alphabet())};
}

}  // namespace shyang::yangian
