#include "shyang/invariants/molien.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace shyang::invariants {

namespace {

// Square matrices flattened row-major. Entries are long long when every
// input entry is a small integer, Scalar otherwise.
template <typename T>
using Flat = std::vector<T>;

Scalar to_scalar(long long x) { return Scalar(static_cast<long>(x)); }
const Scalar& to_scalar(const Scalar& x) { return x; }

template <typename T>
Flat<T> multiply(const Flat<T>& a, const Flat<T>& b, std::size_t d) {
  Flat<T> c(d * d, T(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const T& aik = a[i * d + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        c[i * d + j] += aik * b[k * d + j];
      }
    }
  }
  return c;
}

template <typename T>
Flat<T> identity(std::size_t d) {
  Flat<T> m(d * d, T(0));
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = T(1);
  return m;
}

// Verifies that the distinct matrices in `elements` form a group by growing
// the subgroup generated by a few of them until it exhausts the set; every
// product met on the way must lie in the set.
template <typename T>
void check_closure(const std::vector<Flat<T>>& elements, std::size_t d) {
  const std::set<Flat<T>> all(elements.begin(), elements.end());
  if (all.size() != elements.size()) {
    throw GroupError("group list contains repeated matrices");
  }
  const Flat<T> id = identity<T>(d);
  if (all.count(id) == 0) {
    throw GroupError("group list does not contain the identity");
  }
  std::set<Flat<T>> sub{id};
  std::vector<Flat<T>> gens;
  for (const auto& s : elements) {
    if (sub.count(s) != 0) continue;
    gens.push_back(s);
    std::vector<Flat<T>> frontier(sub.begin(), sub.end());
    while (!frontier.empty()) {
      std::vector<Flat<T>> next;
      for (const auto& h : frontier) {
        for (const auto& g : gens) {
          Flat<T> p = multiply(h, g, d);
          if (sub.count(p) != 0) continue;
          if (all.count(p) == 0) {
            throw GroupError("matrices are not closed under multiplication");
          }
          sub.insert(p);
          next.push_back(std::move(p));
        }
      }
      frontier = std::move(next);
    }
  }
}

// det(1 - t A) as coefficients of t^0..t^d (Faddeev-LeVerrier).
template <typename T>
std::vector<Scalar> one_minus_t_det(const Flat<T>& a, std::size_t d) {
  std::vector<T> c(d + 1, T(0));
  c[0] = T(1);
  Flat<T> m(d * d, T(0));
  for (std::size_t k = 1; k <= d; ++k) {
    Flat<T> am = multiply(a, m, d);
    for (std::size_t i = 0; i < d; ++i) am[i * d + i] += c[k - 1];
    m = std::move(am);
    const Flat<T> prod = multiply(a, m, d);
    T trace(0);
    for (std::size_t i = 0; i < d; ++i) trace += prod[i * d + i];
    c[k] = -trace / T(static_cast<long>(k));
  }
  std::vector<Scalar> out;
  for (const auto& x : c) out.push_back(to_scalar(x));
  return out;
}

template <typename T>
std::map<std::vector<Scalar>, long> class_counts(const std::vector<Flat<T>>& elements,
                                                 std::size_t d) {
  check_closure(elements, d);
  std::map<std::vector<Scalar>, long> counts;
  for (const auto& e : elements) {
    counts[one_minus_t_det(e, d)] += 1;
  }
  return counts;
}

std::size_t dimension_of(const std::vector<ExactMatrix>& group) {
  if (group.empty()) {
    throw GroupError("empty group list");
  }
  const std::size_t d = group.front().size();
  for (const auto& m : group) {
    if (m.size() != d) throw GroupError("matrices of different sizes");
    for (const auto& row : m) {
      if (row.size() != d) throw GroupError("non-square matrix");
    }
  }
  return d;
}

bool small_integer_entries(const std::vector<ExactMatrix>& group) {
  constexpr long kLimit = 1L << 20;
  for (const auto& m : group) {
    for (const auto& row : m) {
      for (const auto& x : row) {
        if (x.get_den() != 1 || abs(x.get_num()) > kLimit) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<ExactMatrix> weyl_group_matrices(LieType t, int rank) {
  const auto a = cartan_matrix(t, rank);
  const auto d = static_cast<std::size_t>(rank);
  std::vector<Flat<long long>> gens;
  for (std::size_t i = 0; i < d; ++i) {
    // Column j holds the image of alpha_j.
    Flat<long long> s = identity<long long>(d);
    for (std::size_t j = 0; j < d; ++j) {
      s[i * d + j] -= a[j][i];
    }
    gens.push_back(std::move(s));
  }
  std::set<Flat<long long>> seen{identity<long long>(d)};
  std::vector<Flat<long long>> order{identity<long long>(d)};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : gens) {
      Flat<long long> p = multiply(order[head], g, d);
      if (seen.insert(p).second) order.push_back(std::move(p));
    }
  }
  std::vector<ExactMatrix> out;
  out.reserve(order.size());
  for (const auto& f : order) {
    ExactMatrix m(d, std::vector<Scalar>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m[i][j] = Scalar(static_cast<long>(f[i * d + j]));
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Scalar> molien_series(const std::vector<ExactMatrix>& group, int degree_bound) {
  const std::size_t d = dimension_of(group);
  std::map<std::vector<Scalar>, long> counts;
  if (small_integer_entries(group)) {
    std::vector<Flat<long long>> flat;
    for (const auto& m : group) {
      Flat<long long> f;
      for (const auto& row : m) {
        for (const auto& x : row) f.push_back(x.get_num().get_si());
      }
      flat.push_back(std::move(f));
    }
    counts = class_counts(flat, d);
  } else {
    std::vector<Flat<Scalar>> flat;
    for (const auto& m : group) {
      Flat<Scalar> f;
      for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
      flat.push_back(std::move(f));
    }
    counts = class_counts(flat, d);
  }

  const auto len = static_cast<std::size_t>(std::max(degree_bound, 0)) + 1;
  std::vector<Scalar> total(len, Scalar(0));
  for (const auto& [q, count] : counts) {
    // Power series of 1/q(t), q(0) = 1.
    std::vector<Scalar> inv(len, Scalar(0));
    inv[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
      Scalar acc(0);
      for (std::size_t i = 1; i <= std::min(k, q.size() - 1); ++i) acc -= q[i] * inv[k - i];
      inv[k] = acc;
    }
    for (std::size_t k = 0; k < len; ++k) total[k] += count * inv[k];
  }
  const Scalar order(static_cast<long>(group.size()));
  for (auto& c : total) c /= order;
  return total;
}

std::vector<int> molien_degrees(const std::vector<ExactMatrix>& group, int degree_bound) {
  const std::size_t d = dimension_of(group);
  std::vector<Scalar> series = molien_series(group, degree_bound);
  const auto no_match = [&] {
    return GroupError("Molien series has no product form with " + std::to_string(d) +
                      " factors through degree " + std::to_string(degree_bound));
  };
  std::vector<int> degrees;
  for (std::size_t k = 1; k < series.size(); ++k) {
    const Scalar c = series[k];
    if (c == 0) continue;
    if (c < 0 || c.get_den() != 1 || degrees.size() + c.get_num().get_ui() > d) throw no_match();
    // Multiply by (1 - t^k)^c.
    for (unsigned long rep = 0; rep < c.get_num().get_ui(); ++rep) {
      for (std::size_t i = series.size() - 1; i >= k; --i) series[i] -= series[i - k];
      degrees.push_back(static_cast<int>(k));
    }
  }
  if (degrees.size() != d) throw no_match();
  return degrees;
}

}  // namespace shyang::invariants
