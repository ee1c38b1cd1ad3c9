#include "shyang/invariants/dynkin.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace shyang::data {
std::string_view default_degree_table();
}

namespace shyang::invariants {

char type_letter(LieType t) { return "ABCDEFG"[static_cast<int>(t)]; }

LieType parse_type(std::string_view text) {
  if (text.size() == 1 && text[0] >= 'A' && text[0] <= 'G') {
    return static_cast<LieType>(text[0] - 'A');
  }
  throw std::invalid_argument("unknown Lie type '" + std::string(text) + "'");
}

bool valid_type_rank(LieType t, int rank) {
  switch (t) {
    case LieType::A:
      return rank >= 1;
    case LieType::B:
    case LieType::C:
      return rank >= 2;
    case LieType::D:
      return rank >= 3;
    case LieType::E:
      return rank >= 6 && rank <= 8;
    case LieType::F:
      return rank == 4;
    case LieType::G:
      return rank == 2;
  }
  return false;
}

std::string type_name(LieType t, int rank) { return type_letter(t) + std::to_string(rank); }

std::pair<LieType, int> parse_type_rank(std::string_view text) {
  if (text.size() < 2) {
    throw std::invalid_argument("expected a type and rank such as B2, got '" + std::string(text) +
                                "'");
  }
  const LieType t = parse_type(text.substr(0, 1));
  int rank = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("bad rank in '" + std::string(text) + "'");
  }
  if (!valid_type_rank(t, rank)) {
    throw std::invalid_argument("no simple Lie algebra of type " + std::string(text));
  }
  return {t, rank};
}

Integer DynkinDatum::degree_product() const {
  Integer p = 1;
  for (int d : degrees) {
    p *= d;
  }
  return p;
}

Integer weyl_group_order(LieType t, int rank) {
  if (!valid_type_rank(t, rank)) {
    throw std::invalid_argument("invalid type " + type_name(t, rank));
  }
  Integer factorial = 1;
  for (int k = 2; k <= rank; ++k) {
    factorial *= k;
  }
  Integer two_pow = 1;
  mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), static_cast<mp_bitcnt_t>(rank));
  switch (t) {
    case LieType::A:
      return factorial * (rank + 1);
    case LieType::B:
    case LieType::C:
      return two_pow * factorial;
    case LieType::D:
      return two_pow * factorial / 2;
    case LieType::E:
      return rank == 6 ? Integer(51840) : rank == 7 ? Integer(2903040) : Integer(696729600);
    case LieType::F:
      return 1152;
    case LieType::G:
      return 12;
  }
  return 0;
}

std::vector<std::vector<int>> cartan_matrix(LieType t, int rank) {
  if (!valid_type_rank(t, rank)) {
    throw std::invalid_argument("invalid type " + type_name(t, rank));
  }
  const auto n = static_cast<std::size_t>(rank);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
  }
  switch (t) {
    case LieType::A:
    case LieType::B:
    case LieType::C:
    case LieType::F:
    case LieType::G:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        link(i, i + 1);
      }
      break;
    case LieType::D:
      for (std::size_t i = 0; i + 2 < n; ++i) {
        link(i, i + 1);
      }
      link(n - 3, n - 1);
      break;
    case LieType::E:
      // 1-3-4-5-...; 2 attached to 4.
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) {
        link(i, i + 1);
      }
      break;
  }
  // Multiple bonds: the short root's row carries -2 (or -3).
  switch (t) {
    case LieType::B:
      a[n - 1][n - 2] = -2;
      break;
    case LieType::C:
      a[n - 2][n - 1] = -2;
      break;
    case LieType::F:
      a[2][1] = -2;
      break;
    case LieType::G:
      a[0][1] = -3;
      break;
    default:
      break;
  }
  return a;
}

std::vector<DynkinDatum> parse_degree_table(std::string_view text) {
  std::vector<DynkinDatum> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string type;
    if (!(fields >> type)) {
      continue;
    }
    DynkinDatum d;
    d.type = parse_type(type);
    if (!(fields >> d.rank) || !valid_type_rank(d.type, d.rank)) {
      throw std::invalid_argument("degree table line " + std::to_string(line_no) + ": bad rank");
    }
    int deg = 0;
    while (fields >> deg) {
      d.degrees.push_back(deg);
      d.kazhdan_degrees.push_back(2 * deg);
    }
    if (!fields.eof() || static_cast<int>(d.degrees.size()) != d.rank) {
      throw std::invalid_argument("degree table line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(d.rank) + " degrees");
    }
    out.push_back(std::move(d));
  }
  return out;
}

const std::vector<DynkinDatum>& builtin_degree_table() {
  static const std::vector<DynkinDatum> table = parse_degree_table(data::default_degree_table());
  return table;
}

DynkinDatum fundamental_degrees(LieType t, int rank) {
  if (!valid_type_rank(t, rank)) {
    throw std::invalid_argument("invalid type " + type_name(t, rank));
  }
  for (const auto& d : builtin_degree_table()) {
    if (d.type == t && d.rank == rank) {
      return d;
    }
  }
  throw std::invalid_argument("degree table has no entry for " + type_name(t, rank));
}

LambdaPartition lambda_partition(const DynkinDatum& datum) {
  LambdaPartition p;
  for (std::size_t i = 0; i < datum.kazhdan_degrees.size(); ++i) {
    (datum.kazhdan_degrees[i] % 4 == 0 ? p.lambda0 : p.lambda2).push_back(i);
  }
  return p;
}

std::vector<int> kazhdan_at(const DynkinDatum& datum, const std::vector<std::size_t>& indices) {
  std::vector<int> out;
  for (auto i : indices) {
    out.push_back(datum.kazhdan_degrees.at(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FoldingPair folding_pair(LieType folded, int rank) {
  if (!valid_type_rank(folded, rank)) {
    throw std::invalid_argument("invalid type " + type_name(folded, rank));
  }
  FoldingPair p;
  p.folded = fundamental_degrees(folded, rank);
  p.gamma0_order = 2;
  switch (folded) {
    case LieType::B:
      p.unfolded = fundamental_degrees(LieType::A, 2 * rank - 1);
      break;
    case LieType::C:
      p.unfolded = fundamental_degrees(LieType::D, rank + 1);
      break;
    case LieType::F:
      p.unfolded = fundamental_degrees(LieType::E, 6);
      break;
    case LieType::G:
      // Full automorphism group S_3 of D4.
      p.unfolded = fundamental_degrees(LieType::D, 4);
      p.gamma0_order = 6;
      break;
    default:
      throw std::invalid_argument(type_name(folded, rank) +
                                  " is simply laced and is not obtained by folding");
  }
  return p;
}

FoldingReport folding_degree_check(const FoldingPair& pair) {
  FoldingReport r;
  r.pair = pair;
  r.partition = lambda_partition(pair.unfolded);
  r.unfolded_lambda0 = kazhdan_at(pair.unfolded, r.partition.lambda0);
  r.unfolded_lambda2 = kazhdan_at(pair.unfolded, r.partition.lambda2);
  r.folded_kazhdan = pair.folded.kazhdan_degrees;
  std::sort(r.folded_kazhdan.begin(), r.folded_kazhdan.end());
  r.multisets_equal = r.unfolded_lambda0 == r.folded_kazhdan;
  r.ranks_equal = static_cast<int>(r.partition.lambda0.size()) == pair.folded.rank;
  return r;
}

}  // namespace shyang::invariants
