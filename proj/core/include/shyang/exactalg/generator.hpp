#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace shyang {

/// Generator families of the rank-two shifted Yangian. The enumerator value
/// is the PBW block position: F-block, D1-block, D2-block, E-block.
enum class Family : std::uint8_t { F = 0, D1 = 1, D2 = 2, E = 3 };

const char* family_name(Family f);

struct Generator {
  Family family = Family::D1;
  int superscript = 1;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator D1(int r) { return {Family::D1, r}; }
inline Generator D2(int r) { return {Family::D2, r}; }
inline Generator E(int r) { return {Family::E, r}; }
inline Generator F(int r) { return {Family::F, r}; }

/// "D1^3", "E^4", ...
std::string to_string(const Generator& g);

/// A word in the generators together with its canonical degree (sum of
/// superscripts). The empty word is the identity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Generator> word);
  Monomial(std::initializer_list<Generator> word);

  const std::vector<Generator>& word() const { return word_; }
  int degree() const { return degree_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  const Generator& operator[](std::size_t i) const { return word_[i]; }

  Monomial operator*(const Monomial& other) const;

  /// Word with positions [begin, end) replaced by nothing; used to splice
  /// rewrite results.
  Monomial prefix(std::size_t end) const;
  Monomial suffix(std::size_t begin) const;

  /// True iff the word is PBW ordered: families non-decreasing in block
  /// order and superscripts non-decreasing within a block.
  bool is_pbw_ordered() const;

  bool operator==(const Monomial& other) const { return word_ == other.word_; }

 private:
  std::vector<Generator> word_;
  int degree_ = 0;
};

/// Monomial order: canonical degree, then the family sequence
/// lexicographically (F < D1 < D2 < E), then the superscript sequence.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

/// True when the adjacent pair (a, b) is out of PBW order.
bool out_of_order(const Generator& a, const Generator& b);

std::string to_string(const Monomial& m);

}  // namespace shyang
