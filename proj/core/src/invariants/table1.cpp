#include "shyang/invariants/table1.hpp"

#include <stdexcept>

namespace shyang::invariants {

std::string orbit_class_name(OrbitClass c) {
  switch (c) {
    case OrbitClass::Regular:
      return "Regular";
    case OrbitClass::Subregular:
      return "Subregular";
    case OrbitClass::TwoJordanBlocksC:
      return "TwoJordanBlocks";
    case OrbitClass::Dim8G:
      return "Dim8";
    case OrbitClass::Other:
      return "Other";
  }
  return "?";
}

OrbitClass parse_orbit_class(std::string_view text) {
  if (text == "Regular") return OrbitClass::Regular;
  if (text == "Subregular") return OrbitClass::Subregular;
  if (text == "TwoJordanBlocks" || text == "TwoJordanBlocksC") return OrbitClass::TwoJordanBlocksC;
  if (text == "Dim8" || text == "Dim8G") return OrbitClass::Dim8G;
  if (text == "Other") return OrbitClass::Other;
  throw std::invalid_argument("unknown orbit class '" + std::string(text) +
                              "' (expected Regular, Subregular, TwoJordanBlocks, Dim8 or Other)");
}

namespace {

void check_consistent(LieType type, OrbitClass orbit) {
  if (orbit == OrbitClass::TwoJordanBlocksC && type != LieType::C) {
    throw std::invalid_argument("orbit class TwoJordanBlocks is only defined in type C");
  }
  if (orbit == OrbitClass::Dim8G && type != LieType::G) {
    throw std::invalid_argument("orbit class Dim8 is only defined in type G");
  }
}

// Table entry containing the pair, or nullptr.
const char* listed_row(LieType type, OrbitClass orbit) {
  check_consistent(type, orbit);
  switch (orbit) {
    case OrbitClass::Regular:
      return "Regular (any type)";
    case OrbitClass::Subregular:
      switch (type) {
        case LieType::B:
        case LieType::C:
        case LieType::F:
        case LieType::G:
          return "Subregular (types B, C, F, G)";
        default:
          return nullptr;
      }
    case OrbitClass::TwoJordanBlocksC:
      return "Two Jordan blocks (type C)";
    case OrbitClass::Dim8G:
      return "dimension 8 (type G)";
    case OrbitClass::Other:
      return nullptr;
  }
  return nullptr;
}

}  // namespace

std::string table1_row(LieType type, OrbitClass orbit) {
  const char* row = listed_row(type, orbit);
  return row != nullptr ? row : "not listed";
}

bool universality_table(LieType type, OrbitClass orbit) {
  return listed_row(type, orbit) == nullptr;
}

}  // namespace shyang::invariants
