#pragma once

#include <string>
#include <string_view>

#include "shyang/invariants/dynkin.hpp"

namespace shyang::invariants {

enum class OrbitClass { Regular, Subregular, TwoJordanBlocksC, Dim8G, Other };

std::string orbit_class_name(OrbitClass c);
/// Accepts Regular, Subregular, TwoJordanBlocks[C], Dim8[G], Other.
OrbitClass parse_orbit_class(std::string_view text);

/// True iff the slice to an orbit of this class is a universal Poisson
/// deformation of its central fibre, i.e. the pair is absent from the table
/// of exceptions. TwoJordanBlocksC is only meaningful in type C and Dim8G
/// in type G; other combinations throw std::invalid_argument.
bool universality_table(LieType type, OrbitClass orbit);

/// The table entry matched by the query, e.g. "Regular (any type)", or
/// "not listed" for universal pairs.
std::string table1_row(LieType type, OrbitClass orbit);

}  // namespace shyang::invariants
