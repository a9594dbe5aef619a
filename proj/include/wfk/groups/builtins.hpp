#pragma once

#include <string>

#include "wfk/groups/classes.hpp"
#include "wfk/groups/group.hpp"

namespace wfk::groups {

FiniteGroup trivial_group();
FiniteGroup cyclic(int k);
FiniteGroup binary_dihedral(int m);  // order 4m
FiniteGroup binary_tetrahedral();    // 24
FiniteGroup binary_octahedral();     // 48
FiniteGroup binary_icosahedral();    // 120
FiniteGroup symmetric(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Accepts "cyclic:4", "builtin:cyclic:4", "binary-dihedral:3", "binary-tetrahedral",
// "binary-octahedral", "binary-icosahedral", "symmetric:3", "trivial".
GroupHandle builtin_group(const std::string& spec);

}  // namespace wfk::groups
