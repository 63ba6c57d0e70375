#pragma once

// Builtin group constructions and GroupSpec parsing.

#include <string>
#include <vector>

#include "qext/group.hpp"

namespace qext {

GroupPtr cyclic_group(int64_t n);
GroupPtr dihedral_group(int64_t n);  // order 2n
GroupPtr symmetric_group(int64_t n);
GroupPtr alternating_group(int64_t n);
GroupPtr quaternion_group();  // Q8, regular representation
GroupPtr sl2_group(int64_t p);  // SL(2,p) on the nonzero vectors of F_p^2
GroupPtr direct_product(GroupPtr a, GroupPtr b);

/// Compact builtin syntax: "cyclic:12", "dihedral:6", "sym:4", "alt:5",
/// "quaternion8" (or "q8"), "sl23", "sl25", products with '*'.
GroupPtr parse_builtin(const std::string& name);

/// Explicit group: one-line images, e.g. {{1,0,2},{1,2,0}} with degree 3.
GroupPtr group_from_generator_images(size_t degree,
                                     const std::vector<std::vector<int>>& gens);

}  // namespace qext
