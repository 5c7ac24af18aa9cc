#pragma once

#include <memory>
#include <string>
#include <vector>

#include "syzlab/group.hpp"
#include "syzlab/representation.hpp"

namespace syzlab {

/// A shipped group together with its catalog of complex irreducibles,
/// realized over Q(zeta_N) with N the group exponent (or a divisor of it).
struct BuiltinGroup {
    std::string name;
    std::shared_ptr<const FiniteGroup> group;
    IrrepCatalog catalog;
};

/// Names of the form "builtin:cyclic:N" (1 <= N <= 12), "builtin:dihedral:N"
/// (symmetries of the N-gon, order 2N, 2 <= N <= 6), "builtin:sym:3",
/// "builtin:sym:4", "builtin:alt:4", "builtin:quaternion:8", "builtin:klein:4".
/// Throws InputError("unknown builtin ...") otherwise.
BuiltinGroup builtin_group(const std::string& name);

std::vector<std::string> builtin_group_names();

}  // namespace syzlab
