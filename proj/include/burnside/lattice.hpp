#pragma once

#include <vector>

#include "burnside/group.hpp"

namespace burnside {

/// One conjugacy class of subgroups.
struct SubgroupClass {
    Subgroup representative; ///< canonically least member of the class
    Int order = 1;           ///< |representative|
    Int normalizer_order = 1;
    Int class_size = 1;      ///< number of conjugates, = [G : N_G(rep)]
};

/// Conjugacy classes of subgroups in the canonical order: ascending subgroup
/// order, ties broken by the representative's element list. classes.front()
/// is the trivial subgroup, classes.back() the whole group.
struct SubgroupLattice {
    std::vector<SubgroupClass> classes;
    /// subconjugacy[i][j]: some conjugate of classes[i] lies inside classes[j].
    std::vector<std::vector<bool>> subconjugacy;

    int class_count() const { return static_cast<int>(classes.size()); }
};

/// Partitions subgroups(g) into conjugacy orbits and assembles the lattice.
SubgroupLattice conjugacy_classes_of_subgroups(const PermGroup& g, const Budgets& budgets = {});

} // namespace burnside
