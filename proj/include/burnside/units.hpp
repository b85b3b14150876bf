#pragma once

#include <vector>

#include "burnside/marks.hpp"

namespace burnside {

/// The unit group of the Burnside ring: all +-1-valued ghost vectors in the
/// image, an elementary abelian 2-group of rank `rank`.
struct UnitsReport {
    int class_count = 0;
    std::vector<IntVector> unit_vectors; ///< each entry +-1, in mask order
    int rank = 0;                        ///< |units| = 2^rank
    std::vector<IntVector> generators;   ///< greedy GF(2)-independent subset

    Int count() const { return static_cast<Int>(unit_vectors.size()); }
};

/// Exhaustive search over the 2^c sign vectors, keeping those in the image.
/// Refused (BudgetExceeded) above kMaxUnitSearchClasses classes.
UnitsReport units(const MarksTable& t);

} // namespace burnside
