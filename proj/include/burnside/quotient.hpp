#pragma once

#include <optional>
#include <vector>

#include "burnside/budgets.hpp"
#include "burnside/marks.hpp"

namespace burnside {

/// The image subring R of the Burnside ring inside (Z/n)^c, n = |G|: marks
/// rows reduced mod n, presented by a lower-triangular integer basis whose
/// span contains n*Z^c. Every element of R is a unique combination
/// sum a_i * basis.row(i) mod n with 0 <= a_i < coset_ranges[i].
struct QuotientImage {
    Int modulus = 1;             ///< n = |G|
    IntMatrix basis;             ///< c x c lower triangular, pivots divide n
    std::vector<Int> coset_ranges; ///< n / basis(i, i)
    std::optional<Int> size;     ///< |R| = prod(coset_ranges); nullopt on int64 overflow

    int class_count() const { return static_cast<int>(basis.rows()); }

    /// Membership of a residue vector (entries in [0, n)) in R.
    bool contains(const IntVector& residues) const;

    /// Residues of w mod n, entries in [0, n).
    IntVector reduce(const IntVector& w) const;
};

QuotientImage quotient_image(const MarksTable& t);

/// All elements of R whose coordinates are coprime to n — exactly the units
/// of R, as a unit of a finite commutative ring has its inverse among its own
/// powers. Enumerates R; throws BudgetExceeded if |R| is unknown or > budget.
std::vector<IntVector> unit_elements_of_image(const QuotientImage& q, Int budget);

} // namespace burnside
