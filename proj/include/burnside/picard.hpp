#pragma once

#include <optional>

#include "burnside/abelian.hpp"
#include "burnside/quotient.hpp"
#include "burnside/units.hpp"

namespace burnside {

/// Picard group of the Burnside ring as the cokernel of
///   C(G)^x + R^x -> ((Z/n)^c)^x,   (u, v) |-> u * v^-1,
/// where R is the image subring mod n. The sign convention does not change
/// the cokernel or the kernel size.
struct PicardReport {
    Int modulus = 1; ///< n = |G|
    int class_count = 0;
    UnitGroupOfZn target_factor;             ///< (Z/n)^x; the target is c copies
    std::optional<Int> target_order;         ///< phi(n)^c when it fits int64
    Int image_generator_count = 0;           ///< c sign flips + |R^x|
    Int image_unit_count = 0;                ///< |R^x|
    FiniteAbelianPresentation cokernel;      ///< the Picard group
    Int kernel_size = 0;                     ///< #{(u, v) : u == v mod n}

    bool picard_trivial() const { return cokernel.trivial(); }
};

/// Throws BudgetExceeded (via unit_elements_of_image) when R is too large to
/// enumerate; callers report "not computed" in that case.
PicardReport picard(const MarksTable& t, const QuotientImage& q, const Budgets& budgets = {});

/// The kernel of the defining map is the unit group of the Burnside ring:
/// true iff kernel_size == |units|.
bool kernel_check(const PicardReport& p, const UnitsReport& u);

} // namespace burnside
