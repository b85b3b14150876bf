#pragma once

#include <cstdint>

namespace burnside {

/// Safety caps for the enumeration-heavy operations. All configurable; the
/// defaults cover the built-in catalog with a wide margin.
struct Budgets {
    std::int64_t element_cap = 20160;     ///< max group order during closure
    std::int64_t subgroup_cap = 2000;     ///< max group order / intermediate subgroup count
    std::int64_t enum_cap = 1'000'000;    ///< max size of an enumerated finite ring or group
    std::int64_t modulus_cap = 1'000'000; ///< max modulus for unit_group_of_zn
};

/// Exhaustive unit search runs over 2^c sign vectors; c above this is refused.
inline constexpr int kMaxUnitSearchClasses = 24;

} // namespace burnside
