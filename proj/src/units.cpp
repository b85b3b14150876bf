#include "burnside/units.hpp"

namespace burnside {

namespace {

std::uint32_t sign_mask(const IntVector& v) {
    std::uint32_t m = 0;
    for (Eigen::Index j = 0; j < v.size(); ++j)
        if (v(j) < 0) m |= (1u << j);
    return m;
}

} // namespace

UnitsReport units(const MarksTable& t) {
    const int c = t.class_count();
    if (c > kMaxUnitSearchClasses)
        throw BudgetExceeded("unit search needs 2^" + std::to_string(c) +
                             " membership tests; the cap is 2^" +
                             std::to_string(kMaxUnitSearchClasses));

    UnitsReport r;
    r.class_count = c;
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        IntVector v(c);
        for (int j = 0; j < c; ++j) v(j) = (mask >> j & 1u) ? -1 : 1;
        if (is_in_image(GhostVector{v}, t)) r.unit_vectors.push_back(std::move(v));
    }

    // The sign patterns form a GF(2) subspace (all-plus-ones is the identity,
    // pointwise product is xor); pick generators greedily, keeping one basis
    // mask per leading bit.
    std::uint32_t basis_by_bit[kMaxUnitSearchClasses] = {};
    int rank = 0;
    for (const IntVector& v : r.unit_vectors) {
        std::uint32_t m = sign_mask(v);
        for (int bit = c - 1; bit >= 0 && m != 0; --bit) {
            if (!(m >> bit & 1u)) continue;
            if (basis_by_bit[bit]) {
                m ^= basis_by_bit[bit];
            } else {
                basis_by_bit[bit] = m;
                r.generators.push_back(v);
                ++rank;
                m = 0;
            }
        }
    }
    r.rank = rank;
    if ((Int{1} << r.rank) != r.count())
        throw InternalError("unit set is not a GF(2) subspace");
    return r;
}

} // namespace burnside
