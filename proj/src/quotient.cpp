#include "burnside/quotient.hpp"

#include <numeric>

#include "burnside/snf.hpp"

namespace burnside {

IntVector QuotientImage::reduce(const IntVector& w) const {
    IntVector r(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) r(i) = mod_floor(w(i), modulus);
    return r;
}

bool QuotientImage::contains(const IntVector& residues) const {
    if (residues.size() != basis.rows())
        throw DimensionMismatch("residue vector length does not match the class count");
    return solve_lower_triangular(basis, residues).has_value();
}

QuotientImage quotient_image(const MarksTable& t) {
    const Eigen::Index c = t.table.rows();
    const Int n = t.group_order;

    QuotientImage q;
    q.modulus = n;

    // Stack the marks rows with n*I; the lower-triangular basis of that span
    // realizes "marks rows mod n" with the mod-n reduction built in.
    IntMatrix stacked(2 * c, c);
    stacked.topRows(c) = t.table;
    stacked.bottomRows(c) = IntMatrix::Identity(c, c) * n;
    q.basis = lower_triangular_basis(stacked);

    q.coset_ranges.resize(static_cast<std::size_t>(c));
    for (Eigen::Index i = 0; i < c; ++i) {
        const Int h = q.basis(i, i);
        if (n % h != 0)
            throw InternalError("basis pivot does not divide the modulus");
        q.coset_ranges[static_cast<std::size_t>(i)] = n / h;
    }
    try {
        Int size = 1;
        for (Int r : q.coset_ranges) size = checked::mul(size, r);
        q.size = size;
    } catch (const OverflowError&) {
        q.size = std::nullopt; // finite regardless; the exact count just overflows int64
    }
    return q;
}

std::vector<IntVector> unit_elements_of_image(const QuotientImage& q, Int budget) {
    if (!q.size || *q.size > budget)
        throw BudgetExceeded("image subring has " +
                             (q.size ? std::to_string(*q.size) : std::string("more than 2^63")) +
                             " elements; enumeration cap is " + std::to_string(budget));

    const Eigen::Index c = q.basis.rows();
    const Int n = q.modulus;
    std::vector<IntVector> units;

    // Odometer over the coset ranges; the running vector is updated
    // incrementally (add a basis row, or unwind a full cycle on carry).
    std::vector<Int> digits(static_cast<std::size_t>(c), 0);
    IntVector current = IntVector::Zero(c);
    while (true) {
        bool unit = true;
        for (Eigen::Index i = 0; i < c && unit; ++i)
            if (std::gcd(current(i), n) != 1) unit = false;
        if (unit) units.push_back(current);

        Eigen::Index d = 0;
        for (; d < c; ++d) {
            const std::size_t di = static_cast<std::size_t>(d);
            digits[di] += 1;
            if (digits[di] < q.coset_ranges[di]) {
                for (Eigen::Index j = 0; j < c; ++j)
                    current(j) = mod_floor(current(j) + q.basis(d, j), n);
                break;
            }
            digits[di] = 0;
            for (Eigen::Index j = 0; j < c; ++j)
                current(j) = mod_floor(
                    current(j) - (q.coset_ranges[di] - 1) * q.basis(d, j), n);
        }
        if (d == c) break;
    }
    return units;
}

} // namespace burnside
