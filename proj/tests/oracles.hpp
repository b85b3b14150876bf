// Test-only oracles: deliberately naive routes, independent of the library
// implementations they cross-check.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/lattice.hpp"

namespace burnside::test_oracle {

/// Closure by repeated all-pairs products to a fixed point (the library uses
/// a BFS over generator right-multiplication instead).
inline std::set<Perm> closure_by_pair_products(int degree, const std::vector<Perm>& gens) {
    std::set<Perm> elems(gens.begin(), gens.end());
    elems.insert(Perm::identity(degree));
    while (true) {
        std::set<Perm> next = elems;
        for (const Perm& a : elems)
            for (const Perm& b : elems) next.insert(a * b);
        if (next.size() == elems.size()) return elems;
        elems.swap(next);
    }
}

/// Exhaustive subset-closure subgroup enumeration; usable up to |G| ~ 16.
inline std::vector<std::set<Perm>> subgroups_by_subset_scan(const PermGroup& g) {
    const std::vector<Perm>& el = g.elements();
    const std::size_t n = el.size();
    std::vector<std::set<Perm>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::set<Perm> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) subset.insert(el[i]);
        if (!subset.count(Perm::identity(g.degree()))) continue;
        bool closed = true;
        for (const Perm& a : subset) {
            if (!subset.count(a.inverse())) {
                closed = false;
                break;
            }
            for (const Perm& b : subset)
                if (!subset.count(a * b)) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) out.push_back(std::move(subset));
    }
    return out;
}

/// Fixed-point counts from the coset action itself: cosets of K are explicit
/// element sets, H acts by left multiplication, fixed cosets are counted.
/// (The library never materializes cosets; it tests g^-1 H g <= K.)
inline Int marks_entry_by_coset_action(const PermGroup& g, const Subgroup& k, const Subgroup& h) {
    std::vector<std::set<Perm>> cosets;
    std::set<Perm> assigned;
    for (const Perm& e : g.elements()) {
        if (assigned.count(e)) continue;
        std::set<Perm> coset;
        for (const Perm& x : k.elements()) coset.insert(e * x);
        for (const Perm& p : coset) assigned.insert(p);
        cosets.push_back(std::move(coset));
    }
    Int fixed = 0;
    for (const std::set<Perm>& coset : cosets) {
        bool is_fixed = true;
        for (const Perm& x : h.elements()) {
            std::set<Perm> moved;
            for (const Perm& p : coset) moved.insert(x * p);
            if (moved != coset) {
                is_fixed = false;
                break;
            }
        }
        if (is_fixed) ++fixed;
    }
    return fixed;
}

/// Fraction-free (Bareiss) determinant over int64; small matrices only.
inline Int bareiss_det(IntMatrix m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index swap_row = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            m.row(k).swap(m.row(swap_row));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = (checked::sub(checked::mul(m(i, j), m(k, k)),
                                        checked::mul(m(i, k), m(k, j)))) /
                          prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

} // namespace burnside::test_oracle
