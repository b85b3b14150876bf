#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "burnside/budgets.hpp"
#include "burnside/intmat.hpp"
#include "burnside/perm.hpp"

namespace burnside {

/// A finite permutation group, fully enumerated at construction. Immutable
/// afterwards; safe to share across threads.
class PermGroup {
public:
    /// Closes the generators under composition. An empty generator list gives
    /// the trivial group. Throws BudgetExceeded past budgets.element_cap.
    static PermGroup generate(int degree, std::vector<Perm> generators,
                              const Budgets& budgets = {});

    int degree() const { return degree_; }
    Int order() const { return static_cast<Int>(elements_.size()); }
    const std::vector<Perm>& generators() const { return generators_; }

    /// All elements, canonically sorted (lexicographic on image arrays).
    const std::vector<Perm>& elements() const { return elements_; }

    bool contains(const Perm& p) const;

    /// FNV-1a over the sorted element list; the cache key and report id.
    std::uint64_t canonical_hash() const { return hash_; }

private:
    PermGroup() = default;

    int degree_ = 1;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    std::uint64_t hash_ = 0;
};

/// A subgroup as a sorted element list. Construction validates nothing; use
/// Subgroup::closure_of or Subgroup::from_elements.
class Subgroup {
public:
    /// Closure of `seed` inside the symmetric group of the given degree,
    /// capped at `cap` elements.
    static Subgroup closure_of(int degree, const std::vector<Perm>& seed, Int cap);

    /// Validates the subgroup axioms (identity, closure, inverses).
    static Subgroup from_elements(std::vector<Perm> elements);

    /// Trusted: `elements` already sorted and closed.
    static Subgroup from_sorted_unchecked(std::vector<Perm> elements);

    static Subgroup trivial(int degree);

    int degree() const { return elements_.empty() ? 0 : elements_[0].degree(); }
    Int order() const { return static_cast<Int>(elements_.size()); }
    const std::vector<Perm>& elements() const { return elements_; }
    bool contains(const Perm& p) const;
    bool contains_all(const Subgroup& other) const;

    /// Canonical ordering: by order, then element-list lexicographic.
    std::strong_ordering operator<=>(const Subgroup& rhs) const;
    bool operator==(const Subgroup& rhs) const { return elements_ == rhs.elements_; }

    /// A small generating set (greedy), used by reports.
    std::vector<Perm> small_generating_set() const;

private:
    std::vector<Perm> elements_; // sorted
};

/// g^-1 H g as a Subgroup.
Subgroup conjugate(const Subgroup& h, const Perm& g);

/// All elements of G, canonically sorted (the PermGroup's own list).
const std::vector<Perm>& elements(const PermGroup& g);

/// Every subgroup of G, deduplicated, sorted canonically. Seeds with the
/// cyclic subgroups, then closes under pairwise joins until stable.
/// Throws BudgetExceeded if |G| or the intermediate subgroup count exceeds
/// budgets.subgroup_cap.
std::vector<Subgroup> subgroups(const PermGroup& g, const Budgets& budgets = {});

/// N_G(H). Throws InvalidSubgroup if H is not contained in G.
Subgroup normalizer(const PermGroup& g, const Subgroup& h);

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 0xCBF29CE484222325ULL);

} // namespace burnside
