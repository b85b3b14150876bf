#pragma once

#include <string>
#include <vector>

#include "burnside/budgets.hpp"
#include "burnside/intmat.hpp"

namespace burnside {

/// A finite abelian group as Z/d1 x ... x Z/dk with d1 | d2 | ... | dk and
/// every di >= 2. The empty list is the trivial group.
struct FiniteAbelianPresentation {
    std::vector<Int> invariant_factors;
    std::vector<std::string> generator_labels; ///< empty when generators are abstract

    Int order() const {
        Int o = 1;
        for (Int d : invariant_factors) o = checked::mul(o, d);
        return o;
    }
    bool trivial() const { return invariant_factors.empty(); }
};

/// (Z/n)^x with concrete generators in invariant-factor form and a total
/// discrete-log table. Immutable after construction.
class UnitGroupOfZn {
public:
    Int modulus() const { return n_; }
    const FiniteAbelianPresentation& presentation() const { return presentation_; }
    const std::vector<Int>& concrete_generators() const { return generators_; }
    Int order() const { return static_cast<Int>(units_.size()); } // = phi(n)
    const std::vector<Int>& units() const { return units_; }      // sorted residues

    bool is_unit(Int residue) const;

    /// Exponent vector of a unit residue with respect to the concrete
    /// generators; throws NotAUnit otherwise. dlog(1) = 0 and
    /// dlog(u*v) = dlog(u) + dlog(v) componentwise mod the factors.
    std::vector<Int> dlog(Int residue) const;

private:
    friend UnitGroupOfZn unit_group_of_zn(Int n, const Budgets& budgets);

    Int n_ = 1;
    FiniteAbelianPresentation presentation_;
    std::vector<Int> generators_;
    std::vector<Int> units_;
    std::vector<Int> dlog_index_; ///< residue -> index into dlog_table_, -1 if not a unit
    std::vector<std::vector<Int>> dlog_table_;
};

/// Structure of (Z/n)^x via CRT over the prime powers of n, recombined into
/// invariant-factor form. Brute-force dlog table (modulus is desk scale).
/// Throws BudgetExceeded for n above budgets.modulus_cap.
UnitGroupOfZn unit_group_of_zn(Int n, const Budgets& budgets = {});

/// Cokernel of the subgroup generated by `image_generators` inside the
/// product of the given unit groups (one coordinate per factor). Each
/// generator maps through dlog to an exponent vector; the invariant factors
/// of the quotient come from the Smith form of the stacked relation matrix,
/// with factors equal to 1 dropped. Throws NotAUnit if a generator
/// coordinate is not coprime to its modulus.
FiniteAbelianPresentation subgroup_cokernel(const std::vector<UnitGroupOfZn>& target,
                                            const std::vector<std::vector<Int>>& image_generators);

/// n = p1^k1 * ... listed in ascending prime order; n must be >= 1.
std::vector<std::pair<Int, int>> factorize(Int n);

Int euler_phi(Int n);

} // namespace burnside
