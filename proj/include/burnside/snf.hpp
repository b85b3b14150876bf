#pragma once

#include <optional>
#include <vector>

#include "burnside/intmat.hpp"

namespace burnside {

struct SmithResult {
    std::vector<Int> invariant_factors; ///< d1 | d2 | ..., nonnegative, zeros at the end
    int rank = 0;                       ///< number of nonzero factors
};

/// Smith normal form diagonal of an integer matrix, by elimination with
/// minimal-pivot reduction. For square nonsingular input the product of the
/// factors equals |det|.
SmithResult smith_normal_form(const IntMatrix& m);

/// Solves x^T M = v exactly over Z for square lower-triangular M with nonzero
/// diagonal. Returns std::nullopt when some back-substitution division is not
/// exact (v is outside the row span). Throws SingularMatrix on a zero
/// diagonal entry and DimensionMismatch on shape errors.
std::optional<IntVector> solve_lower_triangular(const IntMatrix& m, const IntVector& v);

/// Canonical lower-triangular row basis of the full-rank lattice spanned by
/// the rows of `a`: a square c x c matrix H with positive diagonal, zeros
/// above the diagonal, and below-pivot entries reduced into [0, pivot).
/// Throws SingularMatrix if the rows span a lattice of rank < c.
IntMatrix lower_triangular_basis(const IntMatrix& a);

} // namespace burnside
