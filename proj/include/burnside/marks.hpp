#pragma once

#include <optional>

#include "burnside/intmat.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

/// Coefficient vector of an element of the Burnside ring over the transitive
/// basis [G/K_i], indexed in lattice order.
struct BurnsideElement {
    IntVector coeffs;
};

/// Integer-valued function on subgroup classes (an element of the ghost
/// ring), indexed in lattice order.
struct GhostVector {
    IntVector values;
};

/// The table of marks: table(i, j) = number of H_j-fixed points of G/K_i,
/// where K_i, H_j run over the class representatives in lattice order.
/// Lower triangular with diagonal [N_G(K_i) : K_i] and nonzero determinant.
struct MarksTable {
    SubgroupLattice lattice;
    IntMatrix table;
    Int group_order = 1;
    int degree = 1;
    std::uint64_t group_hash = 0;

    int class_count() const { return lattice.class_count(); }
};

/// Builds the table of marks by coset enumeration: a coset gK is fixed by H
/// exactly when g^-1 H g lies inside K.
MarksTable marks_table(const PermGroup& g, const Budgets& budgets = {});

/// Linear extension of the mark homomorphism: values = coeffs^T * table.
GhostVector ghost(const BurnsideElement& x, const MarksTable& t);

/// Exact preimage under the (injective) mark homomorphism, or nullopt when v
/// is not in the image.
std::optional<BurnsideElement> unghost(const GhostVector& v, const MarksTable& t);

bool is_in_image(const GhostVector& v, const MarksTable& t);

/// Product in the Burnside ring, computed through the ghost ring. Never fails
/// on valid tables; a failed solve means the table is wrong and raises
/// InternalError.
BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y, const MarksTable& t);

} // namespace burnside
