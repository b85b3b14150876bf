#pragma once

#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

PermGroup make_cyclic(int n, const Budgets& budgets = {});
PermGroup make_dihedral(int n, const Budgets& budgets = {});    // n >= 3, order 2n
PermGroup make_symmetric(int n, const Budgets& budgets = {});   // order n!
PermGroup make_alternating(int n, const Budgets& budgets = {}); // order n!/2
PermGroup make_quaternion8(const Budgets& budgets = {});        // order 8 on 8 points
PermGroup direct_product(const PermGroup& a, const PermGroup& b, const Budgets& budgets = {});

struct CatalogEntry {
    std::string name; ///< also a valid --group spec string
    PermGroup group;
};

/// The default catalog: cyclic 1..12, dihedral 3..6, symmetric 3 and 4,
/// alternating 4, quaternion8, C2xC2, C2xC4, C3xC3.
std::vector<CatalogEntry> build_catalog(const Budgets& budgets = {});

/// Parses "family:params" group specs: cyclic:N, dihedral:N, symmetric:N,
/// alternating:N, quaternion8, product:N1,N2,... (direct product of cyclic
/// groups), file:PATH. Throws MalformedInput on bad syntax.
PermGroup parse_group_spec(const std::string& spec, const Budgets& budgets = {});

/// Reads {"degree": d, "generators": [[images...], ...]} with 0-indexed image
/// arrays. An empty generator list denotes the trivial group. Throws
/// MalformedInput on unparseable or invalid content.
PermGroup load_group_file(const std::string& path, const Budgets& budgets = {});

} // namespace burnside
