#include "burnside/lattice.hpp"

#include <algorithm>
#include <set>

namespace burnside {

SubgroupLattice conjugacy_classes_of_subgroups(const PermGroup& g, const Budgets& budgets) {
    const std::vector<Subgroup> all = subgroups(g, budgets);

    std::set<Subgroup> unassigned(all.begin(), all.end());
    std::vector<std::vector<Subgroup>> orbits;
    while (!unassigned.empty()) {
        const Subgroup seed = *unassigned.begin();
        std::set<Subgroup> orbit;
        for (const Perm& e : g.elements()) orbit.insert(conjugate(seed, e));
        for (const Subgroup& m : orbit) unassigned.erase(m);
        orbits.emplace_back(orbit.begin(), orbit.end());
    }

    // std::set iteration gives each orbit sorted, so front() is canonically
    // least; orbits themselves sort by their representatives.
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    SubgroupLattice lat;
    lat.classes.reserve(orbits.size());
    for (const auto& orbit : orbits) {
        SubgroupClass cls;
        cls.representative = orbit.front();
        cls.order = cls.representative.order();
        cls.normalizer_order = normalizer(g, cls.representative).order();
        cls.class_size = static_cast<Int>(orbit.size());
        lat.classes.push_back(std::move(cls));
    }

    const int c = lat.class_count();
    lat.subconjugacy.assign(static_cast<std::size_t>(c),
                            std::vector<bool>(static_cast<std::size_t>(c), false));
    for (int i = 0; i < c; ++i) {
        const auto& orbit_i = orbits[static_cast<std::size_t>(i)];
        for (int j = 0; j < c; ++j) {
            const Subgroup& k = lat.classes[static_cast<std::size_t>(j)].representative;
            if (lat.classes[static_cast<std::size_t>(j)].order %
                    lat.classes[static_cast<std::size_t>(i)].order != 0)
                continue; // Lagrange rules it out
            bool sub = false;
            for (const Subgroup& m : orbit_i)
                if (k.contains_all(m)) {
                    sub = true;
                    break;
                }
            lat.subconjugacy[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sub;
        }
    }
    return lat;
}

} // namespace burnside
