#include "burnside/picard.hpp"

namespace burnside {

PicardReport picard(const MarksTable& t, const QuotientImage& q, const Budgets& budgets) {
    const int c = t.class_count();
    const Int n = t.group_order;

    PicardReport r;
    r.modulus = n;
    r.class_count = c;

    const std::vector<IntVector> image_units = unit_elements_of_image(q, budgets.enum_cap);
    r.image_unit_count = static_cast<Int>(image_units.size());

    r.target_factor = unit_group_of_zn(n, budgets);
    try {
        Int order = 1;
        for (int i = 0; i < c; ++i) order = checked::mul(order, r.target_factor.order());
        r.target_order = order;
    } catch (const OverflowError&) {
        r.target_order = std::nullopt;
    }

    // Generators of the image subgroup: the c single-coordinate sign flips
    // (they generate the units of the ghost ring exactly), then every unit of
    // R embedded in the target.
    std::vector<std::vector<Int>> gens;
    const Int minus_one = mod_floor(-1, n);
    const Int plus_one = mod_floor(1, n);
    for (int j = 0; j < c; ++j) {
        std::vector<Int> flip(static_cast<std::size_t>(c), plus_one);
        flip[static_cast<std::size_t>(j)] = minus_one;
        gens.push_back(std::move(flip));
    }
    for (const IntVector& v : image_units) gens.push_back(to_std_vector(v));
    r.image_generator_count = static_cast<Int>(gens.size());

    const std::vector<UnitGroupOfZn> target(static_cast<std::size_t>(c), r.target_factor);
    r.cokernel = subgroup_cokernel(target, gens);

    // kernel_size = #{(u, v) in {+-1}^c x R^x : u mod n == v}. Count per
    // coordinate how many signs reduce onto the given residue; for n <= 2 the
    // two signs coincide mod n and both match.
    Int kernel = 0;
    for (const IntVector& v : image_units) {
        Int ways = 1;
        for (Eigen::Index j = 0; j < v.size() && ways > 0; ++j) {
            Int w = 0;
            if (v(j) == plus_one) ++w;
            if (v(j) == minus_one) ++w;
            ways = checked::mul(ways, w);
        }
        kernel = checked::add(kernel, ways);
    }
    r.kernel_size = kernel;
    return r;
}

bool kernel_check(const PicardReport& p, const UnitsReport& u) {
    return p.kernel_size == u.count();
}

} // namespace burnside
