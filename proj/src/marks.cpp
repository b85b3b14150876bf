#include "burnside/marks.hpp"

#include "burnside/snf.hpp"

namespace burnside {

MarksTable marks_table(const PermGroup& g, const Budgets& budgets) {
    MarksTable t;
    t.lattice = conjugacy_classes_of_subgroups(g, budgets);
    t.group_order = g.order();
    t.degree = g.degree();
    t.group_hash = g.canonical_hash();

    const int c = t.lattice.class_count();
    t.table = IntMatrix::Zero(c, c);
    for (int i = 0; i < c; ++i) {
        const Subgroup& k = t.lattice.classes[static_cast<std::size_t>(i)].representative;
        for (int j = 0; j < c; ++j) {
            const Subgroup& h = t.lattice.classes[static_cast<std::size_t>(j)].representative;
            // #fixed cosets = #{g : g^-1 H g <= K} / |K|
            Int hits = 0;
            for (const Perm& e : g.elements()) {
                const Perm ei = e.inverse();
                bool inside = true;
                for (const Perm& x : h.elements())
                    if (!k.contains(ei * x * e)) {
                        inside = false;
                        break;
                    }
                if (inside) ++hits;
            }
            if (hits % k.order() != 0)
                throw InternalError("fixed-coset count not divisible by |K|");
            t.table(i, j) = hits / k.order();
        }
    }
    return t;
}

GhostVector ghost(const BurnsideElement& x, const MarksTable& t) {
    const Eigen::Index c = t.table.rows();
    if (x.coeffs.size() != c)
        throw DimensionMismatch("coefficient vector length does not match the class count");
    IntVector values = IntVector::Zero(c);
    for (Eigen::Index j = 0; j < c; ++j) {
        Int acc = 0;
        for (Eigen::Index i = 0; i < c; ++i)
            acc = checked::add(acc, checked::mul(x.coeffs(i), t.table(i, j)));
        values(j) = acc;
    }
    return {values};
}

std::optional<BurnsideElement> unghost(const GhostVector& v, const MarksTable& t) {
    auto x = solve_lower_triangular(t.table, v.values);
    if (!x) return std::nullopt;
    return BurnsideElement{*x};
}

bool is_in_image(const GhostVector& v, const MarksTable& t) {
    return unghost(v, t).has_value();
}

BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y, const MarksTable& t) {
    const GhostVector gx = ghost(x, t);
    const GhostVector gy = ghost(y, t);
    IntVector prod(gx.values.size());
    for (Eigen::Index j = 0; j < prod.size(); ++j)
        prod(j) = checked::mul(gx.values(j), gy.values(j));
    auto result = unghost(GhostVector{prod}, t);
    if (!result)
        throw InternalError("pointwise ghost product left the image; the marks table is wrong");
    return *result;
}

} // namespace burnside
