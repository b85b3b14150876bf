#include "burnside/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "burnside/snf.hpp"

namespace burnside {

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 1) throw MalformedInput("factorize needs n >= 1");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int euler_phi(Int n) {
    Int phi = 1;
    for (auto [p, k] : factorize(n)) {
        Int pk = 1;
        for (int i = 1; i < k; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return phi;
}

namespace {

Int pow_mod(Int base, Int exp, Int mod) {
    if (mod == 1) return 0;
    Int r = 1;
    base = mod_floor(base, mod);
    while (exp > 0) {
        if (exp & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return r;
}

Int order_mod(Int g, Int mod, Int group_order) {
    // The order divides group_order; peel prime factors off the exponent.
    Int ord = group_order;
    for (auto [p, k] : factorize(group_order)) {
        for (int i = 0; i < k; ++i) {
            if (pow_mod(g, ord / p, mod) == 1)
                ord /= p;
            else
                break;
        }
    }
    return ord;
}

Int primitive_root_of_prime_power(Int p, int k) {
    Int pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    const Int phi = pk / p * (p - 1);
    for (Int g = 2; g < pk; ++g) {
        if (std::gcd(g, pk) != 1) continue;
        if (order_mod(g, pk, phi) == phi) return g;
    }
    throw InternalError("no primitive root found mod " + std::to_string(pk));
}

/// CRT lift: residue r mod m in one coordinate, 1 elsewhere, combined mod n.
Int crt_lift(Int r, Int m, Int n) {
    const Int rest = n / m;
    // x = r (mod m), x = 1 (mod rest)
    for (Int x = 0; x < n; ++x)
        if (x % m == mod_floor(r, m) && (rest == 1 || x % rest == 1)) return x;
    throw InternalError("CRT lift failed");
}

struct CyclicComponent {
    Int order;     ///< a prime power
    Int generator; ///< residue mod n of exactly this order
};

/// Cyclic prime-power components of (Z/n)^x with concrete generators mod n.
std::vector<CyclicComponent> prime_power_components(Int n) {
    std::vector<CyclicComponent> parts;
    auto add_split = [&](Int order, Int gen) {
        // Split a cyclic factor of composite order into prime-power pieces.
        for (auto [q, e] : factorize(order)) {
            Int qe = 1;
            for (int i = 0; i < e; ++i) qe *= q;
            parts.push_back({qe, pow_mod(gen, order / qe, n)});
        }
    };
    for (auto [p, k] : factorize(n)) {
        Int pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (p == 2) {
            if (k == 2) add_split(2, crt_lift(3, 4, n));
            if (k >= 3) {
                add_split(2, crt_lift(pk - 1, pk, n));
                add_split(pk / 4, crt_lift(3, pk, n));
            }
            // k == 1: (Z/2)^x is trivial
        } else {
            const Int g = primitive_root_of_prime_power(p, k);
            add_split(pk / p * (p - 1), crt_lift(g, pk, n));
        }
    }
    return parts;
}

} // namespace

UnitGroupOfZn unit_group_of_zn(Int n, const Budgets& budgets) {
    if (n < 1) throw MalformedInput("unit_group_of_zn needs n >= 1");
    if (n > budgets.modulus_cap)
        throw BudgetExceeded("modulus " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(budgets.modulus_cap));

    UnitGroupOfZn u;
    u.n_ = n;
    u.dlog_index_.assign(static_cast<std::size_t>(n), -1);

    if (n == 1) {
        // The zero ring: its one element is the unit.
        u.units_ = {0};
        u.dlog_index_[0] = 0;
        u.dlog_table_ = {{}};
        return u;
    }

    // Recombine the prime-power components into invariant-factor form: bucket
    // by prime, sort each bucket ascending, and align the buckets at the top
    // of the chain (a bucket of length L feeds the last L invariant factors).
    std::map<Int, std::vector<CyclicComponent>> buckets;
    for (const CyclicComponent& comp : prime_power_components(n))
        buckets[factorize(comp.order)[0].first].push_back(comp);
    std::size_t layers = 0;
    for (auto& [q, bucket] : buckets) {
        std::stable_sort(bucket.begin(), bucket.end(),
                         [](const CyclicComponent& a, const CyclicComponent& b) {
                             return a.order < b.order;
                         });
        layers = std::max(layers, bucket.size());
    }
    for (std::size_t t = 0; t < layers; ++t) {
        Int d = 1, g = 1;
        for (const auto& [q, bucket] : buckets) {
            const std::size_t skip = layers - bucket.size();
            if (t < skip) continue;
            d = checked::mul(d, bucket[t - skip].order);
            g = (g * bucket[t - skip].generator) % n;
        }
        u.presentation_.invariant_factors.push_back(d);
        u.generators_.push_back(g);
    }
    for (Int g : u.generators_)
        u.presentation_.generator_labels.push_back(std::to_string(g) + " (mod " + std::to_string(n) + ")");

    // Brute-force dlog table over the whole exponent box.
    const std::size_t k = u.presentation_.invariant_factors.size();
    std::vector<Int> exponents(k, 0);
    Int residue = 1;
    std::vector<Int> gen_inverse_step(k); // g_i^(d_i - 1), used when a digit wraps
    for (std::size_t i = 0; i < k; ++i)
        gen_inverse_step[i] =
            pow_mod(u.generators_[i], u.presentation_.invariant_factors[i] - 1, n);
    while (true) {
        if (u.dlog_index_[static_cast<std::size_t>(residue)] != -1)
            throw InternalError("unit group generators are not independent mod " +
                                std::to_string(n));
        u.dlog_index_[static_cast<std::size_t>(residue)] = static_cast<Int>(u.units_.size());
        u.units_.push_back(residue);
        u.dlog_table_.push_back(exponents);

        std::size_t i = 0;
        for (; i < k; ++i) {
            exponents[i] += 1;
            residue = (residue * u.generators_[i]) % n;
            if (exponents[i] < u.presentation_.invariant_factors[i]) break;
            // Digit wraps: g_i^(d_i) == 1, so multiplying by g_i^(d_i - 1)
            // returns the residue to the exponent-zero state for this digit.
            exponents[i] = 0;
            residue = (residue * gen_inverse_step[i]) % n;
        }
        if (i == k) break;
    }

    // Sort the unit list and re-point the dlog table at the sorted order.
    std::sort(u.units_.begin(), u.units_.end());
    {
        std::vector<Int> new_index(static_cast<std::size_t>(n), -1);
        std::vector<std::vector<Int>> new_table;
        new_table.reserve(u.units_.size());
        for (std::size_t s = 0; s < u.units_.size(); ++s) {
            const Int r = u.units_[s];
            new_index[static_cast<std::size_t>(r)] = static_cast<Int>(s);
            new_table.push_back(std::move(u.dlog_table_[static_cast<std::size_t>(
                u.dlog_index_[static_cast<std::size_t>(r)])]));
        }
        u.dlog_index_ = std::move(new_index);
        u.dlog_table_ = std::move(new_table);
    }

    if (static_cast<Int>(u.units_.size()) != euler_phi(n))
        throw InternalError("unit count disagrees with phi(" + std::to_string(n) + ")");
    return u;
}

bool UnitGroupOfZn::is_unit(Int residue) const {
    if (n_ == 1) return true;
    return dlog_index_[static_cast<std::size_t>(mod_floor(residue, n_))] != -1;
}

std::vector<Int> UnitGroupOfZn::dlog(Int residue) const {
    if (n_ == 1) return {};
    const Int r = mod_floor(residue, n_);
    const Int idx = dlog_index_[static_cast<std::size_t>(r)];
    if (idx == -1)
        throw NotAUnit(std::to_string(r) + " is not a unit mod " + std::to_string(n_));
    return dlog_table_[static_cast<std::size_t>(idx)];
}

FiniteAbelianPresentation subgroup_cokernel(const std::vector<UnitGroupOfZn>& target,
                                            const std::vector<std::vector<Int>>& image_generators) {
    // Column layout: the cyclic factors of every coordinate, concatenated.
    Eigen::Index total = 0;
    for (const UnitGroupOfZn& f : target)
        total += static_cast<Eigen::Index>(f.presentation().invariant_factors.size());

    const Eigen::Index rows = total + static_cast<Eigen::Index>(image_generators.size());
    IntMatrix rel = IntMatrix::Zero(rows, total);

    Eigen::Index col = 0;
    for (const UnitGroupOfZn& f : target)
        for (Int d : f.presentation().invariant_factors) {
            rel(col, col) = d;
            ++col;
        }

    for (std::size_t g = 0; g < image_generators.size(); ++g) {
        const auto& vec = image_generators[g];
        if (vec.size() != target.size())
            throw DimensionMismatch("generator arity does not match the target product");
        Eigen::Index offset = 0;
        for (std::size_t coord = 0; coord < target.size(); ++coord) {
            const std::vector<Int> e = target[coord].dlog(vec[coord]);
            for (std::size_t i = 0; i < e.size(); ++i)
                rel(total + static_cast<Eigen::Index>(g), offset + static_cast<Eigen::Index>(i)) =
                    e[i];
            offset += static_cast<Eigen::Index>(e.size());
        }
    }

    const SmithResult snf = smith_normal_form(rel);
    FiniteAbelianPresentation coker;
    for (Int d : snf.invariant_factors) {
        if (d == 0)
            throw InternalError("cokernel relations were not full rank");
        if (d > 1) coker.invariant_factors.push_back(d);
    }
    return coker;
}

} // namespace burnside
