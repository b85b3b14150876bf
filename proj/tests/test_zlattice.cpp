#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "burnside/abelian.hpp"
#include "burnside/rng.hpp"
#include "burnside/snf.hpp"
#include "burnside/verify.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(rows.empty() ? 0 : rows[0].size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

} // namespace

TEST_CASE("smith normal form on pinned inputs") {
    {
        const SmithResult r = smith_normal_form(IntMatrix::Identity(2, 2));
        CHECK(r.invariant_factors == std::vector<Int>{1, 1});
        CHECK(r.rank == 2);
    }
    {
        const SmithResult r = smith_normal_form(from_rows({{2, 0}, {1, 1}}));
        CHECK(r.invariant_factors == std::vector<Int>{1, 2});
    }
    {
        const SmithResult r = smith_normal_form(from_rows({{6}}));
        CHECK(r.invariant_factors == std::vector<Int>{6});
    }
    {
        const SmithResult r = smith_normal_form(IntMatrix::Zero(3, 2));
        CHECK(r.rank == 0);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m(4, 4);
        for (Eigen::Index i = 0; i < 4; ++i)
            for (Eigen::Index j = 0; j < 4; ++j) m(i, j) = rng.range(-9, 9);
        const SmithResult r = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i) {
            const Int a = r.invariant_factors[i];
            const Int b = r.invariant_factors[i + 1];
            if (a != 0) CHECK(b % a == 0);
            if (a == 0) CHECK(b == 0);
        }
        const Int det = test_oracle::bareiss_det(m);
        if (det != 0) {
            Int prod = 1;
            for (Int d : r.invariant_factors) prod *= d;
            CHECK(prod == std::abs(det));
        } else {
            CHECK(r.rank < 4);
        }
    }
}

TEST_CASE("lower triangular solve") {
    const IntMatrix m = from_rows({{2, 0}, {1, 1}});
    {
        const auto x = solve_lower_triangular(m, from_std_vector({1, -1}));
        REQUIRE(x.has_value());
        CHECK(to_std_vector(*x) == std::vector<Int>{1, -1});
    }
    CHECK_FALSE(solve_lower_triangular(m, from_std_vector({0, 1})).has_value());
    {
        const auto x = solve_lower_triangular(m, from_std_vector({0, 0}));
        REQUIRE(x.has_value());
        CHECK(to_std_vector(*x) == std::vector<Int>{0, 0});
    }
    CHECK_THROWS_AS(solve_lower_triangular(from_rows({{0, 0}, {1, 1}}), from_std_vector({0, 0})),
                    SingularMatrix);
    CHECK_THROWS_AS(solve_lower_triangular(m, from_std_vector({1, 2, 3})), DimensionMismatch);

    // round trip: solve(M, x^T M) == x
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Index c = 5;
        IntMatrix t = IntMatrix::Zero(c, c);
        for (Eigen::Index i = 0; i < c; ++i) {
            t(i, i) = rng.range(1, 5) * (rng.range(0, 1) ? 1 : -1);
            for (Eigen::Index j = 0; j < i; ++j) t(i, j) = rng.range(-9, 9);
        }
        IntVector x(c);
        for (Eigen::Index i = 0; i < c; ++i) x(i) = rng.range(-50, 50);
        const IntVector v = t.transpose() * x;
        const auto back = solve_lower_triangular(t, v);
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
}

TEST_CASE("lower triangular basis") {
    // rows spanning 2Z x Z plus the relation rows of mod 4
    IntMatrix stacked = from_rows({{2, 0}, {1, 1}, {4, 0}, {0, 4}});
    const IntMatrix h = lower_triangular_basis(stacked);
    CHECK(h(0, 1) == 0);
    CHECK(h(0, 0) > 0);
    CHECK(h(1, 1) > 0);
    CHECK(h(0, 0) * h(1, 1) == 2); // index of the span in Z^2

    CHECK_THROWS_AS(lower_triangular_basis(from_rows({{1, 0}, {2, 0}})), SingularMatrix);
}

TEST_CASE("unit group of Z/n on pinned moduli") {
    {
        const UnitGroupOfZn u = unit_group_of_zn(2);
        CHECK(u.order() == 1);
        CHECK(u.presentation().invariant_factors.empty());
    }
    {
        const UnitGroupOfZn u = unit_group_of_zn(5);
        CHECK(u.presentation().invariant_factors == std::vector<Int>{4});
        REQUIRE(u.concrete_generators().size() == 1);
        CHECK(u.concrete_generators()[0] == 2);
        // powers of 2 exhaust the units mod 5
        std::set<Int> powers;
        Int p = 1;
        for (int i = 0; i < 4; ++i) {
            powers.insert(p);
            p = (p * 2) % 5;
        }
        CHECK(powers == std::set<Int>{1, 2, 3, 4});
    }
    {
        const UnitGroupOfZn u = unit_group_of_zn(8);
        CHECK(u.presentation().invariant_factors == std::vector<Int>{2, 2});
        CHECK(u.concrete_generators() == std::vector<Int>{7, 3});
    }
    {
        const UnitGroupOfZn u = unit_group_of_zn(1);
        CHECK(u.order() == 1);
        CHECK(u.dlog(0).empty());
    }
    {
        // CRT factors C4 x C6 must be recombined into the chain 2 | 12
        const UnitGroupOfZn u = unit_group_of_zn(35);
        CHECK(u.presentation().invariant_factors == std::vector<Int>{2, 12});
    }
    Budgets tight;
    tight.modulus_cap = 100;
    CHECK_THROWS_AS(unit_group_of_zn(101, tight), BudgetExceeded);
}

TEST_CASE("dlog is an isomorphism onto the presentation") {
    for (Int n = 2; n <= 100; ++n) {
        const UnitGroupOfZn u = unit_group_of_zn(n);
        CHECK(u.order() == euler_phi(n));
        const auto& factors = u.presentation().invariant_factors;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) CHECK(factors[i + 1] % factors[i] == 0);
        const std::vector<Int> dlog_of_one = u.dlog(1);
        CHECK(std::all_of(dlog_of_one.begin(), dlog_of_one.end(), [](Int e) { return e == 0; }));
        for (Int a : u.units())
            for (Int b : u.units()) {
                const auto da = u.dlog(a);
                const auto db = u.dlog(b);
                const auto dab = u.dlog((a * b) % n);
                for (std::size_t i = 0; i < factors.size(); ++i)
                    CHECK(dab[i] == (da[i] + db[i]) % factors[i]);
            }
        CHECK_THROWS_AS(u.dlog(0), NotAUnit);
    }
    // spot-check a couple of larger moduli on random pairs
    Rng rng(31);
    for (Int n : {Int{720}, Int{4096}, Int{9973}}) {
        const UnitGroupOfZn u = unit_group_of_zn(n);
        CHECK(u.order() == euler_phi(n));
        const auto& factors = u.presentation().invariant_factors;
        for (int trial = 0; trial < 40; ++trial) {
            const Int a = u.units()[static_cast<std::size_t>(
                rng.range(0, u.order() - 1))];
            const Int b = u.units()[static_cast<std::size_t>(
                rng.range(0, u.order() - 1))];
            const auto da = u.dlog(a);
            const auto db = u.dlog(b);
            const auto dab = u.dlog((a * b) % n);
            for (std::size_t i = 0; i < factors.size(); ++i)
                CHECK(dab[i] == (da[i] + db[i]) % factors[i]);
        }
    }
}

TEST_CASE("subgroup cokernel on pinned inputs") {
    {
        // generators cover the whole target
        const std::vector<UnitGroupOfZn> target{unit_group_of_zn(5)};
        const auto coker = subgroup_cokernel(target, {{2}});
        CHECK(coker.trivial());
    }
    {
        // ((Z/5)^x)^2 with the four listed generators leaves index 2
        const std::vector<UnitGroupOfZn> target(2, unit_group_of_zn(5));
        const auto coker = subgroup_cokernel(target, {{2, 2}, {1, 4}, {4, 1}, {4, 4}});
        CHECK(coker.invariant_factors == std::vector<Int>{2});

        // brute-force route: close the generators inside the 16-element group
        const auto oracle = cokernel_by_enumeration(5, 2, {{2, 2}, {1, 4}, {4, 1}, {4, 4}}, 1000);
        CHECK(oracle == std::vector<Int>{2});
    }
    {
        // empty generator list: the cokernel is the whole target
        const std::vector<UnitGroupOfZn> target{unit_group_of_zn(3)};
        const auto coker = subgroup_cokernel(target, {});
        CHECK(coker.invariant_factors == std::vector<Int>{2});
    }
    {
        const std::vector<UnitGroupOfZn> target{unit_group_of_zn(4)};
        CHECK_THROWS_AS(subgroup_cokernel(target, {{2}}), NotAUnit);
    }
}

TEST_CASE("enumeration oracle on hand-checked quotients") {
    // (Z/5)^x is cyclic of order 4; factoring out {1,4} leaves C2
    CHECK(cokernel_by_enumeration(5, 1, {{4}}, 100) == std::vector<Int>{2});
    // (Z/8)^x = C2 x C2 whole and after one generator
    CHECK(cokernel_by_enumeration(8, 1, {}, 100) == std::vector<Int>{2, 2});
    CHECK(cokernel_by_enumeration(8, 1, {{7}}, 100) == std::vector<Int>{2});
    CHECK(cokernel_by_enumeration(8, 1, {{7}, {3}}, 100).empty());
    // trivial target (n = 2) and the zero ring (n = 1)
    CHECK(cokernel_by_enumeration(2, 3, {}, 100).empty());
    CHECK(cokernel_by_enumeration(1, 1, {}, 100).empty());
    // ((Z/3)^x)^2 mod the diagonal leaves one C2
    CHECK(cokernel_by_enumeration(3, 2, {{2, 2}}, 100) == std::vector<Int>{2});
    CHECK_THROWS_AS(cokernel_by_enumeration(7, 8, {}, 1000), BudgetExceeded);

    // random agreement with the Smith-form route on identical-copy targets
    Rng rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        const Int n = std::vector<Int>{3, 4, 5, 8, 9, 12}[static_cast<std::size_t>(
            rng.range(0, 5))];
        const int copies = static_cast<int>(rng.range(1, 3));
        const UnitGroupOfZn u = unit_group_of_zn(n);
        std::vector<std::vector<Int>> gens;
        const Int gen_count = rng.range(0, 3);
        for (Int g = 0; g < gen_count; ++g) {
            std::vector<Int> vec;
            for (int i = 0; i < copies; ++i)
                vec.push_back(u.units()[static_cast<std::size_t>(rng.range(0, u.order() - 1))]);
            gens.push_back(std::move(vec));
        }
        const std::vector<UnitGroupOfZn> target(static_cast<std::size_t>(copies), u);
        CHECK(subgroup_cokernel(target, gens).invariant_factors ==
              cokernel_by_enumeration(n, copies, gens, 1'000'000));
    }
}

TEST_CASE("cokernel is stable under generator order and redundancy") {
    Rng rng(41);
    const std::vector<Int> moduli{8, 5, 12};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<UnitGroupOfZn> target;
        for (Int n : moduli) target.push_back(unit_group_of_zn(n));
        std::vector<std::vector<Int>> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<Int> vec;
            for (const UnitGroupOfZn& f : target)
                vec.push_back(f.units()[static_cast<std::size_t>(
                    rng.range(0, f.order() - 1))]);
            gens.push_back(std::move(vec));
        }
        const auto base = subgroup_cokernel(target, gens);

        std::vector<std::vector<Int>> shuffled = gens;
        std::reverse(shuffled.begin(), shuffled.end());
        // add a redundant product of the first two generators
        std::vector<Int> redundant;
        for (std::size_t i = 0; i < moduli.size(); ++i)
            redundant.push_back((gens[0][i] * gens[1][i]) % moduli[i]);
        shuffled.push_back(std::move(redundant));
        const auto again = subgroup_cokernel(target, shuffled);
        CHECK(base.invariant_factors == again.invariant_factors);

        // the enumeration oracle only covers identical-coordinate targets, so
        // cross-check via the direct product order identity instead:
        // |target| = |image| * |cokernel| and the kernel-free subgroup bound
        Int target_order = 1;
        for (const UnitGroupOfZn& f : target) target_order *= f.order();
        CHECK(target_order % base.order() == 0);
    }
}
