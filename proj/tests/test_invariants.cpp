#include <doctest.h>

#include <numeric>
#include <set>

#include "burnside/catalog.hpp"
#include "burnside/certificate.hpp"
#include "burnside/picard.hpp"
#include "burnside/verify.hpp"

using namespace burnside;

namespace {

std::vector<Int> enumerate_image(const QuotientImage& q) {
    // every element of R, via the unit enumerator's sibling: walk all tuples
    std::vector<Int> flat;
    const int c = q.class_count();
    std::vector<Int> digits(static_cast<std::size_t>(c), 0);
    while (true) {
        IntVector v = IntVector::Zero(c);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j)
                v(j) = mod_floor(v(j) + digits[static_cast<std::size_t>(i)] * q.basis(i, j),
                                 q.modulus);
        for (int j = 0; j < c; ++j) flat.push_back(v(j));
        int d = 0;
        for (; d < c; ++d) {
            auto& digit = digits[static_cast<std::size_t>(d)];
            if (++digit < q.coset_ranges[static_cast<std::size_t>(d)]) break;
            digit = 0;
        }
        if (d == c) break;
    }
    return flat;
}

IntVector residues(std::initializer_list<Int> v) { return from_std_vector(std::vector<Int>(v)); }

} // namespace

TEST_CASE("quotient image on pinned groups") {
    {
        const MarksTable t = marks_table(make_cyclic(2));
        const QuotientImage q = quotient_image(t);
        REQUIRE(q.size.has_value());
        CHECK(*q.size == 2);
        CHECK(q.contains(residues({0, 0})));
        CHECK(q.contains(residues({1, 1})));
        CHECK_FALSE(q.contains(residues({0, 1})));
        CHECK_FALSE(q.contains(residues({1, 0})));
    }
    {
        const MarksTable t = marks_table(make_cyclic(5));
        const QuotientImage q = quotient_image(t);
        REQUIRE(q.size.has_value());
        CHECK(*q.size == 5);
        for (Int a = 0; a < 5; ++a) {
            CHECK(q.contains(residues({a, a})));
            if (a != 0) CHECK_FALSE(q.contains(residues({a, 0})));
        }
    }
    {
        const QuotientImage q = quotient_image(marks_table(PermGroup::generate(1, {})));
        REQUIRE(q.size.has_value());
        CHECK(*q.size == 1);
        CHECK(q.contains(residues({0})));
    }
}

TEST_CASE("quotient image spans the reduced marks rows, with the exact size") {
    for (const CatalogEntry& entry : build_catalog()) {
        const MarksTable t = marks_table(entry.group);
        const QuotientImage q = quotient_image(t);
        const int c = t.class_count();
        for (int i = 0; i < c; ++i) {
            IntVector row(c);
            for (int j = 0; j < c; ++j) row(j) = t.table(i, j);
            CHECK(q.contains(q.reduce(row)));
        }
        REQUIRE(q.size.has_value());
        Int diag = 1;
        for (int i = 0; i < c; ++i) diag = checked::mul(diag, t.table(i, i));
        Int pow = 1;
        for (int i = 0; i < c; ++i) pow = checked::mul(pow, t.group_order);
        CHECK(checked::mul(*q.size, diag) == pow);
    }
}

TEST_CASE("unit elements of the image subring") {
    {
        const QuotientImage q = quotient_image(marks_table(make_cyclic(2)));
        const auto units_of_r = unit_elements_of_image(q, 1000);
        REQUIRE(units_of_r.size() == 1);
        CHECK(units_of_r[0] == residues({1, 1}));
    }
    {
        const QuotientImage q = quotient_image(marks_table(make_cyclic(5)));
        const auto units_of_r = unit_elements_of_image(q, 1000);
        CHECK(units_of_r.size() == 4);
        for (const IntVector& v : units_of_r) CHECK(v(0) == v(1));
    }
    {
        const QuotientImage q = quotient_image(marks_table(PermGroup::generate(1, {})));
        const auto units_of_r = unit_elements_of_image(q, 1000);
        REQUIRE(units_of_r.size() == 1);
        CHECK(units_of_r[0] == residues({0}));
    }
    {
        const QuotientImage q = quotient_image(marks_table(make_symmetric(4)));
        CHECK_THROWS_AS(unit_elements_of_image(q, 1'000'000), BudgetExceeded);
    }
}

TEST_CASE("finite-ring unit criterion: inverses appear among powers, inside R") {
    for (const CatalogEntry& entry : build_catalog()) {
        const MarksTable t = marks_table(entry.group);
        const QuotientImage q = quotient_image(t);
        if (!q.size || *q.size > 10'000) continue;
        const Int n = t.group_order;
        const int c = t.class_count();
        IntVector identity(c);
        for (int j = 0; j < c; ++j) identity(j) = mod_floor(1, n);
        for (const IntVector& u : unit_elements_of_image(q, 10'000)) {
            IntVector power = u;
            IntVector previous = identity;
            int steps = 0;
            while (power != identity) {
                CHECK(q.contains(power)); // all powers stay in R
                previous = power;
                for (int j = 0; j < c; ++j) power(j) = mod_floor(power(j) * u(j), n);
                REQUIRE(++steps <= n); // element order divides exp((Z/n)^x) <= n
            }
            // the power before the identity is the inverse, and it lies in R
            CHECK(q.contains(previous));
            for (int j = 0; j < c; ++j) CHECK(mod_floor(previous(j) * u(j), n) == identity(j));
        }
    }
}

TEST_CASE("burnside ring units on pinned groups") {
    {
        const UnitsReport u = units(marks_table(make_cyclic(3)));
        CHECK(u.rank == 1);
        REQUIRE(u.count() == 2);
        CHECK(u.unit_vectors[0] == residues({1, 1}));
        CHECK(u.unit_vectors[1] == residues({-1, -1}));
    }
    {
        const UnitsReport u = units(marks_table(make_cyclic(2)));
        CHECK(u.rank == 2);
        CHECK(u.count() == 4);
    }
    {
        // the image condition works out to "value at [e] equals value at [C3]"
        const UnitsReport u = units(marks_table(make_symmetric(3)));
        CHECK(u.rank == 3);
        REQUIRE(u.count() == 8);
        std::set<std::vector<Int>> got;
        for (const IntVector& v : u.unit_vectors) got.insert(to_std_vector(v));
        std::set<std::vector<Int>> expected;
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<Int> v(4);
            for (int j = 0; j < 4; ++j) v[static_cast<std::size_t>(j)] = (mask >> j & 1) ? -1 : 1;
            if (v[0] == v[2]) expected.insert(v);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("unit group facts across the catalog") {
    for (const CatalogEntry& entry : build_catalog()) {
        const MarksTable t = marks_table(entry.group);
        const UnitsReport u = units(t);
        const int c = u.class_count;

        std::set<std::vector<Int>> member;
        for (const IntVector& v : u.unit_vectors) member.insert(to_std_vector(v));
        CHECK(member.count(std::vector<Int>(static_cast<std::size_t>(c), 1)) == 1);
        CHECK(member.count(std::vector<Int>(static_cast<std::size_t>(c), -1)) == 1);
        for (const IntVector& a : u.unit_vectors) {
            for (const IntVector& b : u.unit_vectors) {
                IntVector prod(c);
                for (int j = 0; j < c; ++j) prod(j) = a(j) * b(j);
                CHECK(member.count(to_std_vector(prod)) == 1);
            }
            IntVector square(c);
            for (int j = 0; j < c; ++j) square(j) = a(j) * a(j);
            CHECK(square == IntVector::Ones(c));
        }
        CHECK(u.count() == (Int{1} << u.rank));
        CHECK(static_cast<int>(u.generators.size()) == u.rank);

        if (entry.group.order() % 2 == 1) CHECK(u.rank == 1);
        if (is_abelian(entry.group)) CHECK(u.rank == 1 + index_two_subgroup_count(t));
    }
}

TEST_CASE("non-solvable groups have nontrivial units (opt-in scale)") {
    // alternating:5 sits above the default catalog but inside every budget
    const UnitsReport u = units(marks_table(make_alternating(5)));
    CHECK(u.class_count == 9);
    CHECK(u.rank >= 2);
}

TEST_CASE("unit search refuses lattices beyond the 2^c budget") {
    // (Z/2)^4 has 67 subgroup classes, well past the 2^24 search cap
    const MarksTable t = marks_table(parse_group_spec("product:2,2,2,2"));
    CHECK(t.class_count() == 67);
    CHECK_THROWS_AS(units(t), BudgetExceeded);
}

TEST_CASE("picard groups on pinned groups") {
    auto pic = [](const PermGroup& g) {
        const MarksTable t = marks_table(g);
        return picard(t, quotient_image(t), Budgets{});
    };
    CHECK(pic(PermGroup::generate(1, {})).cokernel.trivial());
    CHECK(pic(make_cyclic(2)).cokernel.trivial());
    CHECK(pic(make_cyclic(3)).cokernel.trivial());
    CHECK(pic(make_cyclic(5)).cokernel.invariant_factors == std::vector<Int>{2});

    const MarksTable s4 = marks_table(make_symmetric(4));
    CHECK_THROWS_AS(picard(s4, quotient_image(s4), Budgets{}), BudgetExceeded);
}

TEST_CASE("kernel of the Picard-defining map equals the unit group") {
    auto artifacts = [](const PermGroup& g) {
        const MarksTable t = marks_table(g);
        const QuotientImage q = quotient_image(t);
        return std::pair{picard(t, q, Budgets{}), units(t)};
    };
    {
        const auto [p, u] = artifacts(make_cyclic(2));
        CHECK(p.kernel_size == 4);
        CHECK(kernel_check(p, u));
    }
    {
        const auto [p, u] = artifacts(make_cyclic(3));
        CHECK(p.kernel_size == 2);
        CHECK(kernel_check(p, u));
    }
    {
        const auto [p, u] = artifacts(PermGroup::generate(1, {}));
        CHECK(p.kernel_size == 2);
        CHECK(kernel_check(p, u));
    }
    for (const CatalogEntry& entry : build_catalog()) {
        const MarksTable t = marks_table(entry.group);
        const QuotientImage q = quotient_image(t);
        if (!q.size || *q.size > Budgets{}.enum_cap) continue;
        CHECK(kernel_check(picard(t, q, Budgets{}), units(t)));
    }
}

TEST_CASE("pullback membership routes agree") {
    const MarksTable c2 = marks_table(make_cyclic(2));
    const QuotientImage q2 = quotient_image(c2);
    CHECK(is_in_image(GhostVector{residues({1, 1})}, c2));
    CHECK(q2.contains(q2.reduce(residues({1, 1}))));
    CHECK_FALSE(is_in_image(GhostVector{residues({0, 1})}, c2));
    CHECK_FALSE(q2.contains(q2.reduce(residues({0, 1}))));

    for (const CatalogEntry& entry : build_catalog()) {
        const MarksTable t = marks_table(entry.group);
        CHECK(pullback_check(t, quotient_image(t), 200));
    }
}

TEST_CASE("certificates") {
    {
        const MarksTable t = marks_table(PermGroup::generate(1, {}));
        const Certificate cert = certify(t, quotient_image(t));
        CHECK(cert.all_pass());
        CHECK(cert.conclusion == "Br(A(G)) = 0 certified modulo cited axioms");
        REQUIRE(cert.quotient_ring_order.has_value());
        CHECK(*cert.quotient_ring_order == 1);
    }
    {
        const MarksTable t = marks_table(make_cyclic(2));
        const Certificate cert = certify(t, quotient_image(t));
        CHECK(cert.all_pass());
        CHECK(*cert.quotient_ring_order == 2);
    }
    {
        const MarksTable t = marks_table(make_symmetric(3));
        const Certificate cert = certify(t, quotient_image(t));
        CHECK(cert.all_pass());
        CHECK(*cert.quotient_ring_order == 108); // 6^4 / (6*1*2*1)
    }
    for (const CatalogEntry& entry : build_catalog()) {
        const MarksTable t = marks_table(entry.group);
        const Certificate cert = certify(t, quotient_image(t));
        CHECK(cert.all_pass());
        CHECK(cert.checks.size() == 5);
        CHECK(!cert.conclusion.empty());
        CHECK(cert.cited_axioms.size() == 3);
    }
}

TEST_CASE("enumerate_image helper agrees with the declared size") {
    for (const char* spec : {"cyclic:4", "cyclic:6", "symmetric:3"}) {
        const MarksTable t = marks_table(parse_group_spec(spec));
        const QuotientImage q = quotient_image(t);
        REQUIRE(q.size.has_value());
        const int c = q.class_count();
        const auto flat = enumerate_image(q);
        CHECK(static_cast<Int>(flat.size()) == *q.size * c);
        std::set<std::vector<Int>> distinct;
        for (std::size_t off = 0; off < flat.size(); off += static_cast<std::size_t>(c))
            distinct.insert(std::vector<Int>(flat.begin() + static_cast<std::ptrdiff_t>(off),
                                             flat.begin() + static_cast<std::ptrdiff_t>(off) +
                                                 c));
        CHECK(static_cast<Int>(distinct.size()) == *q.size);
        for (const auto& v : distinct) CHECK(q.contains(from_std_vector(v)));
    }
}
