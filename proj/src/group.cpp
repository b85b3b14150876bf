#include "burnside/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace burnside {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

namespace {

std::uint64_t hash_elements(int degree, const std::vector<Perm>& sorted) {
    std::uint32_t d = static_cast<std::uint32_t>(degree);
    std::uint64_t h = fnv1a64(&d, sizeof d);
    for (const Perm& p : sorted)
        for (int x : p.images()) {
            std::uint32_t v = static_cast<std::uint32_t>(x);
            h = fnv1a64(&v, sizeof v, h);
        }
    return h;
}

/// Breadth-first closure under right multiplication by the seed set.
std::vector<Perm> close_under_product(int degree, const std::vector<Perm>& seed, Int cap,
                                      const char* what) {
    std::set<Perm> closed;
    std::deque<Perm> queue;
    const Perm id = Perm::identity(degree);
    closed.insert(id);
    queue.push_back(id);
    for (const Perm& s : seed) {
        if (s.degree() != degree) throw MalformedInput("generator degree mismatch");
        if (closed.insert(s).second) queue.push_back(s);
        if (static_cast<Int>(closed.size()) > cap)
            throw BudgetExceeded(std::string(what) + " closure exceeded the cap of " +
                                 std::to_string(cap) + " elements");
    }
    while (!queue.empty()) {
        Perm e = queue.front();
        queue.pop_front();
        for (const Perm& s : seed) {
            Perm p = e * s;
            if (closed.insert(p).second) {
                if (static_cast<Int>(closed.size()) > cap)
                    throw BudgetExceeded(std::string(what) + " closure exceeded the cap of " +
                                         std::to_string(cap) + " elements");
                queue.push_back(std::move(p));
            }
        }
    }
    return {closed.begin(), closed.end()}; // std::set iterates in sorted order
}

} // namespace

PermGroup PermGroup::generate(int degree, std::vector<Perm> generators, const Budgets& budgets) {
    if (degree < 1) throw MalformedInput("degree must be >= 1");
    PermGroup g;
    g.degree_ = degree;
    g.elements_ = close_under_product(degree, generators, budgets.element_cap, "group");
    g.generators_ = std::move(generators);
    g.hash_ = hash_elements(degree, g.elements_);
    return g;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

Subgroup Subgroup::closure_of(int degree, const std::vector<Perm>& seed, Int cap) {
    Subgroup h;
    h.elements_ = close_under_product(degree, seed, cap, "subgroup");
    return h;
}

Subgroup Subgroup::from_elements(std::vector<Perm> elements) {
    if (elements.empty()) throw MalformedInput("a subgroup needs at least the identity");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup h;
    h.elements_ = std::move(elements);
    const int d = h.degree();
    if (!h.contains(Perm::identity(d))) throw MalformedInput("element set lacks the identity");
    for (const Perm& a : h.elements_) {
        if (a.degree() != d) throw MalformedInput("mixed degrees in element set");
        if (!h.contains(a.inverse())) throw MalformedInput("element set not inverse-closed");
        for (const Perm& b : h.elements_)
            if (!h.contains(a * b)) throw MalformedInput("element set not closed under product");
    }
    return h;
}

Subgroup Subgroup::from_sorted_unchecked(std::vector<Perm> elements) {
    Subgroup h;
    h.elements_ = std::move(elements);
    return h;
}

Subgroup Subgroup::trivial(int degree) {
    Subgroup h;
    h.elements_ = {Perm::identity(degree)};
    return h;
}

bool Subgroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::contains_all(const Subgroup& other) const {
    return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(),
                         other.elements_.end());
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& rhs) const {
    if (auto c = order() <=> rhs.order(); c != 0) return c;
    return elements_ <=> rhs.elements_;
}

std::vector<Perm> Subgroup::small_generating_set() const {
    const int d = degree();
    if (order() == 1) return {};
    std::vector<Perm> gens;
    Subgroup span = Subgroup::trivial(d);
    for (const Perm& e : elements_) {
        if (span.contains(e)) continue;
        gens.push_back(e);
        std::vector<Perm> seed = gens;
        span = Subgroup::closure_of(d, seed, order());
        if (span.order() == order()) break;
    }
    return gens;
}

Subgroup conjugate(const Subgroup& h, const Perm& g) {
    const Perm gi = g.inverse();
    std::vector<Perm> elems;
    elems.reserve(static_cast<std::size_t>(h.order()));
    for (const Perm& e : h.elements()) elems.push_back(gi * e * g);
    std::sort(elems.begin(), elems.end());
    return Subgroup::from_sorted_unchecked(std::move(elems));
}

const std::vector<Perm>& elements(const PermGroup& g) { return g.elements(); }

std::vector<Subgroup> subgroups(const PermGroup& g, const Budgets& budgets) {
    if (g.order() > budgets.subgroup_cap)
        throw BudgetExceeded("subgroup enumeration refused: |G| = " + std::to_string(g.order()) +
                             " exceeds the cap of " + std::to_string(budgets.subgroup_cap));
    const int d = g.degree();
    std::set<Subgroup> found;
    found.insert(Subgroup::trivial(d));
    for (const Perm& e : g.elements())
        found.insert(Subgroup::closure_of(d, {e}, g.order()));

    // Iterated pairwise joins to a fixed point.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<const Subgroup*> current;
        current.reserve(found.size());
        for (const Subgroup& s : found) current.push_back(&s);
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                if (current[i]->contains_all(*current[j]) || current[j]->contains_all(*current[i]))
                    continue;
                std::vector<Perm> seed = current[i]->elements();
                seed.insert(seed.end(), current[j]->elements().begin(),
                            current[j]->elements().end());
                Subgroup join = Subgroup::closure_of(d, seed, g.order());
                if (found.insert(std::move(join)).second) {
                    grew = true;
                    if (static_cast<Int>(found.size()) > budgets.subgroup_cap)
                        throw BudgetExceeded("subgroup count exceeded the cap of " +
                                             std::to_string(budgets.subgroup_cap));
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

Subgroup normalizer(const PermGroup& g, const Subgroup& h) {
    for (const Perm& e : h.elements())
        if (!g.contains(e)) throw InvalidSubgroup("subgroup is not contained in the group");
    std::vector<Perm> norm;
    for (const Perm& e : g.elements())
        if (conjugate(h, e) == h) norm.push_back(e);
    return Subgroup::from_sorted_unchecked(std::move(norm));
}

} // namespace burnside
