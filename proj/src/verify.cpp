#include "burnside/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "burnside/rng.hpp"
#include "burnside/snf.hpp"

namespace burnside {

GroupArtifacts compute_artifacts(const std::string& name, PermGroup group, const Budgets& budgets,
                                 const MarksCache& cache) {
    MarksTable marks = marks_table_cached(group, budgets, cache);
    QuotientImage quotient = quotient_image(marks);
    UnitsReport unit_report = units(marks);
    std::optional<PicardReport> pic;
    std::string skip_reason;
    try {
        pic = picard(marks, quotient, budgets);
    } catch (const BudgetExceeded& e) {
        skip_reason = e.what();
    }
    Certificate cert = certify(marks, quotient);
    return GroupArtifacts{name,
                          std::move(group),
                          std::move(marks),
                          std::move(quotient),
                          std::move(unit_report),
                          std::move(pic),
                          std::move(skip_reason),
                          std::move(cert)};
}

std::vector<GroupArtifacts> compute_catalog_artifacts(std::vector<CatalogEntry> entries,
                                                      const Budgets& budgets,
                                                      const MarksCache& cache, int parallel) {
    std::vector<std::optional<GroupArtifacts>> slots(entries.size());
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) break;
            try {
                slots[i] = compute_artifacts(entries[i].name, std::move(entries[i].group),
                                             budgets, cache);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    const int threads = std::max(1, parallel);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<GroupArtifacts> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

bool is_abelian(const PermGroup& g) {
    for (const Perm& a : g.generators())
        for (const Perm& b : g.generators())
            if (!(a * b == b * a)) return false;
    return true;
}

Int index_two_subgroup_count(const MarksTable& t) {
    Int count = 0;
    for (const SubgroupClass& cls : t.lattice.classes)
        if (cls.order * 2 == t.group_order) count += cls.class_size;
    return count;
}

// ---------------------------------------------------------------------------
// Enumeration oracle
// ---------------------------------------------------------------------------

namespace {

/// The product group ((Z/n)^x)^copies with elements encoded as mixed-radix
/// indices over the unit list of Z/n.
struct EnumeratedTarget {
    Int n = 1;
    int copies = 0;
    std::vector<Int> unit_list;     // sorted unit residues of Z/n
    std::vector<Int> unit_position; // residue -> position, -1 otherwise
    std::uint64_t size = 1;         // |unit_list|^copies

    std::uint64_t encode(const std::vector<Int>& residues) const {
        std::uint64_t idx = 0;
        for (int i = copies - 1; i >= 0; --i) {
            const Int pos = unit_position[static_cast<std::size_t>(residues[static_cast<std::size_t>(i)])];
            if (pos < 0) throw NotAUnit("oracle generator coordinate is not a unit");
            idx = idx * unit_list.size() + static_cast<std::uint64_t>(pos);
        }
        return idx;
    }

    std::vector<Int> decode(std::uint64_t idx) const {
        std::vector<Int> residues(static_cast<std::size_t>(copies));
        for (int i = 0; i < copies; ++i) {
            residues[static_cast<std::size_t>(i)] = unit_list[idx % unit_list.size()];
            idx /= unit_list.size();
        }
        return residues;
    }

    std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t out = 0;
        std::uint64_t scale = 1;
        for (int i = 0; i < copies; ++i) {
            const Int ra = unit_list[a % unit_list.size()];
            const Int rb = unit_list[b % unit_list.size()];
            a /= unit_list.size();
            b /= unit_list.size();
            const Int pos = unit_position[static_cast<std::size_t>((ra * rb) % n)];
            out += scale * static_cast<std::uint64_t>(pos);
            scale *= unit_list.size();
        }
        return out;
    }
};

EnumeratedTarget build_target(Int n, int copies, Int cap) {
    EnumeratedTarget t;
    t.n = n;
    t.copies = copies;
    if (n == 1) {
        t.unit_list = {0};
        t.unit_position.assign(1, 0);
    } else {
        t.unit_position.assign(static_cast<std::size_t>(n), -1);
        for (Int r = 0; r < n; ++r)
            if (std::gcd(r, n) == 1) {
                t.unit_position[static_cast<std::size_t>(r)] = static_cast<Int>(t.unit_list.size());
                t.unit_list.push_back(r);
            }
    }
    t.size = 1;
    for (int i = 0; i < copies; ++i) {
        t.size *= t.unit_list.size();
        if (t.size > static_cast<std::uint64_t>(cap))
            throw BudgetExceeded("oracle target exceeds " + std::to_string(cap) + " elements");
    }
    return t;
}

/// Subgroup generated inside an abelian target: extend element by element,
/// each extension adding whole cosets S * g^k.
std::vector<std::uint64_t> generated_subgroup(const EnumeratedTarget& t,
                                              const std::vector<std::uint64_t>& gens) {
    std::vector<char> member(t.size, 0);
    std::vector<std::uint64_t> elems;
    const std::uint64_t id = t.encode(std::vector<Int>(static_cast<std::size_t>(t.copies),
                                                       t.n == 1 ? 0 : 1));
    member[id] = 1;
    elems.push_back(id);
    for (std::uint64_t g : gens) {
        if (member[g]) continue;
        // Find the minimal k > 0 with g^k already present.
        std::vector<std::uint64_t> powers;
        std::uint64_t p = g;
        while (!member[p]) {
            powers.push_back(p);
            p = t.multiply(p, g);
        }
        const std::size_t base = elems.size();
        for (std::uint64_t q : powers)
            for (std::size_t s = 0; s < base; ++s) {
                const std::uint64_t e = t.multiply(elems[s], q);
                if (!member[e]) {
                    member[e] = 1;
                    elems.push_back(e);
                }
            }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<Int> invariant_factors_from_orders(const EnumeratedTarget& t,
                                               const std::vector<std::uint64_t>& reps,
                                               const std::vector<std::uint64_t>& rep_of,
                                               std::uint64_t identity_rep) {
    const std::uint64_t q = reps.size();
    auto quo_mul = [&](std::uint64_t a, std::uint64_t b) { return rep_of[t.multiply(a, b)]; };
    auto quo_pow = [&](std::uint64_t x, Int e) {
        std::uint64_t r = identity_rep;
        std::uint64_t base = x;
        while (e > 0) {
            if (e & 1) r = quo_mul(r, base);
            base = quo_mul(base, base);
            e >>= 1;
        }
        return r;
    };

    // For each prime p | q, the partition of the p-part is recovered from
    // N_k = #{x : x^(p^k) = 1} via its conjugate.
    std::vector<std::vector<int>> p_partitions; // exponents, descending
    std::vector<Int> primes;
    for (auto [p, a] : factorize(static_cast<Int>(q))) {
        std::vector<std::uint64_t> counts; // N_0..N_a
        counts.push_back(1);
        for (int k = 1; k <= a; ++k) {
            Int pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            std::uint64_t n_k = 0;
            for (std::uint64_t x : reps)
                if (quo_pow(x, pk) == identity_rep) ++n_k;
            counts.push_back(n_k);
        }
        std::vector<int> conj; // conj[k-1] = #cyclic components of order >= p^k
        for (int k = 1; k <= a; ++k) {
            const std::uint64_t ratio = counts[static_cast<std::size_t>(k)] /
                                        counts[static_cast<std::size_t>(k - 1)];
            int log = 0;
            std::uint64_t v = ratio;
            while (v > 1) {
                v /= static_cast<std::uint64_t>(p);
                ++log;
            }
            conj.push_back(log);
        }
        std::vector<int> partition; // component exponents, descending
        const int max_parts = conj.empty() ? 0 : conj[0];
        for (int slot = 0; slot < max_parts; ++slot) {
            int e = 0;
            for (int k = 0; k < static_cast<int>(conj.size()); ++k)
                if (conj[static_cast<std::size_t>(k)] > slot) e = k + 1;
            partition.push_back(e);
        }
        p_partitions.push_back(std::move(partition));
        primes.push_back(p);
    }

    std::size_t layers = 0;
    for (const auto& part : p_partitions) layers = std::max(layers, part.size());
    std::vector<Int> factors_desc;
    for (std::size_t t2 = 0; t2 < layers; ++t2) {
        Int d = 1;
        for (std::size_t pi = 0; pi < primes.size(); ++pi)
            if (t2 < p_partitions[pi].size()) {
                Int pe = 1;
                for (int i = 0; i < p_partitions[pi][t2]; ++i) pe *= primes[pi];
                d = checked::mul(d, pe);
            }
        factors_desc.push_back(d);
    }
    std::vector<Int> out(factors_desc.rbegin(), factors_desc.rend());

    Int check = 1;
    for (Int d : out) check = checked::mul(check, d);
    if (static_cast<std::uint64_t>(check) != q)
        throw InternalError("oracle invariant factors do not multiply to the quotient order");
    return out;
}

} // namespace

std::vector<Int> cokernel_by_enumeration(Int n, int copies,
                                         const std::vector<std::vector<Int>>& generators,
                                         Int cap) {
    const EnumeratedTarget t = build_target(n, copies, cap);

    std::vector<std::uint64_t> gen_idx;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != copies)
            throw DimensionMismatch("oracle generator arity mismatch");
        std::vector<Int> residues(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            residues[i] = mod_floor(g[i], t.n);
        gen_idx.push_back(t.encode(residues));
    }
    const std::vector<std::uint64_t> sub = generated_subgroup(t, gen_idx);

    // Coset representatives for the quotient.
    std::vector<std::uint64_t> rep_of(t.size, 0);
    std::vector<char> visited(t.size, 0);
    std::vector<std::uint64_t> reps;
    for (std::uint64_t x = 0; x < t.size; ++x) {
        if (visited[x]) continue;
        reps.push_back(x);
        for (std::uint64_t s : sub) {
            const std::uint64_t y = t.multiply(x, s);
            visited[y] = 1;
            rep_of[y] = x;
        }
    }
    const std::uint64_t identity_rep =
        rep_of[t.encode(std::vector<Int>(static_cast<std::size_t>(copies), t.n == 1 ? 0 : 1))];

    return invariant_factors_from_orders(t, reps, rep_of, identity_rep);
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kAcceptanceSeed = 0xACCE97A4CEULL;

std::string all_groups_note(std::size_t n) {
    return " (" + std::to_string(n) + " groups)";
}

CriterionResult ghost_injectivity(const std::vector<GroupArtifacts>& groups) {
    for (const GroupArtifacts& g : groups) {
        const IntMatrix& m = g.marks.table;
        const int c = g.marks.class_count();
        Int det = 1;
        for (int i = 0; i < c; ++i) det = checked::mul(det, m(i, i));
        if (det == 0)
            return {1, "ghost injectivity", false, g.name + ": zero diagonal mark"};
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j)
                if (m(i, j) != 0)
                    return {1, "ghost injectivity", false, g.name + ": marks not triangular"};
        Rng rng(kAcceptanceSeed ^ g.marks.group_hash);
        for (int trial = 0; trial < 100; ++trial) {
            IntVector coeffs(c);
            for (int i = 0; i < c; ++i) coeffs(i) = rng.range(-1000, 1000);
            const BurnsideElement x{coeffs};
            auto back = unghost(ghost(x, g.marks), g.marks);
            if (!back || !(back->coeffs == coeffs))
                return {1, "ghost injectivity", false, g.name + ": unghost(ghost(x)) != x"};
        }
    }
    return {1, "ghost injectivity", true,
            "det != 0, marks triangular, unghost(ghost(x)) = x on 100 random elements" +
                all_groups_note(groups.size())};
}

CriterionResult containment(const std::vector<GroupArtifacts>& groups) {
    for (const GroupArtifacts& g : groups) {
        const int c = g.marks.class_count();
        const Int n = g.marks.group_order;
        for (int j = 0; j < c; ++j) {
            IntVector v = IntVector::Zero(c);
            v(j) = n;
            if (!is_in_image(GhostVector{v}, g.marks))
                return {2, "ghost-ring containment at n = |G|", false,
                        g.name + ": |G|*e_" + std::to_string(j) + " not in the image"};
        }
        if (n > 1) {
            bool found_non_member = false;
            for (int j = 0; j < c && !found_non_member; ++j) {
                if (g.marks.table(j, j) <= 1) continue;
                IntVector v = IntVector::Zero(c);
                v(j) = 1;
                found_non_member = !is_in_image(GhostVector{v}, g.marks);
            }
            if (!found_non_member)
                return {2, "ghost-ring containment at n = |G|", false,
                        g.name + ": no non-member vector detected"};
        }
    }
    return {2, "ghost-ring containment at n = |G|", true,
            "|G|*e_j in the image for every class; a non-member found per nontrivial group" +
                all_groups_note(groups.size())};
}

CriterionResult diagonal_identity(const std::vector<GroupArtifacts>& groups) {
    for (const GroupArtifacts& g : groups) {
        for (int i = 0; i < g.marks.class_count(); ++i) {
            const SubgroupClass& cls = g.marks.lattice.classes[static_cast<std::size_t>(i)];
            if (cls.normalizer_order % cls.order != 0 ||
                g.marks.table(i, i) != cls.normalizer_order / cls.order)
                return {3, "diagonal marks identity", false,
                        g.name + ": class " + std::to_string(i) +
                            " diagonal != [N_G(K):K]"};
        }
    }
    return {3, "diagonal marks identity", true,
            "coset counts match normalizer indices on every class" + all_groups_note(groups.size())};
}

CriterionResult unit_facts(const std::vector<GroupArtifacts>& groups) {
    for (const GroupArtifacts& g : groups) {
        const UnitsReport& u = g.units;
        const int c = u.class_count;
        std::unordered_set<std::uint32_t> masks;
        for (const IntVector& v : u.unit_vectors) {
            std::uint32_t m = 0;
            for (int j = 0; j < c; ++j) {
                if (v(j) != 1 && v(j) != -1)
                    return {4, "unit group facts", false, g.name + ": unit not +-1 valued"};
                if (v(j) < 0) m |= 1u << j;
            }
            masks.insert(m);
        }
        if (!masks.count(0u) || !masks.count((c == 32 ? ~0u : (1u << c) - 1u)))
            return {4, "unit group facts", false, g.name + ": +-all-ones missing"};
        for (std::uint32_t a : masks)
            for (std::uint32_t b : masks)
                if (!masks.count(a ^ b))
                    return {4, "unit group facts", false, g.name + ": units not product-closed"};
        // every element squares to the identity: a ^ a == 0 is automatic for
        // sign vectors, asserted via the mask identity
        if (u.count() != (Int{1} << u.rank))
            return {4, "unit group facts", false, g.name + ": |units| != 2^rank"};
        if (g.group.order() % 2 == 1 && u.rank != 1)
            return {4, "unit group facts", false, g.name + ": odd order but rank != 1"};
        if (is_abelian(g.group)) {
            const Int s = index_two_subgroup_count(g.marks);
            if (u.rank != 1 + s)
                return {4, "unit group facts", false,
                        g.name + ": abelian rank != 1 + #index-2 subgroups"};
        }
    }
    return {4, "unit group facts", true,
            "elementary abelian 2-group; rank 1 for odd order; rank 1+s for abelian groups" +
                all_groups_note(groups.size())};
}

CriterionResult picard_values(const std::vector<GroupArtifacts>& groups, const Budgets& budgets) {
    auto factors_of = [](const GroupArtifacts& g) { return g.picard->cokernel.invariant_factors; };
    auto pinned = [](const std::string& name) {
        return name == "cyclic:1" || name == "cyclic:2" || name == "cyclic:3" ||
               name == "cyclic:5";
    };
    int oracle_checked = 0;
    for (const GroupArtifacts& g : groups) {
        if (!g.picard) {
            if (pinned(g.name))
                return {5, "Picard values and oracle agreement", false,
                        g.name + ": Picard unexpectedly not computed"};
            continue;
        }
        if ((g.name == "cyclic:1" || g.name == "cyclic:2" || g.name == "cyclic:3") &&
            !factors_of(g).empty())
            return {5, "Picard values and oracle agreement", false,
                    g.name + ": expected trivial Picard group"};
        if (g.name == "cyclic:5" && factors_of(g) != std::vector<Int>{2})
            return {5, "Picard values and oracle agreement", false,
                    g.name + ": expected Picard group Z/2"};

        if (!g.picard->target_order || *g.picard->target_order > budgets.enum_cap) continue;

        // Rebuild the generator list the cokernel saw and hand it to the
        // independent enumeration route.
        const int c = g.marks.class_count();
        const Int n = g.marks.group_order;
        std::vector<std::vector<Int>> gens;
        for (int j = 0; j < c; ++j) {
            std::vector<Int> flip(static_cast<std::size_t>(c), mod_floor(1, n));
            flip[static_cast<std::size_t>(j)] = mod_floor(-1, n);
            gens.push_back(std::move(flip));
        }
        for (const IntVector& v : unit_elements_of_image(g.quotient, budgets.enum_cap))
            gens.push_back(to_std_vector(v));
        const std::vector<Int> oracle = cokernel_by_enumeration(n, c, gens, budgets.enum_cap);
        if (oracle != factors_of(g))
            return {5, "Picard values and oracle agreement", false,
                    g.name + ": Smith-form cokernel disagrees with the enumeration oracle"};
        ++oracle_checked;
    }
    return {5, "Picard values and oracle agreement", true,
            "pinned values hold; enumeration oracle agrees on " + std::to_string(oracle_checked) +
                " groups with target order <= " + std::to_string(budgets.enum_cap)};
}

CriterionResult kernel_claim(const std::vector<GroupArtifacts>& groups) {
    int checked_groups = 0;
    for (const GroupArtifacts& g : groups) {
        if (!g.picard) continue;
        if (!kernel_check(*g.picard, g.units))
            return {6, "kernel of the Picard-defining map", false,
                    g.name + ": kernel size " + std::to_string(g.picard->kernel_size) +
                        " != |A(G)^x| = " + std::to_string(g.units.count())};
        ++checked_groups;
    }
    return {6, "kernel of the Picard-defining map", true,
            "kernel size equals |A(G)^x| on all " + std::to_string(checked_groups) +
                " groups with a computed Picard group"};
}

CriterionResult pullback_property(const std::vector<GroupArtifacts>& groups) {
    for (const GroupArtifacts& g : groups)
        if (!pullback_check(g.marks, g.quotient, 1000))
            return {7, "pullback property", false, g.name + ": membership routes disagree"};
    return {7, "pullback property", true,
            "1000 random ghost vectors per group, zero discrepancies" +
                all_groups_note(groups.size())};
}

CriterionResult certification(const std::vector<GroupArtifacts>& groups) {
    for (const GroupArtifacts& g : groups)
        if (!g.certificate.all_pass()) {
            const CertificateCheck* f = g.certificate.first_failure();
            return {8, "certification", false,
                    g.name + ": check '" + (f ? f->name : "?") + "' failed"};
        }
    return {8, "certification", true,
            "passing certificate emitted for 100% of groups" + all_groups_note(groups.size())};
}

CriterionResult size_identity(const std::vector<GroupArtifacts>& groups) {
    for (const GroupArtifacts& g : groups) {
        if (!g.quotient.size)
            return {9, "quotient size identity", false, g.name + ": |R| overflowed"};
        const int c = g.marks.class_count();
        Int diag = 1;
        for (int i = 0; i < c; ++i) diag = checked::mul(diag, g.marks.table(i, i));
        Int expected = 1;
        for (int i = 0; i < c; ++i) expected = checked::mul(expected, g.marks.group_order);
        if (checked::mul(*g.quotient.size, diag) != expected)
            return {9, "quotient size identity", false,
                    g.name + ": |R| * prod(diagonal) != n^c"};
    }
    return {9, "quotient size identity", true,
            "|R| * prod(diagonal marks) = n^c exactly" + all_groups_note(groups.size())};
}

} // namespace

std::vector<CriterionResult> acceptance_criteria(const std::vector<GroupArtifacts>& groups,
                                                 const Budgets& budgets) {
    return {
        ghost_injectivity(groups), containment(groups),      diagonal_identity(groups),
        unit_facts(groups),        picard_values(groups, budgets), kernel_claim(groups),
        pullback_property(groups), certification(groups),    size_identity(groups),
    };
}

} // namespace burnside
