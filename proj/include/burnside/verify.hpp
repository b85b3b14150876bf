#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burnside/cache.hpp"
#include "burnside/catalog.hpp"
#include "burnside/certificate.hpp"
#include "burnside/picard.hpp"

namespace burnside {

/// Everything the batch run derives from one catalog group.
struct GroupArtifacts {
    std::string name;
    PermGroup group;
    MarksTable marks;
    QuotientImage quotient;
    UnitsReport units;
    std::optional<PicardReport> picard; ///< nullopt: skipped under budget
    std::string picard_skip_reason;
    Certificate certificate;
};

GroupArtifacts compute_artifacts(const std::string& name, PermGroup group, const Budgets& budgets,
                                 const MarksCache& cache);

/// Computes artifacts for every entry, optionally across threads; the result
/// keeps catalog order regardless of the parallelism degree.
std::vector<GroupArtifacts> compute_catalog_artifacts(std::vector<CatalogEntry> entries,
                                                      const Budgets& budgets,
                                                      const MarksCache& cache, int parallel);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The batch verification suite: one result per criterion, each evaluated
/// over all supplied groups.
std::vector<CriterionResult> acceptance_criteria(const std::vector<GroupArtifacts>& groups,
                                                 const Budgets& budgets);

/// Independent cokernel oracle: enumerates the product of `copies` copies of
/// (Z/n)^x explicitly, closes the generators into a subgroup by raw modular
/// multiplication, forms coset representatives, and reads off the quotient's
/// invariant factors from element-order statistics. Shares nothing with the
/// Smith-form/dlog route. Throws BudgetExceeded when the target has more
/// than `cap` elements.
std::vector<Int> cokernel_by_enumeration(Int n, int copies,
                                         const std::vector<std::vector<Int>>& generators, Int cap);

bool is_abelian(const PermGroup& g);

/// Number of index-2 subgroups, counted with class sizes.
Int index_two_subgroup_count(const MarksTable& t);

} // namespace burnside
