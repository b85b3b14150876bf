// Acceptance suite: evaluates every batch criterion over the default catalog
// and prints one PASS/FAIL line per criterion. Exits nonzero on any failure.
#include <chrono>
#include <iostream>
#include <sstream>

#include "burnside/run.hpp"
#include "burnside/verify.hpp"

int main() {
    using namespace burnside;
    using Clock = std::chrono::steady_clock;

    const auto start = Clock::now();
    bool ok = true;

    try {
        const Budgets budgets;
        const MarksCache cache("", false); // acceptance always recomputes
        const std::vector<GroupArtifacts> groups =
            compute_catalog_artifacts(build_catalog(budgets), budgets, cache, 1);
        const std::vector<CriterionResult> results = acceptance_criteria(groups, budgets);

        for (const CriterionResult& r : results) {
            std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name
                      << " -- " << r.detail << "\n";
            ok = ok && r.pass;
        }

        // criterion 8 also pins the end-to-end contract: report-all exits 0
        // and the whole batch stays within the five-minute budget.
        {
            std::ostringstream out, err;
            const int code = run_command({"report-all", "--no-cache"}, out, err);
            const double elapsed =
                std::chrono::duration<double>(Clock::now() - start).count();
            const bool batch_ok = code == 0 && elapsed < 300.0;
            std::cout << (batch_ok ? "[PASS]" : "[FAIL]")
                      << " criterion 8 (end-to-end): report-all exit " << code << ", total "
                      << elapsed << " s (limit 300 s)\n";
            ok = ok && batch_ok;
        }
    } catch (const std::exception& e) {
        std::cout << "[FAIL] acceptance suite aborted: " << e.what() << "\n";
        ok = false;
    }

    return ok ? 0 : 1;
}
