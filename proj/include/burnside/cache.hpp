#pragma once

#include <filesystem>
#include <optional>

#include "burnside/marks.hpp"

namespace burnside {

/// On-disk marks-table cache keyed by the canonical group hash. A pure
/// performance layer: corrupt or unreadable entries are ignored and
/// recomputed. Writes go through a temp file and rename, so concurrent runs
/// never observe partial files.
class MarksCache {
public:
    MarksCache(std::filesystem::path dir, bool enabled)
        : dir_(std::move(dir)), enabled_(enabled) {}

    bool enabled() const { return enabled_; }

    std::optional<MarksTable> load(std::uint64_t group_hash) const;
    void store(const MarksTable& t) const;

private:
    std::filesystem::path entry_path(std::uint64_t group_hash) const;

    std::filesystem::path dir_;
    bool enabled_;
};

/// marks_table() with a cache in front.
MarksTable marks_table_cached(const PermGroup& g, const Budgets& budgets, const MarksCache& cache);

} // namespace burnside
