#include "burnside/cache.hpp"

#include <atomic>
#include <fstream>

#include <unistd.h>

#include <json.hpp>

#include "burnside/report.hpp"

namespace burnside {

namespace {

using nlohmann::json;

json serialize(const MarksTable& t) {
    json doc;
    doc["format"] = 1;
    doc["degree"] = t.degree;
    doc["order"] = t.group_order;
    doc["hash"] = format_hash(t.group_hash);
    json classes = json::array();
    for (const SubgroupClass& cls : t.lattice.classes) {
        json c;
        c["order"] = cls.order;
        c["normalizer_order"] = cls.normalizer_order;
        c["class_size"] = cls.class_size;
        json elems = json::array();
        for (const Perm& p : cls.representative.elements()) elems.push_back(p.images());
        c["elements"] = std::move(elems);
        classes.push_back(std::move(c));
    }
    doc["classes"] = std::move(classes);
    json sub = json::array();
    for (const auto& row : t.lattice.subconjugacy) {
        json r = json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        sub.push_back(std::move(r));
    }
    doc["subconjugacy"] = std::move(sub);
    json rows = json::array();
    for (Eigen::Index i = 0; i < t.table.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < t.table.cols(); ++j) row.push_back(t.table(i, j));
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc;
}

std::optional<MarksTable> deserialize(const json& doc, std::uint64_t expected_hash) {
    if (!doc.is_object() || doc.value("format", 0) != 1) return std::nullopt;
    if (doc.value("hash", "") != format_hash(expected_hash)) return std::nullopt;

    MarksTable t;
    t.degree = doc.at("degree").get<int>();
    t.group_order = doc.at("order").get<Int>();
    t.group_hash = expected_hash;

    for (const auto& c : doc.at("classes")) {
        SubgroupClass cls;
        cls.order = c.at("order").get<Int>();
        cls.normalizer_order = c.at("normalizer_order").get<Int>();
        cls.class_size = c.at("class_size").get<Int>();
        std::vector<Perm> elems;
        for (const auto& arr : c.at("elements")) elems.emplace_back(arr.get<std::vector<int>>());
        cls.representative = Subgroup::from_elements(std::move(elems));
        if (cls.representative.order() != cls.order) return std::nullopt;
        t.lattice.classes.push_back(std::move(cls));
    }
    for (const auto& row : doc.at("subconjugacy")) {
        std::vector<bool> r;
        for (const auto& b : row) r.push_back(b.get<int>() != 0);
        t.lattice.subconjugacy.push_back(std::move(r));
    }
    const auto& rows = doc.at("matrix");
    const auto c = static_cast<Eigen::Index>(rows.size());
    if (c != static_cast<Eigen::Index>(t.lattice.classes.size())) return std::nullopt;
    t.table = IntMatrix::Zero(c, c);
    for (Eigen::Index i = 0; i < c; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<Eigen::Index>(row.size()) != c) return std::nullopt;
        for (Eigen::Index j = 0; j < c; ++j) t.table(i, j) = row[static_cast<std::size_t>(j)].get<Int>();
    }
    return t;
}

} // namespace

std::filesystem::path MarksCache::entry_path(std::uint64_t group_hash) const {
    return dir_ / (format_hash(group_hash) + ".marks.json");
}

std::optional<MarksTable> MarksCache::load(std::uint64_t group_hash) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(entry_path(group_hash));
    if (!in) return std::nullopt;
    try {
        json doc;
        in >> doc;
        return deserialize(doc, group_hash);
    } catch (const std::exception&) {
        return std::nullopt; // treat as a cache miss
    }
}

void MarksCache::store(const MarksTable& t) const {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return; // caching is best effort

    static std::atomic<unsigned> counter{0};
    const auto tmp = dir_ / (format_hash(t.group_hash) + ".tmp." +
                             std::to_string(::getpid()) + "." +
                             std::to_string(counter.fetch_add(1)));
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << serialize(t).dump();
    }
    std::filesystem::rename(tmp, entry_path(t.group_hash), ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

MarksTable marks_table_cached(const PermGroup& g, const Budgets& budgets, const MarksCache& cache) {
    if (auto hit = cache.load(g.canonical_hash())) return *hit;
    MarksTable t = marks_table(g, budgets);
    cache.store(t);
    return t;
}

} // namespace burnside
