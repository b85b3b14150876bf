#include "burnside/catalog.hpp"

#include <fstream>

#include <json.hpp>

namespace burnside {

PermGroup make_cyclic(int n, const Budgets& budgets) {
    if (n < 1) throw MalformedInput("cyclic:N needs N >= 1");
    return PermGroup::generate(n, {make_cycle(n, 0, n)}, budgets);
}

PermGroup make_dihedral(int n, const Budgets& budgets) {
    if (n < 3) throw MalformedInput("dihedral:N needs N >= 3");
    std::vector<int> reflect(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) reflect[static_cast<std::size_t>(i)] = (n - i) % n;
    return PermGroup::generate(n, {make_cycle(n, 0, n), Perm(std::move(reflect))}, budgets);
}

PermGroup make_symmetric(int n, const Budgets& budgets) {
    if (n < 1) throw MalformedInput("symmetric:N needs N >= 1");
    if (n == 1) return PermGroup::generate(1, {}, budgets);
    std::vector<Perm> gens = {make_cycle(n, 0, 2)};
    if (n > 2) gens.push_back(make_cycle(n, 0, n));
    return PermGroup::generate(n, std::move(gens), budgets);
}

PermGroup make_alternating(int n, const Budgets& budgets) {
    if (n < 1) throw MalformedInput("alternating:N needs N >= 1");
    if (n <= 2) return PermGroup::generate(std::max(n, 1), {}, budgets);
    std::vector<Perm> gens = {make_cycle(n, 0, 3)};
    if (n > 3) {
        if (n % 2 == 1)
            gens.push_back(make_cycle(n, 0, n));
        else
            gens.push_back(make_cycle(n, 1, n - 1));
    }
    return PermGroup::generate(n, std::move(gens), budgets);
}

PermGroup make_quaternion8(const Budgets& budgets) {
    // Regular action on {1, i, -1, -i, j, k, -j, -k}; left multiplication by
    // i and by j.
    const Perm gi({1, 2, 3, 0, 5, 6, 7, 4});
    const Perm gj({4, 7, 6, 5, 2, 1, 0, 3});
    return PermGroup::generate(8, {gi, gj}, budgets);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b, const Budgets& budgets) {
    const int d = a.degree() + b.degree();
    std::vector<Perm> gens;
    for (const Perm& g : a.generators()) {
        std::vector<int> im(static_cast<std::size_t>(d));
        for (int i = 0; i < a.degree(); ++i) im[static_cast<std::size_t>(i)] = g(i);
        for (int i = 0; i < b.degree(); ++i)
            im[static_cast<std::size_t>(a.degree() + i)] = a.degree() + i;
        gens.emplace_back(std::move(im));
    }
    for (const Perm& g : b.generators()) {
        std::vector<int> im(static_cast<std::size_t>(d));
        for (int i = 0; i < a.degree(); ++i) im[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < b.degree(); ++i)
            im[static_cast<std::size_t>(a.degree() + i)] = a.degree() + g(i);
        gens.emplace_back(std::move(im));
    }
    return PermGroup::generate(d, std::move(gens), budgets);
}

std::vector<CatalogEntry> build_catalog(const Budgets& budgets) {
    std::vector<CatalogEntry> entries;
    for (int n = 1; n <= 12; ++n)
        entries.push_back({"cyclic:" + std::to_string(n), make_cyclic(n, budgets)});
    for (int n = 3; n <= 6; ++n)
        entries.push_back({"dihedral:" + std::to_string(n), make_dihedral(n, budgets)});
    entries.push_back({"symmetric:3", make_symmetric(3, budgets)});
    entries.push_back({"symmetric:4", make_symmetric(4, budgets)});
    entries.push_back({"alternating:4", make_alternating(4, budgets)});
    entries.push_back({"quaternion8", make_quaternion8(budgets)});
    entries.push_back({"product:2,2", parse_group_spec("product:2,2", budgets)});
    entries.push_back({"product:2,4", parse_group_spec("product:2,4", budgets)});
    entries.push_back({"product:3,3", parse_group_spec("product:3,3", budgets)});
    return entries;
}

namespace {

int parse_positive_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size() || v < 1) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw MalformedInput(std::string("expected a positive integer for ") + what + ", got '" +
                             s + "'");
    }
}

} // namespace

PermGroup parse_group_spec(const std::string& spec, const Budgets& budgets) {
    const auto colon = spec.find(':');
    const std::string family = spec.substr(0, colon);
    const std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (family == "quaternion8" && params.empty()) return make_quaternion8(budgets);
    if (family == "cyclic") return make_cyclic(parse_positive_int(params, "cyclic"), budgets);
    if (family == "dihedral") return make_dihedral(parse_positive_int(params, "dihedral"), budgets);
    if (family == "symmetric")
        return make_symmetric(parse_positive_int(params, "symmetric"), budgets);
    if (family == "alternating")
        return make_alternating(parse_positive_int(params, "alternating"), budgets);
    if (family == "file") {
        if (params.empty()) throw MalformedInput("file: spec needs a path");
        return load_group_file(params, budgets);
    }
    if (family == "product") {
        std::vector<int> orders;
        std::size_t start = 0;
        while (start <= params.size()) {
            const auto comma = params.find(',', start);
            const std::string piece =
                params.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            orders.push_back(parse_positive_int(piece, "product"));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (orders.empty()) throw MalformedInput("product: spec needs at least one order");
        PermGroup g = make_cyclic(orders[0], budgets);
        for (std::size_t i = 1; i < orders.size(); ++i)
            g = direct_product(g, make_cyclic(orders[i], budgets), budgets);
        return g;
    }
    throw MalformedInput("unknown group spec '" + spec +
                         "' (expected cyclic:N, dihedral:N, symmetric:N, alternating:N, "
                         "quaternion8, product:N1,N2,..., or file:PATH)");
}

PermGroup load_group_file(const std::string& path, const Budgets& budgets) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open group file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput("group file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators") ||
        !doc["degree"].is_number_integer() || !doc["generators"].is_array())
        throw MalformedInput("group file needs {\"degree\": d, \"generators\": [[...], ...]}");
    const int degree = doc["degree"].get<int>();
    if (degree < 1) throw MalformedInput("group file degree must be >= 1");
    std::vector<Perm> gens;
    for (const auto& arr : doc["generators"]) {
        if (!arr.is_array()) throw MalformedInput("each generator must be an image array");
        std::vector<int> images;
        for (const auto& x : arr) {
            if (!x.is_number_integer()) throw MalformedInput("image entries must be integers");
            images.push_back(x.get<int>());
        }
        if (static_cast<int>(images.size()) != degree)
            throw MalformedInput("generator image array length must equal the degree");
        gens.emplace_back(std::move(images)); // Perm ctor validates bijection
    }
    return PermGroup::generate(degree, std::move(gens), budgets);
}

} // namespace burnside
