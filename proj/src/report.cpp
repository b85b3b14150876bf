#include "burnside/report.hpp"

#include <sstream>

#include "burnside/version.hpp"

namespace burnside {

std::string format_hash(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return s;
}

OrderedJson tool_header() {
    return OrderedJson{{"name", kToolName}, {"version", kToolVersion}};
}

OrderedJson group_header(const std::string& name, const MarksTable& t) {
    return OrderedJson{{"spec", name},
                       {"hash", format_hash(t.group_hash)},
                       {"degree", t.degree},
                       {"order", t.group_order}};
}

namespace {

OrderedJson matrix_rows(const IntMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedJson vector_entries(const IntVector& v) {
    OrderedJson out = OrderedJson::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

OrderedJson presentation_json(const FiniteAbelianPresentation& p) {
    OrderedJson out;
    out["invariant_factors"] = p.invariant_factors;
    out["order"] = p.order();
    if (!p.generator_labels.empty()) out["generators"] = p.generator_labels;
    return out;
}

} // namespace

OrderedJson marks_report(const std::string& name, const MarksTable& t) {
    OrderedJson out;
    out["tool"] = tool_header();
    out["report"] = "marks";
    out["group"] = group_header(name, t);
    out["class_count"] = t.class_count();
    OrderedJson classes = OrderedJson::array();
    for (int i = 0; i < t.class_count(); ++i) {
        const SubgroupClass& cls = t.lattice.classes[static_cast<std::size_t>(i)];
        OrderedJson c;
        c["index"] = i;
        c["order"] = cls.order;
        c["normalizer_order"] = cls.normalizer_order;
        c["class_size"] = cls.class_size;
        OrderedJson gens = OrderedJson::array();
        for (const Perm& g : cls.representative.small_generating_set())
            gens.push_back(g.images());
        c["representative_generators"] = std::move(gens);
        classes.push_back(std::move(c));
    }
    out["classes"] = std::move(classes);
    out["matrix"] = matrix_rows(t.table);
    return out;
}

std::string marks_csv(const MarksTable& t) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < t.table.rows(); ++i) {
        for (Eigen::Index j = 0; j < t.table.cols(); ++j) {
            if (j) os << ',';
            os << t.table(i, j);
        }
        os << '\n';
    }
    return os.str();
}

OrderedJson units_report(const std::string& name, const MarksTable& t, const UnitsReport& u) {
    OrderedJson out;
    out["tool"] = tool_header();
    out["report"] = "units";
    out["group"] = group_header(name, t);
    out["class_count"] = u.class_count;
    out["rank"] = u.rank;
    out["unit_count"] = u.count();
    OrderedJson gens = OrderedJson::array();
    for (const IntVector& v : u.generators) gens.push_back(vector_entries(v));
    out["generators"] = std::move(gens);
    OrderedJson vecs = OrderedJson::array();
    for (const IntVector& v : u.unit_vectors) vecs.push_back(vector_entries(v));
    out["unit_vectors"] = std::move(vecs);
    return out;
}

OrderedJson picard_report(const std::string& name, const MarksTable& t, const PicardReport& p) {
    OrderedJson out;
    out["tool"] = tool_header();
    out["report"] = "picard";
    out["group"] = group_header(name, t);
    out["status"] = "computed";
    out["modulus"] = p.modulus;
    out["class_count"] = p.class_count;
    OrderedJson target;
    target["copies"] = p.class_count;
    target["factor_orders_per_copy"] = p.target_factor.presentation().invariant_factors;
    if (p.target_order)
        target["order"] = *p.target_order;
    else
        target["order"] = nullptr;
    out["target"] = std::move(target);
    out["image_generator_count"] = p.image_generator_count;
    out["image_unit_count"] = p.image_unit_count;
    out["cokernel"] = presentation_json(p.cokernel);
    out["kernel_size"] = p.kernel_size;
    out["picard_trivial"] = p.picard_trivial();
    return out;
}

OrderedJson picard_not_computed(const std::string& name, const MarksTable& t,
                                const std::string& reason) {
    OrderedJson out;
    out["tool"] = tool_header();
    out["report"] = "picard";
    out["group"] = group_header(name, t);
    out["status"] = "not computed";
    out["reason"] = reason;
    return out;
}

OrderedJson certificate_report(const std::string& name, const MarksTable& t,
                               const Certificate& cert) {
    OrderedJson out;
    out["tool"] = tool_header();
    out["report"] = "certificate";
    out["group"] = group_header(name, t);
    OrderedJson checks;
    for (const CertificateCheck& c : cert.checks)
        checks[c.name] = OrderedJson{{"pass", c.pass}, {"evidence", c.evidence}};
    out["checks"] = std::move(checks);
    if (cert.quotient_ring_order)
        out["quotient_ring_order"] = *cert.quotient_ring_order;
    else
        out["quotient_ring_order"] = nullptr;
    OrderedJson locals = OrderedJson::array();
    for (auto [p, k] : cert.local_factors) {
        Int pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        locals.push_back("Z/" + std::to_string(pk));
    }
    out["local_factors_per_coordinate"] = std::move(locals);
    out["ghost_copies"] = cert.ghost_copies;
    out["cited_axioms"] = cert.cited_axioms;
    out["all_pass"] = cert.all_pass();
    if (cert.all_pass())
        out["conclusion"] = cert.conclusion;
    else
        out["conclusion"] = nullptr;
    return out;
}

namespace {

void render_value(const OrderedJson& v, const std::string& indent, std::ostream& os);

void render_object(const OrderedJson& v, const std::string& indent, std::ostream& os) {
    for (const auto& [key, val] : v.items()) {
        os << indent << key << ": ";
        if (val.is_object() || (val.is_array() && !val.empty() && val[0].is_structured())) {
            os << '\n';
            render_value(val, indent + "  ", os);
        } else {
            os << val.dump() << '\n';
        }
    }
}

void render_value(const OrderedJson& v, const std::string& indent, std::ostream& os) {
    if (v.is_object()) {
        render_object(v, indent, os);
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_structured() && item.is_object()) {
                render_object(item, indent + "  ", os);
                os << '\n';
            } else {
                os << indent << item.dump() << '\n';
            }
        }
    } else {
        os << indent << v.dump() << '\n';
    }
}

} // namespace

std::string render_text(const OrderedJson& report) {
    std::ostringstream os;
    render_value(report, "", os);
    return os.str();
}

} // namespace burnside
