#include "burnside/run.hpp"

#include <fstream>
#include <iostream>
#include <ostream>

#include <CLI11.hpp>

#include "burnside/report.hpp"
#include "burnside/verify.hpp"

namespace burnside {

namespace {

struct Options {
    std::string group;
    std::string format = "json";
    std::string cache_dir = ".burnside-cache";
    bool no_cache = false;
    std::int64_t budget_elements = Budgets{}.element_cap;
    std::int64_t budget_subgroups = Budgets{}.subgroup_cap;
    std::int64_t budget_enum = Budgets{}.enum_cap;
    int parallel = 1;
    std::string out_path;

    Budgets budgets() const {
        Budgets b;
        b.element_cap = budget_elements;
        b.subgroup_cap = budget_subgroups;
        b.enum_cap = budget_enum;
        return b;
    }
    MarksCache cache() const { return MarksCache(cache_dir, !no_cache); }
};

void add_common_flags(CLI::App* cmd, Options& opt, bool needs_group) {
    if (needs_group)
        cmd->add_option("--group", opt.group, "group spec, e.g. cyclic:6, dihedral:4, file:g.json")
            ->required();
    cmd->add_option("--format", opt.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--cache-dir", opt.cache_dir, "marks-table cache directory");
    cmd->add_flag("--no-cache", opt.no_cache, "recompute everything, touch no cache");
    cmd->add_option("--budget-elements", opt.budget_elements, "group order cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-subgroups", opt.budget_subgroups, "subgroup enumeration cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-enum", opt.budget_enum, "finite ring/group enumeration cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--parallel", opt.parallel, "worker threads for report-all")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", opt.out_path, "write the report to a file instead of stdout");
}

/// Writes to --out when set, else to the session stream.
void emit(const Options& opt, std::ostream& out, const std::string& payload) {
    if (opt.out_path.empty()) {
        out << payload;
        if (!payload.empty() && payload.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(opt.out_path);
    if (!f) throw MalformedInput("cannot open output file '" + opt.out_path + "'");
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << '\n';
}

std::string format_report(const Options& opt, const OrderedJson& report) {
    if (opt.format == "text") return render_text(report);
    return report.dump(2);
}

int cmd_marks(const Options& opt, std::ostream& out) {
    const PermGroup g = parse_group_spec(opt.group, opt.budgets());
    const MarksTable t = marks_table_cached(g, opt.budgets(), opt.cache());
    if (opt.format == "csv")
        emit(opt, out, marks_csv(t));
    else
        emit(opt, out, format_report(opt, marks_report(opt.group, t)));
    return kExitOk;
}

int cmd_units(const Options& opt, std::ostream& out) {
    if (opt.format == "csv") throw CLI::ValidationError("--format csv only applies to marks");
    const PermGroup g = parse_group_spec(opt.group, opt.budgets());
    const MarksTable t = marks_table_cached(g, opt.budgets(), opt.cache());
    emit(opt, out, format_report(opt, units_report(opt.group, t, units(t))));
    return kExitOk;
}

int cmd_picard(const Options& opt, std::ostream& out) {
    if (opt.format == "csv") throw CLI::ValidationError("--format csv only applies to marks");
    const PermGroup g = parse_group_spec(opt.group, opt.budgets());
    const MarksTable t = marks_table_cached(g, opt.budgets(), opt.cache());
    const QuotientImage q = quotient_image(t);
    const PicardReport p = picard(t, q, opt.budgets()); // BudgetExceeded -> exit 2
    emit(opt, out, format_report(opt, picard_report(opt.group, t, p)));
    return kExitOk;
}

int cmd_certify(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.format == "csv") throw CLI::ValidationError("--format csv only applies to marks");
    const PermGroup g = parse_group_spec(opt.group, opt.budgets());
    const MarksTable t = marks_table_cached(g, opt.budgets(), opt.cache());
    const QuotientImage q = quotient_image(t);
    const Certificate cert = certify(t, q);
    emit(opt, out, format_report(opt, certificate_report(opt.group, t, cert)));
    if (!cert.all_pass()) {
        err << "certificate check failed: " << cert.first_failure()->name << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_report_all(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.format == "csv") throw CLI::ValidationError("--format csv only applies to marks");
    const Budgets budgets = opt.budgets();
    std::vector<GroupArtifacts> groups =
        compute_catalog_artifacts(build_catalog(budgets), budgets, opt.cache(), opt.parallel);
    const std::vector<CriterionResult> criteria = acceptance_criteria(groups, budgets);

    OrderedJson doc;
    doc["tool"] = tool_header();
    doc["report"] = "report-all";
    doc["catalog_size"] = groups.size();
    OrderedJson entries = OrderedJson::array();
    bool all_ok = true;
    for (const GroupArtifacts& g : groups) {
        OrderedJson e;
        e["group"] = group_header(g.name, g.marks);
        e["marks"] = marks_report(g.name, g.marks);
        e["units"] = units_report(g.name, g.marks, g.units);
        e["picard"] = g.picard ? picard_report(g.name, g.marks, *g.picard)
                               : picard_not_computed(g.name, g.marks, g.picard_skip_reason);
        if (g.picard)
            e["kernel_check"] = kernel_check(*g.picard, g.units);
        else
            e["kernel_check"] = nullptr;
        e["certificate"] = certificate_report(g.name, g.marks, g.certificate);
        all_ok = all_ok && g.certificate.all_pass() && (!g.picard || kernel_check(*g.picard, g.units));
        entries.push_back(std::move(e));
    }
    doc["groups"] = std::move(entries);
    OrderedJson acc = OrderedJson::array();
    for (const CriterionResult& r : criteria) {
        acc.push_back(OrderedJson{
            {"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all_ok = all_ok && r.pass;
    }
    doc["acceptance"] = std::move(acc);
    doc["all_pass"] = all_ok;
    emit(opt, out, format_report(opt, doc));

    if (!all_ok) {
        err << "report-all: at least one check failed\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"table of marks, units, Picard group, and Brauer-vanishing certificates "
                 "for Burnside rings of finite permutation groups"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* marks_cmd = app.add_subcommand("marks", "table of marks of a group");
    add_common_flags(marks_cmd, opt, true);
    CLI::App* units_cmd = app.add_subcommand("units", "unit group of the Burnside ring");
    add_common_flags(units_cmd, opt, true);
    CLI::App* picard_cmd = app.add_subcommand("picard", "Picard group via the cokernel formula");
    add_common_flags(picard_cmd, opt, true);
    CLI::App* certify_cmd = app.add_subcommand("certify", "Brauer-vanishing certificate");
    add_common_flags(certify_cmd, opt, true);
    CLI::App* all_cmd = app.add_subcommand("report-all", "all reports and checks over the catalog");
    add_common_flags(all_cmd, opt, false);

    std::vector<const char*> argv;
    argv.push_back("burnside");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (marks_cmd->parsed()) return cmd_marks(opt, out);
        if (units_cmd->parsed()) return cmd_units(opt, out);
        if (picard_cmd->parsed()) return cmd_picard(opt, out);
        if (certify_cmd->parsed()) return cmd_certify(opt, out, err);
        if (all_cmd->parsed()) return cmd_report_all(opt, out, err);
        err << "no command given\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const MalformedInput& e) {
        err << "malformed input: " << e.what() << "\n";
        return kExitMalformedInput;
    } catch (const CheckFailed& e) {
        err << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace burnside
