#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../classes.hpp"
#include "../constructions.hpp"
#include "../group.hpp"
#include "../theorems.hpp"
#include "element_literal.hpp"
#include "expr.hpp"
#include "report.hpp"

namespace conjprod::cli {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment-variable names for the resource caps; command-line flags take precedence.
inline constexpr const char* kEnvEnumLimit = "CONJPROD_ENUM_LIMIT";
inline constexpr const char* kEnvOrbitCap = "CONJPROD_ORBIT_CAP";
inline constexpr const char* kEnvProductCap = "CONJPROD_PRODUCT_CAP";

namespace detail {

inline std::optional<std::uint64_t> env_u64(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    const auto x = std::strtoull(v, &end, 10);
    if (*end != '\0') throw SpecError(std::string("environment variable ") + name + " is not an integer");
    return x;
}

struct CapFlags {
    std::optional<std::uint64_t> enumeration;
    std::optional<std::uint64_t> orbit;
    std::optional<std::uint64_t> product;
};

inline Limits resolve_limits(const CapFlags& flags) {
    Limits l;
    if (auto v = env_u64(kEnvEnumLimit)) l.enumeration = *v;
    if (auto v = env_u64(kEnvOrbitCap)) l.orbit = *v;
    if (auto v = env_u64(kEnvProductCap)) l.product_pairs = *v;
    if (flags.enumeration) l.enumeration = *flags.enumeration;
    if (flags.orbit) l.orbit = *flags.orbit;
    if (flags.product) l.product_pairs = *flags.product;
    return l;
}

inline ClassRow class_row(const std::string& label, const Group& g, const Element& a, const Limits& limits) {
    const auto sq = eta_of_class_square(g, a, limits);
    ClassRow row{label, g.format(sq.cls.rep), sq.class_size, sq.n, sq.eta, {}};
    for (const auto& c : sq.decomposition.classes) row.square_class_sizes.push_back(c.size());
    return row;
}

inline std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag) {
    if (!v) throw CLI::RequiredError(flag);
    return *v;
}

inline std::string need(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw CLI::RequiredError(flag);
    return *v;
}

}  // namespace detail

/**
 * Runs one CLI invocation (arguments without the program name).
 * Exit code 0 when every check passes, 1 on a failed claim, 2 on usage,
 * parse or resource errors.
 */
inline CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;
    CLI::App app{"Conjugacy classes and class products in finite groups", "conjprod"};
    app.require_subcommand(1);

    detail::CapFlags caps;
    std::string format_name = "human";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"human", "json"}));
        sub->add_option("--enum-limit", caps.enumeration, "Largest group order for full enumeration");
        sub->add_option("--orbit-cap", caps.orbit, "Largest conjugacy orbit");
        sub->add_option("--product-cap", caps.product, "Largest number of pairs in a class product");
    };

    std::optional<std::string> group_text, element_text, out_path, claim, base_text, z_text, a_text, b_text;
    std::optional<std::uint64_t> p_opt, n_opt;
    std::vector<std::string> parts;
    bool all_classes_flag = false;
    std::string corpus = "default";

    auto* analyze = app.add_subcommand("analyze", "Class sizes and class-square eta for a group");
    analyze->add_option("--group", group_text, "Group expression")->required();
    auto* el_opt = analyze->add_option("--element", element_text, "Element literal");
    analyze->add_flag("--all-classes", all_classes_flag, "Analyse every conjugacy class")->excludes(el_opt);
    add_common(analyze);

    auto* verify = app.add_subcommand("verify", "Check one claim and print its report");
    verify->add_option("--claim", claim, "Claim to verify")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "lemma1", "lemma5.1", "prop5.4", "remark-a", "remark-b", "tower"}));
    verify->add_option("--p", p_opt, "Prime");
    verify->add_option("--n", n_opt, "Depth / bound parameter");
    verify->add_option("--group", group_text, "Group expression (A, C, lemma1)");
    verify->add_option("--element", element_text, "Element literal (A); default is the distinguished element");
    verify->add_option("--part", parts, "p-group factor expression (B), repeatable");
    verify->add_option("--base", base_text, "Base expression (lemma5.1); default cyclic:p^2");
    verify->add_option("--z", z_text, "Central element of order p (lemma1)");
    verify->add_option("--a", a_text, "First element (lemma1)");
    verify->add_option("--b", b_text, "Second element (lemma1); default a^-1");
    add_common(verify);

    auto* sn = app.add_subcommand("sn", "Print the admissible class sizes S_n");
    sn->add_option("--n", n_opt, "Bound n >= 1")->required();
    add_common(sn);

    auto* sweep_cmd = app.add_subcommand("sweep", "Check the class-square bound and trichotomy over a corpus");
    sweep_cmd->add_option("--corpus", corpus, "Corpus name")->check(CLI::IsMember({"default", "catalog"}));
    add_common(sweep_cmd);

    auto* export_cmd = app.add_subcommand("export-table", "Write the Cayley table of an enumerable group");
    export_cmd->add_option("--group", group_text, "Group expression")->required();
    export_cmd->add_option("--out", out_path, "Output path")->required();
    add_common(export_cmd);

    std::ostringstream out, err;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? kExitPass : kExitUsage;
        return result;
    }

    const Format format = format_name == "json" ? Format::Structured : Format::Human;
    OutputRecord rec;
    try {
        const Limits limits = detail::resolve_limits(caps);
        auto eval = [&](const std::string& text) { return evaluate(parse_group_expr(text), limits); };

        if (analyze->parsed()) {
            rec.command = "analyze";
            const auto g = eval(*group_text);
            const auto& grp = g.instance.group;
            rec.params = {{"group", g.instance.label()}};
            rec.info = {{"group", g.instance.label()}, {"order", grp.order().to_string()}};
            if (all_classes_flag) {
                for (const auto& cls : all_classes(grp, limits))
                    rec.classes.push_back(detail::class_row(g.instance.label(), grp, cls.rep, limits));
            } else {
                const auto a = element_text ? parse_element(g, *element_text) : g.instance.distinguished;
                rec.params.emplace_back("element", element_text.value_or("dist"));
                rec.classes.push_back(detail::class_row(g.instance.label(), grp, a, limits));
            }
        } else if (verify->parsed()) {
            rec.command = "verify";
            rec.params = {{"claim", *claim}};
            const std::string& c = *claim;
            if (c == "A") {
                const auto g = eval(detail::need(group_text, "--group"));
                const auto a = element_text ? parse_element(g, *element_text) : g.instance.distinguished;
                auto r = verify_theorem_a(g.instance.group, a, limits);
                r.params.insert(r.params.begin(), {"group", g.instance.label()});
                rec.reports.push_back(std::move(r));
            } else if (c == "B") {
                if (parts.empty()) throw CLI::RequiredError("--part");
                std::vector<FamilyInstance> instances;
                for (const auto& part : parts) instances.push_back(eval(part).instance);
                rec.reports.push_back(verify_theorem_b(instances, n_opt, limits));
            } else if (c == "C") {
                const auto g = eval(detail::need(group_text, "--group"));
                auto r = verify_theorem_c(g.instance.group, limits);
                r.params.insert(r.params.begin(), {"group", g.instance.label()});
                rec.reports.push_back(std::move(r));
            } else if (c == "lemma1") {
                const auto g = eval(detail::need(group_text, "--group"));
                const auto& grp = g.instance.group;
                if (z_text) {
                    const auto z = parse_element(g, *z_text);
                    const auto a = a_text ? parse_element(g, *a_text) : g.instance.distinguished;
                    const auto b = b_text ? parse_element(g, *b_text) : grp.invert(a);
                    rec.reports.push_back(verify_lemma1(grp, z, a, b, limits));
                } else {
                    rec.reports = verify_lemma1_all(grp, limits);
                }
                for (auto& r : rec.reports) r.params.insert(r.params.begin(), {"group", g.instance.label()});
            } else if (c == "lemma5.1") {
                const auto p = detail::need(p_opt, "--p");
                const auto base = base_text ? eval(*base_text).instance
                                            : evaluate(parse_group_expr("cyclic:" + std::to_string(p * p)), limits).instance;
                rec.reports.push_back(verify_construction_lemma(base, p, limits));
            } else if (c == "prop5.4") {
                rec.reports.push_back(verify_prop_notforsuper(detail::need(p_opt, "--p"), limits));
            } else if (c == "remark-a") {
                rec.reports.push_back(verify_remark_a(detail::need(p_opt, "--p"), limits));
            } else if (c == "remark-b") {
                rec.reports.push_back(verify_remark_b(detail::need(p_opt, "--p"), limits));
            } else if (c == "tower") {
                const auto p = detail::need(p_opt, "--p");
                const auto n = detail::need(n_opt, "--n");
                rec.reports.push_back(verify_tower(p, n, limits));
                const auto f = tower(p, n, limits);
                rec.reports.push_back(verify_theorem_a(f.group, f.distinguished, limits));
            }
            if (p_opt) rec.params.emplace_back("p", std::to_string(*p_opt));
            if (n_opt) rec.params.emplace_back("n", std::to_string(*n_opt));
        } else if (sn->parsed()) {
            rec.command = "sn";
            rec.params = {{"n", std::to_string(*n_opt)}};
            rec.values = compute_sn(*n_opt).values;
        } else if (sweep_cmd->parsed()) {
            rec.command = "sweep";
            rec.params = {{"corpus", corpus}};
            rec.reports = sweep(corpus == "catalog" ? catalog() : default_corpus(limits), limits);
        } else if (export_cmd->parsed()) {
            rec.command = "export-table";
            const auto g = eval(*group_text);
            const auto table = cayley_table(g.instance.group, limits);
            std::ofstream file(*out_path, std::ios::binary);
            if (!file) throw SpecError("cannot write '" + *out_path + "'");
            write_table(file, *table);
            rec.params = {{"group", g.instance.label()}, {"out", *out_path}};
            rec.info = {{"group", g.instance.label()}, {"order", std::to_string(table->size())}};
        }
    } catch (const CLI::Error& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = kExitUsage;
        return result;
    } catch (const ClaimViolation& e) {
        result.err = std::string("claim violated: ") + e.what() + "\n";
        result.exit_code = kExitClaimFailure;
        return result;
    } catch (const Error& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = kExitUsage;
        return result;
    }

    result.out = serialize_report(rec, format);
    result.exit_code = rec.all_pass() ? kExitPass : kExitClaimFailure;
    return result;
}

}  // namespace conjprod::cli
