#pragma once

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalog.hpp"
#include "lagrangian.hpp"

namespace geodstab {
namespace cli {

// --catalog flag, then the environment, then the built-in default.
inline std::string resolve_catalog_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("GEODSTAB_CATALOG"))
        if (*env) return env;
#ifdef GEODSTAB_DEFAULT_CATALOG
    return GEODSTAB_DEFAULT_CATALOG;
#else
    throw error("no catalog path given; pass --catalog or set GEODSTAB_CATALOG");
#endif
}

namespace detail {

inline Json labels_list_json(const std::vector<Labels>& parts) {
    Json a = Json::array();
    for (const auto& p : parts) a.push_back(geodstab::detail::labels_json(p));
    return a;
}

inline Json weight_json(const ReductiveWeight& w) {
    Json j = Json::object();
    j["factor_weights"] = labels_list_json(w.factor_weights);
    j["charges"] = geodstab::detail::rats_json(w.charges);
    return j;
}

inline Json report_json(const StabilityReport& r) {
    Json j = Json::object();
    j["verdict"] = verdict_str(r.verdict);
    if (r.index) j["index"] = r.index->str();
    if (r.nullity) j["nullity"] = r.nullity->str();
    if (r.killing_nullity) j["killing_nullity"] = r.killing_nullity->str();
    Json ds = Json::array();
    for (const auto& d : r.destabilizers) {
        Json dj = Json::object();
        dj["labels"] = labels_list_json(d.labels);
        dj["casimir"] = rational_str(d.cas);
        dj["level"] = rational_str(d.level);
        dj["multiplicity"] = d.multiplicity;
        dj["dimension"] = d.dim.str();
        dj["block"] = d.block;
        ds.push_back(dj);
    }
    j["destabilizers"] = ds;
    j["rule_trace"] = r.rule_trace;
    return j;
}

inline void print_report(std::ostream& out, const StabilityReport& r) {
    out << "verdict: " << verdict_str(r.verdict) << "\n";
    if (r.index) out << "index: " << r.index->str() << "\n";
    if (r.nullity) out << "nullity: " << r.nullity->str() << "\n";
    if (r.killing_nullity) out << "killing nullity: " << r.killing_nullity->str() << "\n";
    for (const auto& d : r.destabilizers)
        out << "destabilizer: " << geodstab::detail::candidate_str(d.labels) << " casimir "
            << rational_str(d.cas) << " level " << rational_str(d.level) << " multiplicity "
            << d.multiplicity << " dimension " << d.dim.str() << " block " << d.block << "\n";
    for (const auto& t : r.rule_trace) out << "rule: " << t << "\n";
}

}  // namespace detail

// Testable entry point: argv without the program name. Returns the exit
// code: 0 success, 1 usage error, 2 data or validation error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stability of totally geodesic submanifolds of symmetric spaces"};
    app.require_subcommand(1);
    bool structured = false;
    app.add_flag("--structured", structured, "emit one JSON record instead of text");

    std::string type, scale_str = "1", max_cas_str, catalog_path, name, ricci_str = "unknown",
                compare_str = "unknown", identity_str;
    std::vector<long long> labels;
    long long betti1 = 0;
    bool killing_flag = false;

    auto* c_cas = app.add_subcommand("casimir", "casimir eigenvalue of a dominant weight");
    c_cas->add_option("type", type, "simple type, e.g. B3")->required();
    c_cas->add_option("labels", labels, "Dynkin labels")->required();
    c_cas->add_option("--scale", scale_str, "casimir normalization as p/q");

    auto* c_dim = app.add_subcommand("dim", "dimension of an irreducible module");
    c_dim->add_option("type", type)->required();
    c_dim->add_option("labels", labels)->required();

    auto* c_wts = app.add_subcommand("weights", "full weight diagram with multiplicities");
    c_wts->add_option("type", type)->required();
    c_wts->add_option("labels", labels)->required();

    auto* c_enum = app.add_subcommand("enumerate", "dominant weights below a casimir bound");
    c_enum->add_option("type", type)->required();
    c_enum->add_option("--max-casimir", max_cas_str, "bound as p/q")->required();
    c_enum->add_option("--scale", scale_str, "casimir normalization as p/q");

    auto* c_branch = app.add_subcommand("branch", "restrict a module along a catalog embedding");
    c_branch->add_option("--catalog", catalog_path, "catalog file");
    c_branch->add_option("--embedding", name, "catalog entry owning the embedding")->required();
    c_branch->add_option("labels", labels, "concatenated Dynkin labels")->required();

    auto* c_stab = app.add_subcommand("stability", "full stability report for a catalog entry");
    c_stab->add_option("--catalog", catalog_path, "catalog file");
    c_stab->add_option("--entry", name, "catalog entry name")->required();

    auto* c_idx = app.add_subcommand("index", "index, nullity and Killing nullity");
    c_idx->add_option("--catalog", catalog_path, "catalog file");
    c_idx->add_option("--entry", name, "catalog entry name")->required();

    auto* c_lag = app.add_subcommand("lagrangian", "rule verdict for a minimal Lagrangian");
    c_lag->add_option("--ricci", ricci_str, "ambient Ricci sign: pos, nonpos or unknown");
    c_lag->add_option("--betti1", betti1, "first Betti number");
    c_lag->add_flag("--killing", killing_flag, "a nonzero Killing field exists");
    c_lag->add_option("--compare", compare_str,
                      "pulled-back vs intrinsic Ricci: le-rn, le-2rn, gt-2rn or unknown");
    c_lag->add_option("--identity-stable", identity_str, "identity map stability: yes or no");

    auto* c_cat = app.add_subcommand("catalog", "inspect or validate a catalog");
    std::string cat_action;
    c_cat->add_option("action", cat_action, "list or validate")
        ->required()
        ->check(CLI::IsMember({"list", "validate"}));
    c_cat->add_option("--catalog", catalog_path, "catalog file");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("geodstab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        Json rec = Json::object();
        std::string text;
        auto labels_of = [&]() { return Labels(labels.begin(), labels.end()); };
        if (app.got_subcommand(c_cas)) {
            RootDatum rd = build_root_datum(type);
            Rat c = casimir(rd, labels_of(), parse_rational(scale_str));
            rec["command"] = "casimir";
            rec["datum"] = rd.name;
            rec["labels"] = geodstab::detail::labels_json(labels_of());
            rec["scale"] = scale_str;
            rec["casimir"] = rational_str(c);
            text = rational_str(c) + "\n";
        } else if (app.got_subcommand(c_dim)) {
            RootDatum rd = build_root_datum(type);
            Int d = dimension(rd, labels_of());
            rec["command"] = "dim";
            rec["datum"] = rd.name;
            rec["labels"] = geodstab::detail::labels_json(labels_of());
            rec["dimension"] = d.str();
            text = d.str() + "\n";
        } else if (app.got_subcommand(c_wts)) {
            RootDatum rd = build_root_datum(type);
            WeightSystem ws = weight_system(rd, labels_of());
            rec["command"] = "weights";
            rec["datum"] = rd.name;
            rec["labels"] = geodstab::detail::labels_json(labels_of());
            Json list = Json::array();
            std::string lines;
            for (const auto& [w, m] : ws.entries) {
                Json wj = Json::object();
                wj["labels"] = geodstab::detail::labels_json(w);
                wj["multiplicity"] = m;
                list.push_back(wj);
                lines += geodstab::detail::labels_str(w) + " x" + std::to_string(m) + "\n";
            }
            rec["weights"] = list;
            rec["total_multiplicity"] = ws.total_multiplicity();
            text = lines + "total multiplicity " + std::to_string(ws.total_multiplicity()) + "\n";
        } else if (app.got_subcommand(c_enum)) {
            RootDatum rd = build_root_datum(type);
            auto en = enumerate_dominant(rd, parse_rational(max_cas_str), parse_rational(scale_str));
            rec["command"] = "enumerate";
            rec["datum"] = rd.name;
            rec["max_casimir"] = max_cas_str;
            rec["scale"] = scale_str;
            Json list = Json::array();
            std::string lines;
            for (const auto& e : en) {
                Json wj = Json::object();
                wj["labels"] = geodstab::detail::labels_json(e.labels);
                wj["casimir"] = rational_str(e.cas);
                list.push_back(wj);
                lines += geodstab::detail::labels_str(e.labels) + " casimir " +
                         rational_str(e.cas) + "\n";
            }
            rec["weights"] = list;
            text = lines;
        } else if (app.got_subcommand(c_branch)) {
            Catalog cat = load(resolve_catalog_path(catalog_path));
            const CatalogEntry& e = find_entry(cat, name);
            if (!e.machine_checked)
                throw error("entry " + name + " carries no embedding data");
            std::vector<Labels> parts;
            std::size_t pos = 0;
            for (const auto& f : e.spec.gn.factors) {
                if (pos + f.rank > labels.size())
                    throw error("expected " + std::to_string(e.spec.gn.label_rank()) +
                                " labels for " + e.spec.gn.name());
                parts.emplace_back(labels.begin() + pos, labels.begin() + pos + f.rank);
                pos += f.rank;
            }
            if (pos != labels.size())
                throw error("expected " + std::to_string(e.spec.gn.label_rank()) +
                            " labels for " + e.spec.gn.name());
            Decomposition dec = decompose(e.spec.kn_embedding, parts);
            rec["command"] = "branch";
            rec["embedding"] = e.spec.kn_embedding.name;
            rec["source"] = e.spec.gn.name();
            rec["target"] = e.spec.kn_embedding.target.name();
            rec["labels"] = detail::labels_list_json(parts);
            Json list = Json::array();
            std::string lines;
            for (const auto& [w, m] : dec) {
                Json cj = detail::weight_json(w);
                cj["multiplicity"] = m;
                Int d = product_dimension(e.spec.kn_embedding.target, w.factor_weights);
                cj["dimension"] = d.str();
                list.push_back(cj);
                lines += reductive_weight_str(w) + " x" + std::to_string(m) + " dim " + d.str() +
                         "\n";
            }
            rec["components"] = list;
            text = lines;
        } else if (app.got_subcommand(c_stab)) {
            Catalog cat = load(resolve_catalog_path(catalog_path));
            const CatalogEntry& e = find_entry(cat, name);
            StabilityReport r = evaluate(e.spec);
            rec["command"] = "stability";
            rec["entry"] = e.name;
            Json rj = detail::report_json(r);
            for (const auto& [k, v] : rj.items()) rec[k] = v;
            std::ostringstream os;
            detail::print_report(os, r);
            text = os.str();
        } else if (app.got_subcommand(c_idx)) {
            Catalog cat = load(resolve_catalog_path(catalog_path));
            const CatalogEntry& e = find_entry(cat, name);
            OhnitaCounts oc = ohnita_index(e.spec);
            rec["command"] = "index";
            rec["entry"] = e.name;
            rec["index"] = oc.index.str();
            rec["nullity"] = oc.nullity.str();
            rec["killing_nullity"] = oc.killing_nullity.str();
            text = "index: " + oc.index.str() + "\nnullity: " + oc.nullity.str() +
                   "\nkilling nullity: " + oc.killing_nullity.str() + "\n";
        } else if (app.got_subcommand(c_lag)) {
            LagrangianInputs in;
            in.ricci_ambient_sign = parse_ricci(ricci_str);
            in.betti1 = betti1;
            in.has_killing_field = killing_flag;
            in.comparison = parse_comparison(compare_str);
            if (!identity_str.empty()) {
                if (identity_str != "yes" && identity_str != "no")
                    throw error("--identity-stable takes yes or no");
                in.identity_map_stable = identity_str == "yes";
            }
            LagrangianReport r = lagrangian_verdict(in);
            rec["command"] = "lagrangian";
            rec["verdict"] = lagrangian_verdict_str(r.verdict);
            rec["rule_trace"] = r.rule_trace;
            text = "verdict: " + lagrangian_verdict_str(r.verdict) + "\n";
            for (const auto& t : r.rule_trace) text += "rule: " + t + "\n";
            if (in.ricci_ambient_sign == RicciSign::positive && in.betti1 > 0) {
                rec["index_lower_bound"] = index_lower_bound(in.betti1);
                text += "index lower bound: " + std::to_string(index_lower_bound(in.betti1)) +
                        "\n";
            }
        } else if (app.got_subcommand(c_cat)) {
            Catalog cat = load(resolve_catalog_path(catalog_path));
            if (cat_action == "list") {
                rec["command"] = "catalog-list";
                Json list = Json::array();
                std::string lines;
                for (const auto& e : cat.entries) {
                    Json ej = Json::object();
                    ej["name"] = e.name;
                    ej["expected_verdict"] = verdict_str(e.expected_verdict);
                    ej["machine_checked"] = e.machine_checked;
                    ej["provenance"] = e.provenance;
                    list.push_back(ej);
                    lines += e.name + " " + verdict_str(e.expected_verdict) +
                             (e.machine_checked ? " [machine]" : " [recorded]") + " " +
                             e.provenance + "\n";
                }
                rec["entries"] = list;
                text = lines;
            } else {
                ValidationReport vr = validate(cat);
                rec["command"] = "catalog-validate";
                Json list = Json::array();
                std::string lines;
                for (const auto& l : vr.lines) {
                    Json lj = Json::object();
                    lj["passed"] = l.passed;
                    lj["subject"] = l.subject;
                    lj["detail"] = l.detail;
                    list.push_back(lj);
                    lines += std::string(l.passed ? "PASS " : "FAIL ") + l.subject + ": " +
                             l.detail + "\n";
                }
                rec["checks"] = list;
                rec["all_passed"] = vr.all_passed;
                text = lines + (vr.all_passed ? "all checks passed\n" : "checks failed\n");
                if (structured)
                    out << rec.dump(2) << "\n";
                else
                    out << text;
                return vr.all_passed ? 0 : 2;
            }
        }
        if (structured)
            out << rec.dump(2) << "\n";
        else
            out << text;
        return 0;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace geodstab
