#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stability.hpp"

namespace geodstab {

using Json = nlohmann::ordered_json;

// One curated submanifold record. Machine-checked entries carry full engine
// data; the rest record a verdict plus the structural flags the shortcut
// rules can still act on.
struct CatalogEntry {
    std::string name;
    std::string provenance;
    std::map<std::string, long long> params;
    bool machine_checked = false;
    Verdict expected_verdict = Verdict::stable;
    std::optional<Int> expected_index, expected_nullity, expected_killing_nullity;
    SubmanifoldSpec spec;

    bool operator==(const CatalogEntry&) const = default;
};

// Ambient space with its recorded polar Euler numbers, for the fixed-point
// counting identity 2^rank = 1 + sum of polar Euler numbers.
struct Grouping {
    std::string name;
    int rank = 0;
    std::vector<Int> euler_plus;
    std::vector<std::string> members;

    bool operator==(const Grouping&) const = default;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    std::vector<Grouping> groupings;

    bool operator==(const Catalog&) const = default;
};

namespace detail {

inline Rat json_rat(const Json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw error(where + ": expected a rational as \"p/q\" string");
}

inline Int json_int(const Json& j, const std::string& where) {
    if (j.is_string()) {
        Rat r = parse_rational(j.get<std::string>());
        if (!is_integer(r)) throw error(where + ": expected an integer");
        return to_int(r);
    }
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw error(where + ": expected an integer");
}

inline Labels json_labels(const Json& j, const std::string& where) {
    if (!j.is_array()) throw error(where + ": expected a label array");
    Labels out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw error(where + ": labels must be integers");
        out.push_back(x.get<long long>());
    }
    return out;
}

inline ReductiveDatum json_datum(const Json& j, const std::string& where) {
    ReductiveDatum rd;
    if (!j.is_object()) throw error(where + ": expected a group datum object");
    for (const auto& f : j.value("factors", Json::array()))
        rd.factors.push_back(build_root_datum(f.get<std::string>()));
    rd.abelian_rank = j.value("abelian_rank", 0);
    if (rd.abelian_rank < 0) throw error(where + ": abelian rank must be nonnegative");
    return rd;
}

inline std::vector<Rat> json_rats(const Json& j, const std::string& where) {
    std::vector<Rat> out;
    for (const auto& x : j) out.push_back(json_rat(x, where));
    return out;
}

inline Json rat_json(const Rat& r) { return Json(rational_str(r)); }

inline Json labels_json(const Labels& l) {
    Json a = Json::array();
    for (Label x : l) a.push_back(x);
    return a;
}

inline Json datum_json(const ReductiveDatum& rd) {
    Json j = Json::object();
    Json f = Json::array();
    for (const auto& x : rd.factors) f.push_back(x.name);
    j["factors"] = f;
    j["abelian_rank"] = rd.abelian_rank;
    return j;
}

inline Json rats_json(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(rat_json(r));
    return a;
}

// Columnwise lint: every integer label vector must project to integer labels
// on each target factor, which holds exactly when each column of the factor
// rows is integral.
inline void check_projection_columns(const EmbeddingData& emb, const std::string& entry) {
    int factor_rows = emb.target.label_rank();
    for (int col = 0; col < emb.source.label_rank(); ++col)
        for (int row = 0; row < factor_rows; ++row)
            if (!is_integer(emb.projection[row][col]))
                throw error(entry + ": projection takes fundamental weight " +
                            std::to_string(col + 1) + " to a non-integral factor label");
}

inline SubmanifoldSpec spec_from_json(const Json& j, const std::string& name,
                                      bool machine_checked) {
    SubmanifoldSpec s;
    s.name = name;
    s.rank_n = j.value("rank_n", 0);
    s.rank_m = j.value("rank_m", 0);
    s.ambient_is_group = j.value("ambient_is_group", false);
    s.ambient_is_bottom = j.value("ambient_is_bottom", false);
    s.n_is_subgroup = j.value("n_is_subgroup", false);
    s.centralizer_discrete = j.value("centralizer_discrete", false);
    s.flat_witness = j.value("flat_witness", false);
    if (j.contains("euler_plus")) s.euler_plus = json_int(j["euler_plus"], name + ".euler_plus");
    if (!machine_checked) {
        if (j.contains("gn") || j.contains("blocks"))
            throw error(name + ": engine data on an entry not marked machine_checked");
        return s;
    }
    s.gn = json_datum(j.at("gn"), name + ".gn");
    s.gn_scales = json_rats(j.at("gn_scales"), name + ".gn_scales");
    EmbeddingData emb;
    emb.name = name + "-isotropy";
    emb.source = s.gn;
    emb.target = json_datum(j.at("kn"), name + ".kn");
    for (const auto& row : j.at("kn_projection"))
        emb.projection.push_back(json_rats(row, name + ".kn_projection"));
    emb.casimir_scales = json_rats(j.value("kn_casimir_scales", Json::array()),
                                   name + ".kn_casimir_scales");
    s.kn_embedding = std::move(emb);
    for (const auto& bj : j.at("blocks")) {
        NormalBlock b;
        for (const auto& mj : bj.at("ambient_module"))
            b.ambient_module.push_back(json_labels(mj, name + ".ambient_module"));
        b.ambient_dim = static_cast<long long>(json_int(bj.at("ambient_dim"), name));
        b.zero_level = bj.value("zero_level", false);
        for (const auto& sj : bj.at("summands")) {
            NormalSummand sm;
            for (const auto& fw : sj.value("factor_weights", Json::array()))
                sm.kn_module.factor_weights.push_back(json_labels(fw, name + ".summand"));
            sm.kn_module.charges = json_rats(sj.value("charges", Json::array()), name);
            sm.real_form_factor = sj.value("real_form_factor", 1);
            if (sj.contains("tag")) {
                SummandTag tag;
                tag.coeffs = json_rats(sj.at("tag").at("coeffs"), name + ".tag");
                tag.rem = sj.at("tag").value("rem", 0);
                sm.tag = std::move(tag);
            }
            b.summands.push_back(std::move(sm));
        }
        s.blocks.push_back(std::move(b));
    }
    return s;
}

inline Json spec_to_json(const SubmanifoldSpec& s, bool machine_checked) {
    Json j = Json::object();
    if (machine_checked) {
        j["gn"] = datum_json(s.gn);
        j["gn_scales"] = rats_json(s.gn_scales);
        j["kn"] = datum_json(s.kn_embedding.target);
        Json proj = Json::array();
        for (const auto& row : s.kn_embedding.projection) proj.push_back(rats_json(row));
        j["kn_projection"] = proj;
        j["kn_casimir_scales"] = rats_json(s.kn_embedding.casimir_scales);
        Json blocks = Json::array();
        for (const auto& b : s.blocks) {
            Json bj = Json::object();
            Json am = Json::array();
            for (const auto& m : b.ambient_module) am.push_back(labels_json(m));
            bj["ambient_module"] = am;
            bj["ambient_dim"] = b.ambient_dim;
            if (b.zero_level) bj["zero_level"] = true;
            Json sms = Json::array();
            for (const auto& sm : b.summands) {
                Json sj = Json::object();
                Json fw = Json::array();
                for (const auto& p : sm.kn_module.factor_weights) fw.push_back(labels_json(p));
                sj["factor_weights"] = fw;
                sj["charges"] = rats_json(sm.kn_module.charges);
                sj["real_form_factor"] = sm.real_form_factor;
                if (sm.tag) {
                    Json tj = Json::object();
                    tj["coeffs"] = rats_json(sm.tag->coeffs);
                    tj["rem"] = sm.tag->rem;
                    sj["tag"] = tj;
                }
                sms.push_back(sj);
            }
            bj["summands"] = sms;
            blocks.push_back(bj);
        }
        j["blocks"] = blocks;
    }
    j["rank_n"] = s.rank_n;
    j["rank_m"] = s.rank_m;
    j["ambient_is_group"] = s.ambient_is_group;
    j["ambient_is_bottom"] = s.ambient_is_bottom;
    j["n_is_subgroup"] = s.n_is_subgroup;
    j["centralizer_discrete"] = s.centralizer_discrete;
    j["flat_witness"] = s.flat_witness;
    if (s.euler_plus) j["euler_plus"] = static_cast<long long>(*s.euler_plus);
    return j;
}

inline Catalog catalog_from_json(const Json& root) {
    Catalog cat;
    std::set<std::string> names;
    for (const auto& ej : root.value("entries", Json::array())) {
        CatalogEntry e;
        e.name = ej.at("name").get<std::string>();
        if (!names.insert(e.name).second) throw error("duplicate catalog entry " + e.name);
        e.provenance = ej.value("provenance", "");
        if (e.provenance.empty()) throw error(e.name + ": provenance must be nonempty");
        if (ej.contains("params"))
            for (const auto& [k, v] : ej["params"].items()) e.params[k] = v.get<long long>();
        e.machine_checked = ej.value("machine_checked", false);
        e.expected_verdict = parse_verdict(ej.at("expected_verdict").get<std::string>());
        if (ej.contains("expected_index"))
            e.expected_index = detail::json_int(ej["expected_index"], e.name);
        if (ej.contains("expected_nullity"))
            e.expected_nullity = detail::json_int(ej["expected_nullity"], e.name);
        if (ej.contains("expected_killing_nullity"))
            e.expected_killing_nullity = detail::json_int(ej["expected_killing_nullity"], e.name);
        e.spec = detail::spec_from_json(ej.at("spec"), e.name, e.machine_checked);
        if (e.spec.rank_n > e.spec.rank_m)
            throw error(e.name + ": submanifold rank exceeds ambient rank");
        if (e.spec.euler_plus && *e.spec.euler_plus <= 0)
            throw error(e.name + ": euler_plus must be positive");
        if (e.machine_checked) {
            if (e.spec.blocks.empty())
                throw error(e.name + ": machine-checked entries need normal blocks");
            validate_spec(e.spec);
            detail::check_projection_columns(e.spec.kn_embedding, e.name);
        }
        cat.entries.push_back(std::move(e));
    }
    for (const auto& gj : root.value("groupings", Json::array())) {
        Grouping g;
        g.name = gj.at("name").get<std::string>();
        g.rank = gj.at("rank").get<int>();
        if (g.rank < 0) throw error("grouping " + g.name + ": rank must be nonnegative");
        for (const auto& x : gj.value("euler_plus", Json::array()))
            g.euler_plus.push_back(detail::json_int(x, "grouping " + g.name));
        for (const auto& x : gj.value("members", Json::array()))
            g.members.push_back(x.get<std::string>());
        cat.groupings.push_back(std::move(g));
    }
    return cat;
}

}  // namespace detail

inline Catalog parse_catalog(const std::string& text) {
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    if (trimmed.empty()) return {};
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw error(std::string("catalog parse error: ") + e.what());
    }
    if (!root.is_object()) throw error("catalog root must be an object");
    try {
        return detail::catalog_from_json(root);
    } catch (const Json::exception& e) {
        // Missing or mistyped fields surface here rather than as raw
        // library exceptions.
        throw error(std::string("catalog structure error: ") + e.what());
    }
}

inline Catalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open catalog file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

inline std::string serialize(const Catalog& cat) {
    Json root = Json::object();
    Json entries = Json::array();
    for (const auto& e : cat.entries) {
        Json ej = Json::object();
        ej["name"] = e.name;
        ej["provenance"] = e.provenance;
        if (!e.params.empty()) {
            Json pj = Json::object();
            for (const auto& [k, v] : e.params) pj[k] = v;
            ej["params"] = pj;
        }
        ej["machine_checked"] = e.machine_checked;
        ej["expected_verdict"] = verdict_str(e.expected_verdict);
        if (e.expected_index) ej["expected_index"] = e.expected_index->str();
        if (e.expected_nullity) ej["expected_nullity"] = e.expected_nullity->str();
        if (e.expected_killing_nullity)
            ej["expected_killing_nullity"] = e.expected_killing_nullity->str();
        ej["spec"] = detail::spec_to_json(e.spec, e.machine_checked);
        entries.push_back(ej);
    }
    root["entries"] = entries;
    Json groupings = Json::array();
    for (const auto& g : cat.groupings) {
        Json gj = Json::object();
        gj["name"] = g.name;
        gj["rank"] = g.rank;
        Json ep = Json::array();
        for (const auto& x : g.euler_plus) ep.push_back(static_cast<long long>(x));
        gj["euler_plus"] = ep;
        if (!g.members.empty()) {
            Json mj = Json::array();
            for (const auto& m : g.members) mj.push_back(m);
            gj["members"] = mj;
        }
        groupings.push_back(gj);
    }
    root["groupings"] = groupings;
    return root.dump(2) + "\n";
}

inline const CatalogEntry& find_entry(const Catalog& cat, const std::string& name) {
    for (const auto& e : cat.entries)
        if (e.name == name) return e;
    throw error("no catalog entry named " + name);
}

struct ValidationLine {
    bool passed = false;
    std::string subject;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationLine> lines;
    bool all_passed = true;

    void add(bool ok, const std::string& subject, const std::string& detail) {
        lines.push_back({ok, subject, detail});
        if (!ok) all_passed = false;
    }
};

// Recompute whatever each record makes checkable and compare with what it
// claims. Failures are report lines, never exceptions.
inline ValidationReport validate(const Catalog& cat) {
    ValidationReport rep;
    for (const auto& e : cat.entries) {
        if (e.machine_checked) {
            try {
                StabilityReport r = evaluate(e.spec);
                std::string msg = "computed " + verdict_str(r.verdict);
                bool ok = r.verdict == e.expected_verdict;
                if (e.expected_index && r.index) {
                    msg += ", index " + r.index->str();
                    ok = ok && *r.index == *e.expected_index;
                }
                if (e.expected_nullity && r.nullity) {
                    msg += ", nullity " + r.nullity->str();
                    ok = ok && *r.nullity == *e.expected_nullity;
                }
                if (e.expected_killing_nullity && r.killing_nullity) {
                    msg += ", killing nullity " + r.killing_nullity->str();
                    ok = ok && *r.killing_nullity == *e.expected_killing_nullity;
                }
                rep.add(ok, e.name,
                        ok ? msg : msg + " against recorded " + verdict_str(e.expected_verdict));
            } catch (const error& err) {
                rep.add(false, e.name, err.what());
            }
        } else {
            auto p32 = prop32_check(e.spec);
            if (p32)
                rep.add(*p32 == e.expected_verdict, e.name,
                        "full-rank-subgroup rule gives " + verdict_str(*p32) + " against recorded " +
                            verdict_str(e.expected_verdict));
            else
                rep.add(true, e.name, "recorded verdict (not machine checked)");
        }
    }
    for (const auto& g : cat.groupings) {
        Int total = 1;
        for (const auto& x : g.euler_plus) total += x;
        bool ok = (Int(1) << g.rank) == total;
        rep.add(ok, "grouping " + g.name,
                "fixed-point count 2^" + std::to_string(g.rank) + " against 1+" +
                    std::to_string(g.euler_plus.size()) + " polar Euler numbers" +
                    (ok ? "" : " MISMATCH"));
        std::vector<Int> recorded;
        bool complete = !g.members.empty();
        for (const auto& m : g.members) {
            bool found = false;
            for (const auto& e : cat.entries)
                if (e.name == m) {
                    found = true;
                    if (e.spec.euler_plus)
                        recorded.push_back(*e.spec.euler_plus);
                    else
                        complete = false;
                }
            if (!found) rep.add(false, "grouping " + g.name, "missing member " + m);
        }
        if (complete) {
            std::vector<Int> want = g.euler_plus;
            std::sort(want.begin(), want.end());
            std::sort(recorded.begin(), recorded.end());
            if (want != recorded)
                rep.add(false, "grouping " + g.name,
                        "member Euler numbers do not match the grouping list");
        }
    }
    return rep;
}

}  // namespace geodstab
