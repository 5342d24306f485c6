#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branching.hpp"

namespace geodstab {

enum class Verdict { stable, unstable };

inline std::string verdict_str(Verdict v) { return v == Verdict::stable ? "stable" : "unstable"; }

inline Verdict parse_verdict(const std::string& s) {
    if (s == "stable") return Verdict::stable;
    if (s == "unstable") return Verdict::unstable;
    throw error("unknown verdict '" + s + "'");
}

// Parity constraint cutting a candidate module down to the part seen by a
// disconnected isotropy group. A candidate with flattened labels x passes
// iff coeffs.x - rem is an even integer; a fractional value never passes.
struct SummandTag {
    std::vector<Rat> coeffs;
    int rem = 0;

    bool operator==(const SummandTag&) const = default;
};

inline bool tag_matches(const SummandTag& tag, const Labels& flat) {
    if (tag.coeffs.size() != flat.size()) throw error("parity tag has wrong coefficient count");
    Rat t(-tag.rem);
    for (std::size_t i = 0; i < flat.size(); ++i) t += tag.coeffs[i] * Rat(flat[i]);
    if (!is_integer(t)) return false;
    return to_int(t) % 2 == 0;
}

struct NormalSummand {
    ReductiveWeight kn_module;
    std::optional<SummandTag> tag;
    long long real_form_factor = 1;  // 2 when the module is one of a conjugate charge pair

    bool operator==(const NormalSummand&) const = default;
};

// One invariant eigenlevel of the normal Jacobi data: the isotropy-module
// content of that normal piece, and the ambient-algebra module whose casimir
// eigenvalue a_i the level carries.
struct NormalBlock {
    std::vector<NormalSummand> summands;
    std::vector<Labels> ambient_module;  // highest weight per transitive-group factor
    long long ambient_dim = 0;
    bool zero_level = false;  // ambient casimir 0, exempt from eigenvalue comparison

    bool operator==(const NormalBlock&) const = default;
};

struct SubmanifoldSpec {
    std::string name;
    ReductiveDatum gn;           // group acting transitively on the submanifold, semisimple
    std::vector<Rat> gn_scales;  // casimir normalization per factor in the ambient metric
    EmbeddingData kn_embedding;  // isotropy subgroup of gn
    std::vector<NormalBlock> blocks;
    int rank_n = 0;
    int rank_m = 0;
    bool ambient_is_group = false;
    bool ambient_is_bottom = false;
    bool n_is_subgroup = false;
    bool centralizer_discrete = false;
    bool flat_witness = false;  // the submanifold has a flat factor moved by isometries
    std::optional<Int> euler_plus;

    bool operator==(const SubmanifoldSpec&) const = default;
};

struct Destabilizer {
    std::vector<Labels> labels;
    Rat cas;
    long long multiplicity;
    Int dim;
    std::size_t block;
    Rat level;  // the undercut eigenvalue a_i
};

struct StabilityReport {
    Verdict verdict = Verdict::stable;
    std::vector<Destabilizer> destabilizers;
    std::optional<Int> index, nullity, killing_nullity;
    std::vector<std::string> rule_trace;
};

namespace detail {

inline bool trivial_module(const ReductiveWeight& w) {
    for (const auto& part : w.factor_weights)
        for (Label l : part)
            if (l != 0) return false;
    for (const auto& c : w.charges)
        if (c != 0) return false;
    return true;
}

inline Labels flatten(const std::vector<Labels>& parts) {
    Labels flat;
    for (const auto& p : parts) flat.insert(flat.end(), p.begin(), p.end());
    return flat;
}

inline std::string candidate_str(const std::vector<Labels>& parts) {
    std::string s;
    for (std::size_t f = 0; f < parts.size(); ++f) {
        if (f) s += " ";
        s += labels_str(parts[f]);
    }
    return s;
}

}  // namespace detail

inline void validate_spec(const SubmanifoldSpec& s) {
    if (!s.gn.semisimple())
        throw error(s.name + ": the transitive group datum must be semisimple");
    if (s.gn.factors.empty()) throw error(s.name + ": the transitive group datum is empty");
    if (s.gn_scales.size() != s.gn.factors.size())
        throw error(s.name + ": one casimir scale per group factor is required");
    for (const Rat& sc : s.gn_scales)
        if (sc <= 0) throw error(s.name + ": casimir scales must be positive");
    check_embedding(s.kn_embedding);
    if (s.kn_embedding.source.factors.size() != s.gn.factors.size())
        throw error(s.name + ": isotropy embedding source does not match the group datum");
    for (std::size_t f = 0; f < s.gn.factors.size(); ++f)
        if (s.kn_embedding.source.factors[f].name != s.gn.factors[f].name)
            throw error(s.name + ": isotropy embedding source does not match the group datum");
    for (const auto& b : s.blocks) {
        if (b.ambient_module.size() != s.gn.factors.size())
            throw error(s.name + ": a block ambient module does not fit the group datum");
        for (std::size_t f = 0; f < s.gn.factors.size(); ++f) {
            check_rank(s.gn.factors[f], b.ambient_module[f]);
            if (!is_dominant(b.ambient_module[f]))
                throw error(s.name + ": block ambient module is not dominant");
        }
        if (b.ambient_dim <= 0) throw error(s.name + ": block ambient dimension must be positive");
        Rat a = product_casimir(s.gn, s.gn_scales, b.ambient_module);
        if (b.zero_level && a != 0)
            throw error(s.name + ": zero-level block has nonzero ambient casimir " +
                        rational_str(a));
        if (!b.zero_level && a <= 0)
            throw error(s.name + ": block ambient casimir " + rational_str(a) +
                        " is not positive; mark the block zero-level");
        for (const auto& sm : b.summands) {
            check_weight_shape(s.kn_embedding.target, sm.kn_module);
            if (sm.real_form_factor < 1)
                throw error(s.name + ": real form factor must be at least 1");
            if (sm.tag) {
                if (static_cast<int>(sm.tag->coeffs.size()) != s.gn.label_rank())
                    throw error(s.name + ": parity tag has wrong coefficient count");
                if (sm.tag->rem != 0 && sm.tag->rem != 1)
                    throw error(s.name + ": parity tag remainder must be 0 or 1");
            }
        }
    }
}

// A candidate module of the transitive group, with its multiplicity in one
// normal block and its casimir eigenvalue in the ambient normalization.
struct Contribution {
    std::vector<Labels> labels;
    Rat cas;
    long long multiplicity;
    Int dim;
};

namespace detail {

using DecompCache = std::map<std::vector<Labels>, Decomposition>;

inline const Decomposition& cached_decompose(const EmbeddingData& emb,
                                             const std::vector<Labels>& hw, DecompCache& cache) {
    auto it = cache.find(hw);
    if (it == cache.end()) it = cache.emplace(hw, decompose(emb, hw)).first;
    return it->second;
}

inline long long block_multiplicity(const SubmanifoldSpec& s, const NormalBlock& b,
                                    const std::vector<Labels>& cand, DecompCache& cache) {
    const Decomposition& dec = cached_decompose(s.kn_embedding, cand, cache);
    Labels flat = flatten(cand);
    long long m = 0;
    for (const auto& sm : b.summands) {
        if (sm.tag && !tag_matches(*sm.tag, flat)) continue;
        m += contains_module(dec, sm.kn_module) * sm.real_form_factor;
    }
    return m;
}

// All candidates with total casimir <= bound and positive multiplicity in
// block bi, ordered by (casimir, labels).
inline std::vector<Contribution> block_contributions(const SubmanifoldSpec& s, std::size_t bi,
                                                     const Rat& bound, DecompCache& cache) {
    const NormalBlock& b = s.blocks.at(bi);
    std::vector<std::vector<EnumeratedWeight>> per_factor;
    per_factor.reserve(s.gn.factors.size());
    for (std::size_t f = 0; f < s.gn.factors.size(); ++f)
        per_factor.push_back(enumerate_dominant(s.gn.factors[f], bound, s.gn_scales[f]));

    std::vector<Contribution> out;
    std::vector<Labels> cand(s.gn.factors.size());
    auto walk = [&](auto&& self, std::size_t f, const Rat& used) -> void {
        if (f == per_factor.size()) {
            long long m = block_multiplicity(s, b, cand, cache);
            if (m > 0) out.push_back({cand, used, m, product_dimension(s.gn, cand)});
            return;
        }
        for (const auto& ew : per_factor[f]) {
            if (used + ew.cas > bound) break;  // per-factor lists are casimir-sorted
            cand[f] = ew.labels;
            self(self, f + 1, used + ew.cas);
        }
    };
    walk(walk, 0, Rat(0));
    std::sort(out.begin(), out.end(), [](const Contribution& x, const Contribution& y) {
        return x.cas != y.cas ? x.cas < y.cas : x.labels < y.labels;
    });
    return out;
}

}  // namespace detail

// Exposed for property tests: the eigenvalue ledger of one block up to an
// arbitrary casimir bound.
inline std::vector<Contribution> analyze_block(const SubmanifoldSpec& s, std::size_t block_index,
                                               const Rat& bound) {
    validate_spec(s);
    detail::DecompCache cache;
    return detail::block_contributions(s, block_index, bound, cache);
}

struct OhnitaCounts {
    Int index = 0, nullity = 0, killing_nullity = 0;
    std::vector<Destabilizer> destabilizers;
    std::vector<std::string> trace;
};

// Index, nullity and Killing nullity from the eigenvalue comparison: a
// candidate module destabilizes a block when its casimir falls below the
// block's ambient eigenvalue, and sits in the nullity when it ties. Each
// match contributes multiplicity times the full module dimension. Blocks at
// eigenvalue zero carry no comparison; a witnessed flat factor there makes
// one synthetic destabilizing direction. Empty block lists give zeros.
inline OhnitaCounts ohnita_index(const SubmanifoldSpec& s) {
    validate_spec(s);
    detail::DecompCache cache;
    OhnitaCounts oc;
    for (std::size_t bi = 0; bi < s.blocks.size(); ++bi) {
        const NormalBlock& b = s.blocks[bi];
        if (!b.summands.empty()) oc.killing_nullity += b.ambient_dim;
        if (b.zero_level) {
            bool plain_trivial = false;
            for (const auto& sm : b.summands)
                if (!sm.tag && detail::trivial_module(sm.kn_module)) plain_trivial = true;
            if (plain_trivial && s.flat_witness) {
                std::vector<Labels> zero;
                for (const auto& f : s.gn.factors) zero.emplace_back(f.rank, 0);
                oc.destabilizers.push_back({zero, Rat(0), 1, Int(1), bi, Rat(0)});
                oc.index += 1;
                oc.trace.push_back("block " + std::to_string(bi) +
                                   ": flat factor moved by the ambient isometry group");
            }
            continue;
        }
        Rat a = product_casimir(s.gn, s.gn_scales, b.ambient_module);
        for (const auto& c : detail::block_contributions(s, bi, a, cache)) {
            if (c.cas < a) {
                oc.destabilizers.push_back({c.labels, c.cas, c.multiplicity, c.dim, bi, a});
                oc.index += Int(c.multiplicity) * c.dim;
                oc.trace.push_back("block " + std::to_string(bi) + ": module " +
                                   detail::candidate_str(c.labels) + " at casimir " +
                                   rational_str(c.cas) + " undercuts " + rational_str(a));
            } else {
                oc.nullity += Int(c.multiplicity) * c.dim;
            }
        }
    }
    return oc;
}

inline StabilityReport theorem21_verdict(const SubmanifoldSpec& s) {
    if (s.blocks.empty()) throw error(s.name + ": no normal blocks to analyze");
    OhnitaCounts oc = ohnita_index(s);
    StabilityReport r;
    r.destabilizers = std::move(oc.destabilizers);
    r.rule_trace = std::move(oc.trace);
    r.index = oc.index;
    r.nullity = oc.nullity;
    r.killing_nullity = oc.killing_nullity;
    r.verdict = oc.index > 0 ? Verdict::unstable : Verdict::stable;
    r.rule_trace.push_back(r.verdict == Verdict::unstable
                               ? "eigenvalue comparison found destabilizing modules"
                               : "eigenvalue comparison found no destabilizing module");
    return r;
}

// Instability shortcut: a discrete centralizer leaves no room for the
// invariant normal direction a plain trivial summand provides, so moving off
// the submanifold along it shrinks volume.
inline std::optional<Verdict> prop31_check(const SubmanifoldSpec& s) {
    if (!s.centralizer_discrete) return std::nullopt;
    for (const auto& b : s.blocks) {
        if (b.zero_level) continue;
        for (const auto& sm : b.summands)
            if (!sm.tag && detail::trivial_module(sm.kn_module)) return Verdict::unstable;
    }
    return std::nullopt;
}

// Stability shortcut: a compact subgroup of full rank inside a group taken
// with its bi-invariant metric at the bottom of its local isometry class.
inline std::optional<Verdict> prop32_check(const SubmanifoldSpec& s) {
    if (s.ambient_is_group && s.ambient_is_bottom && s.n_is_subgroup && s.rank_n == s.rank_m)
        return Verdict::stable;
    return std::nullopt;
}

// Full evaluation: run the eigenvalue comparison when block data is present
// and cross-check it against whichever shortcuts fire. Disagreement means
// the spec data is wrong, so it is a hard error rather than a verdict.
inline StabilityReport evaluate(const SubmanifoldSpec& s) {
    auto p31 = prop31_check(s);
    auto p32 = prop32_check(s);
    if (p31 && p32)
        throw error(s.name + ": the invariant-direction rule says unstable but the "
                             "full-rank-subgroup rule says stable");
    if (!s.blocks.empty()) {
        StabilityReport r = theorem21_verdict(s);
        if (p31 && r.verdict != Verdict::unstable)
            throw error(s.name + ": eigenvalue comparison says stable but the "
                                 "invariant-direction rule says unstable");
        if (p32 && r.verdict != Verdict::stable)
            throw error(s.name + ": eigenvalue comparison says unstable but the "
                                 "full-rank-subgroup rule says stable");
        if (p31)
            r.rule_trace.push_back("invariant-direction rule agrees: unstable");
        if (p32)
            r.rule_trace.push_back("full-rank-subgroup rule agrees: stable");
        return r;
    }
    validate_spec(s);
    StabilityReport r;
    if (p32) {
        r.verdict = Verdict::stable;
        r.rule_trace.push_back("full-rank subgroup of a bottom group manifold");
        return r;
    }
    throw error(s.name + ": no normal blocks and no applicable shortcut rule");
}

}  // namespace geodstab
