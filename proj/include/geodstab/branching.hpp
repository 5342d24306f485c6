#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "reps.hpp"

namespace geodstab {

// Compact connected group up to finite cover: semisimple factors plus a torus.
struct ReductiveDatum {
    std::vector<RootDatum> factors;
    int abelian_rank = 0;

    bool semisimple() const { return abelian_rank == 0; }
    int label_rank() const {
        int r = 0;
        for (const auto& f : factors) r += f.rank;
        return r;
    }
    int total_rank() const { return label_rank() + abelian_rank; }
    std::string name() const {
        std::string s;
        for (const auto& f : factors) {
            if (!s.empty()) s += "x";
            s += f.name;
        }
        for (int i = 0; i < abelian_rank; ++i) s += s.empty() ? "T1" : "xT1";
        return s.empty() ? "T0" : s;
    }

    bool operator==(const ReductiveDatum&) const = default;
};

// Highest weight of an irreducible: Dynkin labels per factor, torus charges.
// Charges stay rational; a non-matching cover of the torus shows up as
// fractional charges and is handled by the consumer, not rounded here.
struct ReductiveWeight {
    std::vector<Labels> factor_weights;
    std::vector<Rat> charges;

    bool operator==(const ReductiveWeight& o) const = default;
    bool operator<(const ReductiveWeight& o) const {
        if (factor_weights != o.factor_weights) return factor_weights < o.factor_weights;
        return std::lexicographical_compare(charges.begin(), charges.end(), o.charges.begin(),
                                            o.charges.end());
    }
};

using WeightMultiset = std::map<ReductiveWeight, long long>;
using Decomposition = std::map<ReductiveWeight, long long>;

inline std::string reductive_weight_str(const ReductiveWeight& w) {
    std::string s = "[";
    for (std::size_t f = 0; f < w.factor_weights.size(); ++f) {
        if (f) s += " ";
        s += detail::labels_str(w.factor_weights[f]);
    }
    s += "]";
    if (!w.charges.empty()) {
        s += "@(";
        for (std::size_t i = 0; i < w.charges.size(); ++i) {
            if (i) s += ",";
            s += rational_str(w.charges[i]);
        }
        s += ")";
    }
    return s;
}

inline void check_weight_shape(const ReductiveDatum& rd, const ReductiveWeight& w) {
    if (w.factor_weights.size() != rd.factors.size() ||
        static_cast<int>(w.charges.size()) != rd.abelian_rank)
        throw error("weight " + reductive_weight_str(w) + " does not fit " + rd.name());
    for (std::size_t f = 0; f < rd.factors.size(); ++f)
        check_rank(rd.factors[f], w.factor_weights[f]);
}

inline void check_parts(const ReductiveDatum& rd, const std::vector<Labels>& w) {
    if (w.size() != rd.factors.size())
        throw error("weight with " + std::to_string(w.size()) + " parts does not fit " +
                    rd.name());
}

inline Int product_dimension(const ReductiveDatum& rd, const std::vector<Labels>& w) {
    check_parts(rd, w);
    Int d = 1;
    for (std::size_t f = 0; f < rd.factors.size(); ++f) d *= dimension(rd.factors[f], w[f]);
    return d;
}

inline Rat product_casimir(const ReductiveDatum& rd, const std::vector<Rat>& scales,
                           const std::vector<Labels>& w) {
    check_parts(rd, w);
    if (scales.size() != rd.factors.size())
        throw error("casimir scale count does not match the factors of " + rd.name());
    Rat c(0);
    for (std::size_t f = 0; f < rd.factors.size(); ++f)
        c += casimir(rd.factors[f], w[f], scales[f]);
    return c;
}

// Weights of the outer tensor product over the factors, charges riding along.
inline WeightMultiset product_weight_system(const ReductiveDatum& rd, const ReductiveWeight& hw) {
    check_weight_shape(rd, hw);
    for (const auto& part : hw.factor_weights)
        if (!is_dominant(part))
            throw error("highest weight " + reductive_weight_str(hw) + " is not dominant");
    std::vector<WeightSystem> per_factor;
    per_factor.reserve(rd.factors.size());
    for (std::size_t f = 0; f < rd.factors.size(); ++f)
        per_factor.push_back(weight_system(rd.factors[f], hw.factor_weights[f]));

    WeightMultiset out;
    ReductiveWeight cur;
    cur.factor_weights.resize(rd.factors.size());
    cur.charges = hw.charges;
    std::vector<long long> mults(rd.factors.size(), 1);
    // Odometer over the per-factor weight maps.
    std::vector<std::map<Labels, long long>::const_iterator> its(rd.factors.size());
    for (std::size_t f = 0; f < rd.factors.size(); ++f) its[f] = per_factor[f].entries.begin();
    if (rd.factors.empty()) {
        out[cur] = 1;
        return out;
    }
    while (true) {
        long long m = 1;
        for (std::size_t f = 0; f < rd.factors.size(); ++f) {
            cur.factor_weights[f] = its[f]->first;
            m *= its[f]->second;
        }
        out[cur] += m;
        std::size_t f = rd.factors.size();
        while (f > 0) {
            --f;
            if (++its[f] != per_factor[f].entries.end()) break;
            its[f] = per_factor[f].entries.begin();
            if (f == 0) return out;
        }
    }
}

// How one group sits inside another, at the level of weight lattices.
// projection maps concatenated source Dynkin labels to target labels: first
// one row per target Dynkin label, then one row per torus charge.
struct EmbeddingData {
    std::string name;
    ReductiveDatum source;
    ReductiveDatum target;
    Mat projection;
    std::vector<Rat> casimir_scales;  // target-factor casimir normalizations in the source metric

    bool operator==(const EmbeddingData&) const = default;
};

inline void check_embedding(const EmbeddingData& emb) {
    if (!emb.source.semisimple())
        throw error("embedding " + emb.name + " needs a semisimple source");
    int rows = emb.target.total_rank();
    int cols = emb.source.label_rank();
    if (static_cast<int>(emb.projection.size()) != rows)
        throw error("embedding " + emb.name + " projection has wrong row count");
    for (const auto& row : emb.projection)
        if (static_cast<int>(row.size()) != cols)
            throw error("embedding " + emb.name + " projection has wrong column count");
    if (emb.casimir_scales.size() != emb.target.factors.size())
        throw error("embedding " + emb.name + " casimir scale count does not match target");
}

// Image of one source weight. Factor labels must come out integral; charges
// may be fractional.
inline ReductiveWeight project_weight(const EmbeddingData& emb, const Labels& concat) {
    std::vector<Rat> v(concat.size());
    for (std::size_t i = 0; i < concat.size(); ++i) v[i] = Rat(concat[i]);
    std::vector<Rat> img = mat_vec(emb.projection, v);
    ReductiveWeight out;
    int pos = 0;
    for (const auto& f : emb.target.factors) {
        Labels part(f.rank);
        for (int i = 0; i < f.rank; ++i) {
            if (!is_integer(img[pos]))
                throw error("embedding " + emb.name + " maps weight " + detail::labels_str(concat) +
                            " to the non-integral label " + rational_str(img[pos]) + " on " +
                            f.name);
            part[i] = static_cast<Label>(to_int(img[pos]));
            ++pos;
        }
        out.factor_weights.push_back(std::move(part));
    }
    for (int i = 0; i < emb.target.abelian_rank; ++i) out.charges.push_back(img[pos++]);
    return out;
}

// Weight multiset of the restriction of the source module with the given
// per-factor highest weights.
inline WeightMultiset restrict(const EmbeddingData& emb, const std::vector<Labels>& hw) {
    check_embedding(emb);
    ReductiveWeight top{hw, {}};
    check_weight_shape(emb.source, top);
    WeightMultiset source_ws = product_weight_system(emb.source, top);
    WeightMultiset out;
    for (const auto& [w, m] : source_ws) {
        Labels concat;
        for (const auto& part : w.factor_weights) concat.insert(concat.end(), part.begin(), part.end());
        out[project_weight(emb, concat)] += m;
    }
    return out;
}

// Peel highest weights off a restriction. Among surviving weights whose
// factor parts are all dominant, one of maximal total intrinsic casimir is a
// genuine highest weight: the module containing it contributes its own top,
// which would otherwise beat it.
inline Decomposition decompose(const EmbeddingData& emb, const std::vector<Labels>& hw) {
    WeightMultiset rem = restrict(emb, hw);
    std::vector<Rat> ones(emb.target.factors.size(), Rat(1));
    Decomposition out;
    while (!rem.empty()) {
        const ReductiveWeight* best = nullptr;
        Rat best_cas(0);
        for (const auto& [w, m] : rem) {
            bool dom = true;
            for (const auto& part : w.factor_weights)
                if (!is_dominant(part)) {
                    dom = false;
                    break;
                }
            if (!dom) continue;
            Rat c = product_casimir(emb.target, ones, w.factor_weights);
            if (!best || c > best_cas) {
                best = &w;
                best_cas = c;
            }
        }
        if (!best)
            throw error("restriction along " + emb.name + " left weights with no dominant top");
        ReductiveWeight key = *best;
        long long mult = rem.at(key);
        out[key] += mult;
        for (const auto& [w, m] : product_weight_system(emb.target, key)) {
            auto it = rem.find(w);
            if (it == rem.end() || it->second < mult * m)
                throw error("restriction along " + emb.name + " is not a sum of modules at " +
                            reductive_weight_str(w));
            it->second -= mult * m;
            if (it->second == 0) rem.erase(it);
        }
    }
    return out;
}

inline long long contains_module(const Decomposition& dec, const ReductiveWeight& w) {
    auto it = dec.find(w);
    return it == dec.end() ? 0 : it->second;
}

}  // namespace geodstab
