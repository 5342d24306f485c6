#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rootsys.hpp"

namespace geodstab {

// Full weight diagram of one irreducible: weight -> multiplicity.
struct WeightSystem {
    std::map<Labels, long long> entries;
    std::string datum;

    long long total_multiplicity() const {
        long long t = 0;
        for (const auto& [w, m] : entries) t += m;
        return t;
    }
};

namespace detail {

inline std::string labels_str(const Labels& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

inline void require_dominant(const RootDatum& rd, const Labels& w) {
    check_rank(rd, w);
    if (!is_dominant(w))
        throw error("weight " + labels_str(w) + " is not dominant for " + rd.name);
}

// lambda - dom(nu) must be a nonnegative-integer combination of simple roots
// for nu to lie in the weight diagram of V(lambda).
inline bool module_weight(const RootDatum& rd, const Labels& lambda, const Labels& nu) {
    Labels dom = to_dominant(rd, nu).first;
    std::vector<Rat> diff(rd.rank);
    for (int i = 0; i < rd.rank; ++i) diff[i] = Rat(lambda[i] - dom[i]);
    std::vector<Rat> coords = mat_vec(rd.cartan_inv, diff);
    for (const Rat& c : coords)
        if (!is_integer(c) || c < 0) return false;
    return true;
}

}  // namespace detail

// Weyl dimension formula, exact.
inline Int dimension(const RootDatum& rd, const Labels& lambda) {
    detail::require_dominant(rd, lambda);
    Labels lr(lambda);
    for (int i = 0; i < rd.rank; ++i) lr[i] += 1;  // lambda + rho
    Rat num(1), den(1);
    for (const auto& alpha : rd.pos_roots) {
        Labels al = labels_of_root(rd, alpha);
        num *= inner_product(rd, lr, al);
        den *= inner_product(rd, rd.weyl_vector, al);
    }
    return to_int(num / den);
}

// Casimir eigenvalue scale * <lambda, lambda + 2 rho>; the scale carries the
// normalization of this factor's form inside a larger ambient algebra.
inline Rat casimir(const RootDatum& rd, const Labels& lambda, const Rat& scale = Rat(1)) {
    detail::require_dominant(rd, lambda);
    if (scale <= 0) throw error("casimir scale must be positive");
    Labels shifted(lambda);
    for (int i = 0; i < rd.rank; ++i) shifted[i] += 2;
    return scale * inner_product(rd, lambda, shifted);
}

// Freudenthal recursion. Dominant multiplicities are computed top-down by
// level and spread over Weyl orbits; the level ceiling guards runaway inputs.
inline WeightSystem weight_system(const RootDatum& rd, const Labels& lambda,
                                  long long max_level = 20000) {
    detail::require_dominant(rd, lambda);

    std::vector<Labels> simple_labels(rd.rank);
    for (int i = 0; i < rd.rank; ++i) {
        Coords e(rd.rank, 0);
        e[i] = 1;
        simple_labels[i] = labels_of_root(rd, e);
    }

    // All module weights, grouped by level = height of lambda - weight.
    std::set<Labels> seen{lambda};
    std::vector<std::vector<Labels>> by_level{{lambda}};
    std::vector<Labels> frontier{lambda};
    while (!frontier.empty()) {
        if (static_cast<long long>(by_level.size()) > max_level)
            throw error("weight system of " + detail::labels_str(lambda) + " for " + rd.name +
                        " exceeds the level ceiling " + std::to_string(max_level));
        std::vector<Labels> next;
        for (const auto& w : frontier)
            for (int i = 0; i < rd.rank; ++i) {
                Labels w2(w);
                for (int k = 0; k < rd.rank; ++k) w2[k] -= simple_labels[i][k];
                if (seen.count(w2) || !detail::module_weight(rd, lambda, w2)) continue;
                seen.insert(w2);
                next.push_back(w2);
            }
        if (!next.empty()) by_level.push_back(next);
        frontier = std::move(next);
    }

    std::vector<Labels> pos_labels;
    pos_labels.reserve(rd.pos_roots.size());
    for (const auto& alpha : rd.pos_roots) pos_labels.push_back(labels_of_root(rd, alpha));

    Labels lr(lambda);
    for (int i = 0; i < rd.rank; ++i) lr[i] += 1;
    const Rat top_norm = inner_product(rd, lr, lr);

    std::map<Labels, long long> dom_mult;
    dom_mult[lambda] = 1;
    for (std::size_t lev = 1; lev < by_level.size(); ++lev) {
        for (const auto& mu : by_level[lev]) {
            if (!is_dominant(mu)) continue;
            Rat acc(0);
            for (const auto& al : pos_labels) {
                Labels nu(mu);
                while (true) {
                    for (int k = 0; k < rd.rank; ++k) nu[k] += al[k];
                    if (!detail::module_weight(rd, lambda, nu)) break;
                    auto it = dom_mult.find(to_dominant(rd, nu).first);
                    if (it == dom_mult.end())
                        throw error("Freudenthal saw an unprocessed higher weight");
                    acc += Rat(it->second) * inner_product(rd, nu, al);
                }
            }
            Labels mr(mu);
            for (int i = 0; i < rd.rank; ++i) mr[i] += 1;
            Rat denom = top_norm - inner_product(rd, mr, mr);
            dom_mult[mu] = static_cast<long long>(to_int(2 * acc / denom));
        }
    }

    WeightSystem ws;
    ws.datum = rd.name;
    for (const auto& [mu, m] : dom_mult) {
        // Fill the Weyl orbit of mu; multiplicity is orbit-constant.
        std::set<Labels> orbit{mu};
        std::vector<Labels> orb_frontier{mu};
        while (!orb_frontier.empty()) {
            std::vector<Labels> nxt;
            for (const auto& w : orb_frontier)
                for (int i = 0; i < rd.rank; ++i) {
                    Labels w2 = reflect(rd, w, i);
                    if (orbit.insert(w2).second) nxt.push_back(w2);
                }
            orb_frontier = std::move(nxt);
        }
        for (const auto& w : orbit) ws.entries[w] = m;
    }
    return ws;
}

struct EnumeratedWeight {
    Labels labels;
    Rat cas;
};

// All dominant weights with casimir <= bound, nondecreasing in casimir.
// Each label i is capped by bound / (2 scale <omega_i, rho>), which is
// complete because <lambda, lambda + 2 rho> >= 2 <lambda, rho>.
inline std::vector<EnumeratedWeight> enumerate_dominant(const RootDatum& rd, const Rat& bound,
                                                        const Rat& scale = Rat(1),
                                                        long long box_cap = 5000000) {
    if (scale <= 0) throw error("casimir scale must be positive");
    std::vector<EnumeratedWeight> out;
    if (bound < 0) return out;
    std::vector<long long> cap(rd.rank);
    long long volume = 1;
    for (int i = 0; i < rd.rank; ++i) {
        Rat omega_rho(0);
        for (int j = 0; j < rd.rank; ++j) omega_rho += rd.form[i][j];
        Rat c = bound / (2 * scale * omega_rho);
        cap[i] = static_cast<long long>(Int(numerator(c) / denominator(c)));
        if (volume > box_cap / (cap[i] + 1))
            throw error("dominant-weight enumeration box exceeds cap for " + rd.name +
                        " at bound " + rational_str(bound));
        volume *= cap[i] + 1;
    }
    Labels w(rd.rank, 0);
    while (true) {
        Rat c = casimir(rd, w, scale);
        if (c <= bound) out.push_back({w, c});
        int i = rd.rank - 1;
        while (i >= 0 && w[i] == cap[i]) {
            w[i] = 0;
            --i;
        }
        if (i < 0) break;
        w[i] += 1;
    }
    std::sort(out.begin(), out.end(), [](const EnumeratedWeight& a, const EnumeratedWeight& b) {
        return a.cas != b.cas ? a.cas < b.cas : a.labels < b.labels;
    });
    return out;
}

}  // namespace geodstab
