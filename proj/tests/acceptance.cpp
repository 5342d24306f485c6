// Acceptance gate: ten checks, one line each, nonzero exit when any fails.
// Each check carries its own wall-clock budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <geodstab/geodstab.hpp>

#include "oracles.hpp"

using namespace geodstab;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, long long budget_ms,
               const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (problem.empty() && ms > budget_ms)
        problem = "took " + std::to_string(ms) + "ms, budget " + std::to_string(budget_ms) + "ms";
    if (problem.empty()) {
        std::cout << "PASS criterion " << number << " (" << ms << "ms): " << label << "\n";
    } else {
        std::cout << "FAIL criterion " << number << " (" << ms << "ms): " << label << ": "
                  << problem << "\n";
        ++failures;
    }
}

std::vector<RootDatum> families_to_rank(int max_rank) {
    std::vector<RootDatum> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back(build_root_datum(Family::A, n));
    for (int n = 2; n <= max_rank; ++n) out.push_back(build_root_datum(Family::B, n));
    for (int n = 3; n <= max_rank; ++n) out.push_back(build_root_datum(Family::C, n));
    for (int n = 4; n <= max_rank; ++n) out.push_back(build_root_datum(Family::D, n));
    for (int n = 6; n <= max_rank && n <= 8; ++n) out.push_back(build_root_datum(Family::E, n));
    if (max_rank >= 4) out.push_back(build_root_datum(Family::F, 4));
    if (max_rank >= 2) out.push_back(build_root_datum(Family::G, 2));
    return out;
}

long long closed_form_dual_coxeter(const RootDatum& rd) {
    switch (rd.family) {
        case Family::A: return rd.rank + 1;
        case Family::B: return 2 * rd.rank - 1;
        case Family::C: return rd.rank + 1;
        case Family::D: return 2 * rd.rank - 2;
        case Family::E: return rd.rank == 6 ? 12 : rd.rank == 7 ? 18 : 30;
        case Family::F: return 9;
        case Family::G: return 4;
    }
    return 0;
}

}  // namespace

int main() {
    criterion(1, "adjoint casimir is twice the dual Coxeter number, all families to rank 8",
              1000, [] {
        for (const auto& rd : families_to_rank(8)) {
            long long h = closed_form_dual_coxeter(rd);
            if (dual_coxeter(rd) != Int(h))
                return rd.name + ": dual coxeter " + dual_coxeter(rd).str() + " expected " +
                       std::to_string(h);
            Rat c = casimir(rd, adjoint_weight(rd));
            if (c != Rat(2 * h))
                return rd.name + ": adjoint casimir " + rational_str(c) + " expected " +
                       std::to_string(2 * h);
        }
        return std::string();
    });

    criterion(2, "G2 fundamental eigenvalues order as 4 < 8", 1000, [] {
        RootDatum g2 = build_root_datum("G2");
        Rat c1 = casimir(g2, {1, 0}), c2 = casimir(g2, {0, 1});
        if (c1 != Rat(4)) return "c(1,0) = " + rational_str(c1);
        if (c2 != Rat(8)) return "c(0,1) = " + rational_str(c2);
        if (!(c1 < c2)) return std::string("ordering failed");
        return std::string();
    });

    criterion(3, "B_n eigenvalue chain against orthogonal coordinates, n = 2, 3, 4", 1000, [] {
        for (int n = 2; n <= 4; ++n) {
            RootDatum rd = build_root_datum(Family::B, n);
            std::vector<Rat> e1(n, Rat(0)), e12(n, Rat(0)), e1x2(n, Rat(0));
            e1[0] = 1;
            e12[0] = e12[1] = 1;
            e1x2[0] = 2;
            struct Probe {
                std::vector<Rat> orth;
                long long expect_num;
            };
            // Casimirs 2n, 4n-2, 4n+2 for e1, e1+e2, 2e1.
            std::vector<Probe> probes = {{e1, 2 * n}, {e12, 4 * n - 2}, {e1x2, 4 * n + 2}};
            Rat prev(-1);
            for (const auto& p : probes) {
                Labels l = oracles::bn_labels_from_orth(p.orth);
                Rat lib = casimir(rd, l);
                Rat orc = oracles::bn_casimir_orth(n, p.orth);
                if (lib != orc)
                    return rd.name + ": library " + rational_str(lib) + " vs oracle " +
                           rational_str(orc);
                if (lib != Rat(p.expect_num))
                    return rd.name + ": got " + rational_str(lib) + " expected " +
                           std::to_string(p.expect_num);
                if (!(prev < lib)) return rd.name + ": chain not strictly increasing";
                prev = lib;
            }
        }
        return std::string();
    });

    criterion(4, "weight system totals equal the Weyl dimension for all fundamentals to rank 4",
              30000, [] {
        for (const auto& rd : families_to_rank(4)) {
            for (int i = 0; i < rd.rank; ++i) {
                Labels fw(rd.rank, 0);
                fw[i] = 1;
                Int dim = dimension(rd, fw);
                long long total = weight_system(rd, fw).total_multiplicity();
                if (Int(total) != dim)
                    return rd.name + " fundamental " + std::to_string(i + 1) + ": " +
                           std::to_string(total) + " weights vs dimension " + dim.str();
            }
        }
        return std::string();
    });

    criterion(5, "branching conserves dimension across every catalog module up to 2000", 60000,
              [] {
        Catalog cat = load(GEODSTAB_DEFAULT_CATALOG);
        for (const auto& e : cat.entries) {
            if (!e.machine_checked) continue;
            const SubmanifoldSpec& s = e.spec;
            std::set<std::vector<Labels>> modules;
            Rat bound(0);
            for (const auto& b : s.blocks) {
                modules.insert(b.ambient_module);
                if (!b.zero_level) {
                    Rat a = product_casimir(s.gn, s.gn_scales, b.ambient_module);
                    if (a > bound) bound = a;
                }
            }
            if (bound > 0) {
                std::vector<std::vector<EnumeratedWeight>> per_factor;
                for (std::size_t f = 0; f < s.gn.factors.size(); ++f)
                    per_factor.push_back(
                        enumerate_dominant(s.gn.factors[f], bound, s.gn_scales[f]));
                std::vector<Labels> cand(s.gn.factors.size());
                std::function<void(std::size_t)> walk = [&](std::size_t f) {
                    if (f == per_factor.size()) {
                        modules.insert(cand);
                        return;
                    }
                    for (const auto& ew : per_factor[f]) {
                        cand[f] = ew.labels;
                        walk(f + 1);
                    }
                };
                walk(0);
            }
            for (const auto& m : modules) {
                Int dim = product_dimension(s.gn, m);
                if (dim > 2000) continue;
                Decomposition dec = decompose(s.kn_embedding, m);
                Int total = 0;
                for (const auto& [w, mult] : dec)
                    total += Int(mult) * product_dimension(s.kn_embedding.target, w.factor_weights);
                if (total != dim)
                    return e.name + " module " + detail::candidate_str(m) + ": components sum " +
                           total.str() + " vs dimension " + dim.str();
            }
        }
        return std::string();
    });

    criterion(6, "bundled catalog validates with full agreement", 120000, [] {
        Catalog cat = load(GEODSTAB_DEFAULT_CATALOG);
        ValidationReport r = validate(cat);
        for (const auto& l : r.lines)
            if (!l.passed) return l.subject + ": " + l.detail;
        if (!r.all_passed) return std::string("validation reported failure");
        const std::vector<std::string> required = {
            "sphere-equator-S2-in-S3",      "sphere-equator-S3-in-S4",
            "sphere-equator-S4-in-S5",      "projective-hyperplane-RP2-in-RP3",
            "projective-hyperplane-RP3-in-RP4", "projective-hyperplane-RP4-in-RP5",
            "polar-grassR-1-4-in-SO5",      "polar-grassR-2-3-in-SO5",
            "polar-grassR-1-6-in-SO7",      "polar-grassR-2-5-in-SO7",
            "polar-grassR-3-4-in-SO7",      "polar-grassC-1-2-in-SU3",
            "polar-grassC-1-3-in-SU4",      "polar-grassC-2-2-in-SU4",
            "polar-GI-in-G2group",          "polar-S2xS2-in-GI",
            "meridian-S2xS2-in-GI",         "flat-SO2xAI2-in-CI2",
            "flat-SO2xAI3-in-CI3",          "lag-grassR-1-2",
            "lag-grassR-2-2",               "lag-grassR-1-3",
            "lag-grassR-1-4",               "lag-grassR-2-3",
            "meridian-SO2xSO5-in-SO7",      "polar-SO10modU5-in-SO10star"};
        for (const auto& name : required) {
            bool found = false;
            for (const auto& e : cat.entries) found = found || e.name == name;
            if (!found) return "missing required entry " + name;
        }
        if (cat.groupings.size() < 6) return std::string("expected at least six groupings");
        return std::string();
    });

    criterion(7, "equator index and nullity match the sphere Laplacian, n = 3, 4, 5", 5000, [] {
        Catalog cat = load(GEODSTAB_DEFAULT_CATALOG);
        for (int n = 3; n <= 5; ++n) {
            std::string name = "sphere-equator-S" + std::to_string(n - 1) + "-in-S" +
                               std::to_string(n);
            const CatalogEntry& e = find_entry(cat, name);
            OhnitaCounts c = ohnita_index(e.spec);
            auto oracle = oracles::sphere_jacobi(n);
            if (c.index != oracle.index)
                return name + ": index " + c.index.str() + " vs oracle " + oracle.index.str();
            if (c.nullity != oracle.nullity)
                return name + ": nullity " + c.nullity.str() + " vs oracle " +
                       oracle.nullity.str();
            if (c.killing_nullity != oracle.nullity)
                return name + ": killing nullity " + c.killing_nullity.str() + " vs oracle " +
                       oracle.nullity.str();
        }
        return std::string();
    });

    criterion(8, "shortcut rules and the index sign agree with every verdict", 120000, [] {
        Catalog cat = load(GEODSTAB_DEFAULT_CATALOG);
        for (const auto& e : cat.entries) {
            if (!e.machine_checked) continue;
            StabilityReport r = evaluate(e.spec);
            auto p31 = prop31_check(e.spec);
            auto p32 = prop32_check(e.spec);
            if (p31 && *p31 != r.verdict) return e.name + ": invariant-direction rule disagrees";
            if (p32 && *p32 != r.verdict) return e.name + ": full-rank-subgroup rule disagrees";
            bool unstable = r.verdict == Verdict::unstable;
            if (unstable != (*r.index > 0))
                return e.name + ": verdict " + verdict_str(r.verdict) + " with index " +
                       r.index->str();
        }
        return std::string();
    });

    criterion(9, "fixed point counts of the odd orthogonal groupings are binomial", 1000, [] {
        Catalog cat = load(GEODSTAB_DEFAULT_CATALOG);
        for (int n = 1; n <= 4; ++n) {
            std::string name = "so" + std::to_string(2 * n + 1);
            const Grouping* g = nullptr;
            for (const auto& gg : cat.groupings)
                if (gg.name == name) g = &gg;
            if (!g) return "missing grouping " + name;
            if (g->rank != n) return name + ": rank " + std::to_string(g->rank);
            Int total = 1;
            for (const auto& x : g->euler_plus) total += x;
            if (total != Int(1) << n)
                return name + ": fixed points " + total.str() + " vs 2^" + std::to_string(n);
            std::multiset<Int> got(g->euler_plus.begin(), g->euler_plus.end()), want;
            for (long long k = 1; k <= n; ++k) want.insert(oracles::binomial(n, k));
            if (got != want) return name + ": polar Euler numbers are not the binomials";
        }
        return std::string();
    });

    criterion(10, "Lagrangian rule table and index bound", 1000, [] {
        using V = LagrangianVerdict;
        auto verdict = [](RicciSign r, long long b, bool k, CurvatureComparison c,
                          std::optional<bool> ident) {
            LagrangianInputs in;
            in.ricci_ambient_sign = r;
            in.betti1 = b;
            in.has_killing_field = k;
            in.comparison = c;
            in.identity_map_stable = ident;
            return lagrangian_verdict(in).verdict;
        };
        auto C = CurvatureComparison::unknown;
        if (verdict(RicciSign::positive, 1, false, C, {}) != V::unstable)
            return std::string("positive Ricci rule");
        if (verdict(RicciSign::unknown, 0, true, CurvatureComparison::gt_2rn, {}) != V::unstable)
            return std::string("Killing field rule");
        if (verdict(RicciSign::nonpositive, 0, false, C, {}) != V::stable)
            return std::string("nonpositive Ricci rule");
        if (verdict(RicciSign::unknown, 0, false, CurvatureComparison::le_rn, {}) != V::stable)
            return std::string("comparison rule");
        if (verdict(RicciSign::unknown, 0, false, CurvatureComparison::le_2rn, true) != V::stable)
            return std::string("identity map rule");
        if (verdict(RicciSign::unknown, 0, false, C, {}) != V::undecided)
            return std::string("undecided fallthrough");
        bool threw = false;
        try {
            verdict(RicciSign::nonpositive, 1, true, CurvatureComparison::gt_2rn, {});
        } catch (const error&) {
            threw = true;
        }
        if (!threw) return std::string("contradiction not rejected");
        for (long long b = 0; b <= 4; ++b)
            if (index_lower_bound(b) != b) return std::string("index bound is not betti1");
        return std::string();
    });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
