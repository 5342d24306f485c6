#pragma once

// Test-side oracles, deliberately computed by routes the library never takes:
// orthogonal-coordinate formulas for B_n, the Kostant alternating sum for
// weight multiplicities, the classical Clebsch-Gordan series for sl2, and the
// closed-form spectrum of the sphere Laplacian.

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <geodstab/geodstab.hpp>

namespace oracles {

using geodstab::Int;
using geodstab::Label;
using geodstab::Labels;
using geodstab::Rat;
using geodstab::RootDatum;

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) r = r * Int(n - k + i) / Int(i);
    return r;
}

// B_n weights in orthogonal coordinates a = (a_1..a_n), e_i orthonormal so
// that the highest root e_1+e_2 has norm 2, matching the library convention.
inline Labels bn_labels_from_orth(const std::vector<Rat>& a) {
    Labels l(a.size());
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        Rat d = a[i] - a[i + 1];
        l[i] = static_cast<Label>(geodstab::to_int(d));
    }
    l.back() = static_cast<Label>(geodstab::to_int(2 * a.back()));
    return l;
}

inline Rat bn_casimir_orth(int n, const std::vector<Rat>& a, const Rat& scale = Rat(1)) {
    // <a, a + 2 rho> with rho_i = n - i + 1/2 (1-based).
    Rat c = 0;
    for (int i = 0; i < n; ++i) c += a[i] * (a[i] + 2 * (Rat(n - i) - Rat(1, 2)));
    return scale * c;
}

// Weyl group as integer matrices on the Dynkin-label space, with sign.
struct WeylGroup {
    std::vector<std::vector<Labels>> elements;  // row-major matrices
    std::vector<int> signs;
};

inline Labels mat_apply(const std::vector<Labels>& m, const Labels& v) {
    Labels r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline std::vector<Labels> mat_compose(const std::vector<Labels>& a,
                                       const std::vector<Labels>& b) {
    std::size_t n = a.size();
    std::vector<Labels> r(n, Labels(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline WeylGroup weyl_group(const RootDatum& rd) {
    int n = rd.rank;
    std::vector<std::vector<Labels>> gens;
    for (int k = 0; k < n; ++k) {
        std::vector<Labels> s(n, Labels(n, 0));
        for (int i = 0; i < n; ++i) {
            s[i][i] = 1;
            s[i][k] -= rd.cartan[i][k];
        }
        gens.push_back(s);
    }
    std::map<std::vector<Labels>, int> seen;
    std::vector<Labels> id(n, Labels(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    seen[id] = 1;
    std::vector<std::vector<Labels>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<Labels>> next;
        for (const auto& m : frontier) {
            int sgn = seen[m];
            for (const auto& g : gens) {
                auto gm = mat_compose(g, m);
                if (seen.emplace(gm, -sgn).second) next.push_back(gm);
            }
        }
        frontier = std::move(next);
    }
    WeylGroup w;
    for (const auto& [m, s] : seen) {
        w.elements.push_back(m);
        w.signs.push_back(s);
    }
    return w;
}

// Kostant partition function over simple-root coordinates.
inline Int kostant_partition(const RootDatum& rd, const std::vector<Label>& coords) {
    static std::map<std::pair<std::string, std::vector<Label>>, Int> memo;
    for (Label c : coords)
        if (c < 0) return 0;
    auto key = std::make_pair(rd.name, coords);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool zero = true;
    for (Label c : coords) zero = zero && c == 0;
    if (zero) return memo[key] = 1;
    // Count solutions sum k_beta beta = coords with the last root used at
    // least once, recursing over a fixed root ordering.
    std::function<Int(std::size_t, std::vector<Label>&)> count =
        [&](std::size_t idx, std::vector<Label>& rem) -> Int {
        bool done = true;
        for (Label c : rem) done = done && c == 0;
        if (done) return 1;
        if (idx == rd.pos_roots.size()) return 0;
        const auto& beta = rd.pos_roots[idx];
        Int total = 0;
        long long kmax = -1;
        for (int i = 0; i < rd.rank; ++i)
            if (beta[i] > 0) {
                long long q = rem[i] / beta[i];
                kmax = kmax < 0 ? q : std::min(kmax, q);
            }
        std::vector<Label> r = rem;
        for (long long k = 0; k <= kmax; ++k) {
            total += count(idx + 1, r);
            for (int i = 0; i < rd.rank; ++i) r[i] -= beta[i];
        }
        return total;
    };
    std::vector<Label> rem = coords;
    return memo[key] = count(0, rem);
}

// Multiplicity of mu in the irreducible with highest weight lambda, by the
// alternating Kostant sum over the full Weyl group. Practical for rank <= 3.
inline Int kostant_multiplicity(const RootDatum& rd, const Labels& lambda, const Labels& mu) {
    WeylGroup w = weyl_group(rd);
    Labels lr = lambda, mr = mu;
    for (int i = 0; i < rd.rank; ++i) {
        lr[i] += 1;
        mr[i] += 1;
    }
    Int total = 0;
    for (std::size_t e = 0; e < w.elements.size(); ++e) {
        Labels v = mat_apply(w.elements[e], lr);
        for (int i = 0; i < rd.rank; ++i) v[i] -= mr[i];
        // Convert label difference to simple-root coordinates.
        std::vector<Rat> rv(rd.rank);
        for (int i = 0; i < rd.rank; ++i) rv[i] = Rat(v[i]);
        std::vector<Rat> coords = geodstab::mat_vec(rd.cartan_inv, rv);
        std::vector<Label> ic(rd.rank);
        bool integral = true;
        for (int i = 0; i < rd.rank; ++i) {
            if (!geodstab::is_integer(coords[i])) {
                integral = false;
                break;
            }
            ic[i] = static_cast<Label>(geodstab::to_int(coords[i]));
        }
        if (!integral) continue;
        total += Int(w.signs[e]) * kostant_partition(rd, ic);
    }
    return total;
}

// (p) tensor (q) = sum of (k), k = |p-q|, |p-q|+2, ..., p+q.
inline std::map<Label, long long> clebsch_gordan_a1(Label p, Label q) {
    std::map<Label, long long> out;
    for (Label k = p > q ? p - q : q - p; k <= p + q; k += 2) out[k] = 1;
    return out;
}

// Totally geodesic equator S^{n-1} in S^n: the Jacobi operator on the normal
// line bundle is the sphere Laplacian shifted by -(n-1). Eigenvalue
// k(k+n-2) - (n-1) with the harmonic-polynomial multiplicity.
struct JacobiCounts {
    Int index = 0;
    Int nullity = 0;
};

inline JacobiCounts sphere_jacobi(int n) {
    JacobiCounts out;
    for (long long k = 0;; ++k) {
        long long eig = k * (k + n - 2) - (n - 1);
        if (eig > 0) break;
        Int mult = k == 0 ? Int(1) : Int(2 * k + n - 2) * binomial(k + n - 2, k) / Int(k + n - 2);
        if (eig < 0)
            out.index += mult;
        else
            out.nullity += mult;
    }
    return out;
}

}  // namespace oracles
