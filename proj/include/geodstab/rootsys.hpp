#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace geodstab {

// A weight is its Dynkin-label vector (fundamental-weight basis);
// a root is usually carried in simple-root coordinates instead.
using Labels = std::vector<Label>;
using Coords = std::vector<Label>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootDatum {
    Family family = Family::A;
    int rank = 0;
    std::string name;                         // "B3", "G2", ...
    std::vector<std::vector<Label>> cartan;   // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<Rat> sym;                     // d_i = (alpha_i,alpha_i)/2; long roots have d_i = 1
    std::vector<Coords> pos_roots;            // simple-root coordinates, by height then lex
    Labels weyl_vector;                       // rho, all labels 1
    Mat form;                                 // F[i][j] = <omega_i, omega_j>
    Mat cartan_inv;

    long long algebra_dim() const { return rank + 2 * static_cast<long long>(pos_roots.size()); }

    bool operator==(const RootDatum&) const = default;
};

namespace detail {

inline void family_layout(Family f, int n, std::vector<std::pair<int, int>>& edges,
                          std::vector<Rat>& d) {
    auto reject = [&](const char* valid) {
        throw error("invalid simple type " + std::string(1, static_cast<char>(f)) +
                    std::to_string(n) + " (valid: " + valid + ")");
    };
    if (n < 1) reject("positive rank");
    d.assign(n, Rat(1));
    edges.clear();
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
    };
    switch (f) {
        case Family::A:
            if (n < 1) reject("A_n with n >= 1");
            chain(n);
            break;
        case Family::B:
            if (n < 2) reject("B_n with n >= 2");
            chain(n);
            d[n - 1] = Rat(1, 2);
            break;
        case Family::C:
            if (n < 3) reject("C_n with n >= 3");
            chain(n);
            for (int i = 0; i + 1 < n; ++i) d[i] = Rat(1, 2);
            break;
        case Family::D:
            if (n < 4) reject("D_n with n >= 4");
            chain(n - 1);
            edges.emplace_back(n - 3, n - 1);
            break;
        case Family::E:
            if (n < 6 || n > 8) reject("E_n with n in {6,7,8}");
            // Bourbaki: chain 1-3-4-5-6(-7(-8)) with node 2 hanging off node 4.
            edges.emplace_back(0, 2);
            for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(1, 3);
            break;
        case Family::F:
            if (n != 4) reject("F_4");
            chain(4);
            d[2] = d[3] = Rat(1, 2);
            break;
        case Family::G:
            if (n != 2) reject("G_2");
            chain(2);
            d[0] = Rat(1, 3);
            break;
        default:
            reject("families A-G");
    }
}

}  // namespace detail

inline Labels labels_of_root(const RootDatum& rd, const Coords& c) {
    Labels out(rd.rank, 0);
    for (int k = 0; k < rd.rank; ++k)
        for (int j = 0; j < rd.rank; ++j) out[k] += rd.cartan[k][j] * c[j];
    return out;
}

// (beta, gamma) for roots in simple-root coordinates; Gram_ij = d_i * cartan_ij.
inline Rat root_inner(const RootDatum& rd, const Coords& a, const Coords& b) {
    Rat s(0);
    for (int i = 0; i < rd.rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rd.rank; ++j)
            s += Rat(a[i]) * rd.sym[i] * Rat(rd.cartan[i][j]) * Rat(b[j]);
    }
    return s;
}

inline RootDatum build_root_datum(Family family, int rank) {
    RootDatum rd;
    rd.family = family;
    rd.rank = rank;
    std::vector<std::pair<int, int>> edges;
    detail::family_layout(family, rank, edges, rd.sym);
    rd.name = std::string(1, static_cast<char>(family)) + std::to_string(rank);

    // Cartan matrix from the diagram: with the long-root normalization every
    // adjacent pair has (alpha_i, alpha_j) = -max(d_i, d_j).
    rd.cartan.assign(rank, std::vector<Label>(rank, 0));
    Mat gram = mat_zero(rank, rank);
    for (int i = 0; i < rank; ++i) {
        rd.cartan[i][i] = 2;
        gram[i][i] = 2 * rd.sym[i];
    }
    for (auto [i, j] : edges) {
        Rat g = -std::max(rd.sym[i], rd.sym[j]);
        gram[i][j] = gram[j][i] = g;
        Rat cij = g / rd.sym[i], cji = g / rd.sym[j];
        if (!is_integer(cij) || !is_integer(cji)) throw error("non-integral Cartan entry");
        rd.cartan[i][j] = static_cast<Label>(to_int(cij));
        rd.cartan[j][i] = static_cast<Label>(to_int(cji));
    }

    // Positive roots by height: the alpha_i-string through beta gives
    // q = p - <beta, alpha_i^vee> steps upward.
    std::set<Coords> roots;
    std::vector<Coords> frontier;
    for (int i = 0; i < rank; ++i) {
        Coords e(rank, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<Coords> next;
        for (const auto& beta : frontier) {
            Labels lab = labels_of_root(rd, beta);
            for (int i = 0; i < rank; ++i) {
                // p = steps down the alpha_i-string; every root below beta has
                // smaller height and is already in the set.
                long long p = 0;
                Coords walk = beta;
                while (true) {
                    walk[i] -= 1;
                    if (!roots.count(walk)) break;
                    ++p;
                }
                long long q = p - lab[i];
                if (q >= 1) {
                    Coords up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    rd.pos_roots.assign(roots.begin(), roots.end());
    auto height = [](const Coords& c) {
        long long h = 0;
        for (Label x : c) h += x;
        return h;
    };
    std::sort(rd.pos_roots.begin(), rd.pos_roots.end(),
              [&](const Coords& a, const Coords& b) {
                  long long ha = height(a), hb = height(b);
                  return ha != hb ? ha < hb : a < b;
              });

    rd.weyl_vector.assign(rank, 1);

    // F = (C^T)^{-1} diag(d); symmetric because diag(d) C is.
    Mat c_rat = mat_zero(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c_rat[i][j] = rd.cartan[i][j];
    rd.cartan_inv = mat_inverse(c_rat);
    rd.form = mat_zero(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) rd.form[i][j] = rd.cartan_inv[j][i] * rd.sym[j];
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < i; ++j)
            if (rd.form[i][j] != rd.form[j][i]) throw error("form must be symmetric");
    return rd;
}

// "B3" -> build_root_datum(B, 3)
inline RootDatum build_root_datum(const std::string& type) {
    if (type.size() < 2 || type[0] < 'A' || type[0] > 'G')
        throw error("not a simple type name: '" + type + "' (expected e.g. A2, B3, G2)");
    int rank = 0;
    try {
        rank = std::stoi(type.substr(1));
    } catch (const std::exception&) {
        throw error("not a simple type name: '" + type + "'");
    }
    return build_root_datum(static_cast<Family>(type[0]), rank);
}

inline void check_rank(const RootDatum& rd, const Labels& w) {
    if (static_cast<int>(w.size()) != rd.rank)
        throw error("rank mismatch: weight has " + std::to_string(w.size()) +
                    " labels, " + rd.name + " has rank " + std::to_string(rd.rank));
}

inline Rat inner_product(const RootDatum& rd, const Labels& w1, const Labels& w2) {
    check_rank(rd, w1);
    check_rank(rd, w2);
    Rat s(0);
    for (int i = 0; i < rd.rank; ++i) {
        if (w1[i] == 0) continue;
        for (int j = 0; j < rd.rank; ++j)
            if (w2[j] != 0) s += Rat(w1[i]) * rd.form[i][j] * Rat(w2[j]);
    }
    return s;
}

inline bool is_dominant(const Labels& w) {
    return std::all_of(w.begin(), w.end(), [](Label x) { return x >= 0; });
}

// Simple reflection in label coordinates: s_i(w)_k = w_k - w_i * cartan[k][i].
inline Labels reflect(const RootDatum& rd, Labels w, int i) {
    Label wi = w[i];
    for (int k = 0; k < rd.rank; ++k) w[k] -= wi * rd.cartan[k][i];
    return w;
}

// Orbit representative in the dominant chamber plus the determinant sign of
// the reducing Weyl word. Only strictly negative labels are reflected, so a
// weight on a chamber wall reports the sign of the leftmost-negative word.
inline std::pair<Labels, int> to_dominant(const RootDatum& rd, Labels w) {
    check_rank(rd, w);
    int sign = 1;
    while (true) {
        int neg = -1;
        for (int i = 0; i < rd.rank; ++i)
            if (w[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return {w, sign};
        w = reflect(rd, w, neg);
        sign = -sign;
    }
}

inline const Coords& highest_root(const RootDatum& rd) { return rd.pos_roots.back(); }

// Dominant long-root weight; the highest weight of the adjoint module.
inline Labels adjoint_weight(const RootDatum& rd) {
    Labels w = labels_of_root(rd, highest_root(rd));
    if (!is_dominant(w)) throw error("highest root must be dominant");
    return w;
}

// h^vee = 1 + <rho, theta^vee>; theta is long with <theta,theta> = 2.
inline Int dual_coxeter(const RootDatum& rd) {
    Rat v = inner_product(rd, rd.weyl_vector, adjoint_weight(rd));
    return 1 + to_int(v);
}

}  // namespace geodstab
