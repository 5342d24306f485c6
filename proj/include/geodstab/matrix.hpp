#pragma once

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace geodstab {

// Dense exact rational matrix, just large enough for weight-lattice work.
using Mat = std::vector<std::vector<Rat>>;

inline Mat mat_zero(std::size_t rows, std::size_t cols) {
    return Mat(rows, std::vector<Rat>(cols, Rat(0)));
}

inline Mat mat_identity(std::size_t n) {
    Mat m = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v) {
    if (!m.empty() && m[0].size() != v.size())
        throw error("matrix/vector size mismatch");
    std::vector<Rat> out(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw error("matrix product size mismatch");
    Mat out = mat_zero(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// Gauss-Jordan with exact pivots; throws on a singular input.
inline Mat mat_inverse(Mat a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw error("inverse of a non-square matrix");
    Mat inv = mat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw error("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rat p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace geodstab
