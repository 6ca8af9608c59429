#pragma once

// Sparse exact-rational matrices and rank computation by Gaussian
// elimination with a fill-reducing pivot choice. Matrices here are boundary
// maps of small chain complexes, so exactness matters more than scale.

#include <map>
#include <vector>

#include "tropmod/rational.hpp"

namespace tropmod {

struct SparseMatrix {
    int rows = 0, cols = 0;
    std::vector<std::map<int, Rational>> row_data;  // row -> (col -> value)

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), row_data(r) {}

    void add(int r, int c, const Rational& v) {
        if (v == 0) return;
        auto& cell = row_data[r][c];
        cell += v;
        if (cell == 0) row_data[r].erase(c);
    }

    Rational at(int r, int c) const {
        auto it = row_data[r].find(c);
        return it == row_data[r].end() ? Rational(0) : it->second;
    }

    bool is_zero() const {
        for (const auto& row : row_data)
            if (!row.empty()) return false;
        return true;
    }
};

// Matrix product, used by the d∘d = 0 checks.
inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (const auto& [k, va] : a.row_data[r])
            for (const auto& [c, vb] : b.row_data[k]) out.add(r, c, va * vb);
    return out;
}

inline int rank(SparseMatrix m) {
    std::vector<int> col_count(m.cols, 0);
    std::vector<char> row_done(m.rows, 0);
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.row_data[r]) ++col_count[c];

    int rank_found = 0;
    for (;;) {
        // Pick the nonzero entry minimizing (row fill) * (column fill).
        int best_r = -1, best_c = -1;
        long long best_score = -1;
        for (int r = 0; r < m.rows; ++r) {
            if (row_done[r] || m.row_data[r].empty()) continue;
            for (const auto& [c, v] : m.row_data[r]) {
                long long score = static_cast<long long>(m.row_data[r].size() - 1) *
                                  static_cast<long long>(col_count[c] - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_r = r;
                    best_c = c;
                }
            }
            if (best_score == 0) break;
        }
        if (best_r < 0) break;

        ++rank_found;
        row_done[best_r] = 1;
        const Rational pivot = m.row_data[best_r].at(best_c);
        for (const auto& [c, v] : m.row_data[best_r]) --col_count[c];

        for (int r = 0; r < m.rows; ++r) {
            if (row_done[r]) continue;
            auto hit = m.row_data[r].find(best_c);
            if (hit == m.row_data[r].end()) continue;
            Rational factor = hit->second / pivot;
            for (const auto& [c, v] : m.row_data[best_r]) {
                auto it = m.row_data[r].find(c);
                if (it == m.row_data[r].end()) {
                    Rational nv = -factor * v;
                    if (nv != 0) {
                        m.row_data[r][c] = nv;
                        ++col_count[c];
                    }
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) {
                        m.row_data[r].erase(it);
                        --col_count[c];
                    }
                }
            }
        }
        m.row_data[best_r].clear();
    }
    return rank_found;
}

}  // namespace tropmod
