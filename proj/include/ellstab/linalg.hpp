#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ellstab/rational.hpp"

namespace ellstab {

/**
 * Kernel of a small exact-rational matrix.
 *
 * Rows are linear functionals on Q^4 (the numerical lattice in coordinates
 * (r, a, b, s)); the result is a basis of the common kernel, produced by
 * Gauss-Jordan elimination with the identity-on-free-columns convention:
 * for each non-pivot column j, the basis vector has 1 in slot j and the
 * negated reduced column entries in the pivot slots. Column order (r, a, b, s)
 * makes the output deterministic.
 */
inline std::vector<std::array<Rational, 4>> kernel_basis(
    std::vector<std::array<Rational, 4>> rows) {
    constexpr std::size_t n = 4;
    // Reduced row echelon form.
    std::size_t pivot_row = 0;
    std::array<int, n> pivot_col_of_row{-1, -1, -1, -1};
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        const Rational inv_lead = Rational(1) / rows[pivot_row][col];
        for (auto& x : rows[pivot_row]) x *= inv_lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            const Rational factor = rows[i][col];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= factor * rows[pivot_row][j];
        }
        pivot_col_of_row[pivot_row] = static_cast<int>(col);
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    std::vector<std::array<Rational, 4>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        bool is_pivot = false;
        for (std::size_t c : pivot_cols) is_pivot |= (c == j);
        if (is_pivot) continue;
        std::array<Rational, 4> v{Rational(0), Rational(0), Rational(0), Rational(0)};
        v[j] = 1;
        for (std::size_t i = 0; i < pivot_row; ++i)
            v[static_cast<std::size_t>(pivot_col_of_row[i])] = -rows[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ellstab
