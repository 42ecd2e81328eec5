#pragma once

#include "blockalg/element.hpp"

#include <gmpxx.h>

#include <random>
#include <vector>

namespace testing {

using blockalg::Poly;
using blockalg::Rational;

inline Poly sym(const char* name) { return Poly::variable(blockalg::parameter_symbols(), name); }

/// n/d with |n| <= 9, 1 <= d <= 5.
inline Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (!nonzero || !r.is_zero()) return r;
    }
}

/// Plain Gauss-Jordan over mpq_class: dimension of the null space.
inline std::size_t nullity(std::vector<std::vector<mpq_class>> m, std::size_t columns) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const mpq_class f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < columns; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return columns - rank;
}

/// Independent recurrence oracle: smallest d >= 1 with 2d + 1 <= len such that
/// the Hankel system sum_j h_j s_{k+j} = 0 (h_d = 1, k + d < len) is
/// solvable; 0 when there is none.
inline std::size_t hankel_order(const std::vector<Rational>& s) {
    for (std::size_t d = 1; 2 * d + 1 <= s.size(); ++d) {
        // unknowns h_0..h_{d-1}, plus the rhs column for h_d = 1
        std::vector<std::vector<mpq_class>> rows;
        for (std::size_t k = 0; k + d < s.size(); ++k) {
            std::vector<mpq_class> row;
            for (std::size_t j = 0; j <= d; ++j) row.push_back(s[k + j].raw());
            rows.push_back(row);
        }
        // solvable with h_d = 1 iff rank([A | b]) == rank(A)
        std::vector<std::vector<mpq_class>> a = rows;
        for (auto& r : a) r.pop_back();
        if (d - nullity(a, d) == d + 1 - nullity(rows, d + 1)) return d;
    }
    return 0;
}

}  // namespace testing
