#include "blockalg/linalg.hpp"

#include <stdexcept>

namespace blockalg {

Echelon fraction_free_echelon(const RationalMatrix& matrix, std::size_t columns) {
    std::vector<std::vector<mpz_class>> m;
    m.reserve(matrix.size());
    for (const auto& row : matrix) {
        if (row.size() != columns) throw std::invalid_argument("ragged matrix row");
        mpz_class scale = 1;
        for (const auto& x : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.denominator().get_mpz_t());
        std::vector<mpz_class> ints(columns);
        for (std::size_t j = 0; j < columns; ++j) ints[j] = row[j].numerator() * (scale / row[j].denominator());
        m.push_back(std::move(ints));
    }

    Echelon out;
    out.columns = columns;
    mpz_class previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < columns; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
            }
            m[i][c] = 0;
        }
        previous = m[r][c];
        out.pivot_columns.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& matrix, std::size_t columns) {
    const Echelon e = fraction_free_echelon(matrix, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(columns, Rational(0));
        x[free] = Rational(1);
        for (std::size_t r = e.rank(); r-- > 0;) {
            const std::size_t pc = e.pivot_columns[r];
            Rational sum(0);
            for (std::size_t j = pc + 1; j < columns; ++j)
                if (!x[j].is_zero()) sum += Rational(e.rows[r][j]) * x[j];
            x[pc] = -sum / Rational(e.rows[r][pc]);
        }
        for (const auto& entry : x) {
            if (entry.is_zero()) continue;
            const Rational lead = entry;
            for (auto& y : x) y /= lead;
            break;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

bool in_span(const RationalVector& v, const std::vector<RationalVector>& basis) {
    RationalMatrix rows = basis;
    const std::size_t rank_before = fraction_free_echelon(rows, v.size()).rank();
    rows.push_back(v);
    return fraction_free_echelon(rows, v.size()).rank() == rank_before;
}

}  // namespace blockalg
