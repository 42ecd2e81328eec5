#pragma once

#include "blockalg/rational.hpp"

#include <cstddef>
#include <vector>

namespace blockalg {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Integer row-echelon form from fraction-free (Bareiss) elimination.
struct Echelon {
    std::vector<std::vector<mpz_class>> rows;  // nonzero rows only
    std::vector<std::size_t> pivot_columns;
    std::size_t columns = 0;

    std::size_t rank() const { return pivot_columns.size(); }
};

/// Each row is first scaled by the lcm of its denominators, so all
/// elimination happens over the integers with exact divisions.
Echelon fraction_free_echelon(const RationalMatrix& matrix, std::size_t columns);

/// Basis of {x : matrix * x = 0}, one vector per free column in ascending
/// order, each scaled so its first nonzero entry is 1.
std::vector<RationalVector> kernel_basis(const RationalMatrix& matrix, std::size_t columns);

/// True when `v` lies in the span of `basis`.
bool in_span(const RationalVector& v, const std::vector<RationalVector>& basis);

}  // namespace blockalg
