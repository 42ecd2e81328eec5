#pragma once

#include "blockalg/lie_engine.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace blockalg {

/// Parameters of B(p,q). q must be nonzero whenever it is a concrete value.
struct BlockParams {
    Scalar p;
    Scalar q;

    /// Throws std::invalid_argument("q must be nonzero") for a concrete zero q.
    void validate() const;
};

/// Value multiplying c in [L_{a,0}, L_{-a,0}].
using Cocycle = std::function<Rational(std::int64_t)>;

/// (a^3 - a) / 12
Rational virasoro_cocycle(std::int64_t alpha);

/// Centrally extended Block type algebra B(p,q) with basis L[a,i] (i >= 0)
/// and c:
///   [L_{a,i}, L_{b,j}] = ((i+q)(b+p) - (j+q)(a+p)) L_{a+b,i+j}
///                        + delta_{a+b,0} delta_{i,0} delta_{j,0} cocycle(a) c.
class BlockAlgebra {
public:
    explicit BlockAlgebra(BlockParams params, Cocycle cocycle = virasoro_cocycle);

    const BlockParams& params() const { return params_; }
    Rational cocycle(std::int64_t alpha) const { return cocycle_(alpha); }

    /// Throws std::invalid_argument on a negative level.
    Element bracket(const Element& x, const Element& y) const;

    /// Full bracket including the cocycle. Not polynomial in the indices.
    const BracketRule& rule() const { return rule_; }
    /// Bracket without the cocycle; polynomial, levels >= 0.
    const BracketRule& delta_free_rule() const { return delta_free_; }

private:
    BlockParams params_;
    Cocycle cocycle_;
    BracketRule rule_;
    BracketRule delta_free_;
};

Element block_bracket(const BlockParams& params, const Element& x, const Element& y);

enum class TriangularPart { negative, zero, positive };

TriangularPart triangular_part(const BasisIndex& index);

/// c-coefficient of the Jacobi identity on L_{a,0}, L_{b,0}, L_{-a-b,0};
/// needs at least 5 distinct values for each of a and b.
Verdict cocycle_jacobi_check(const BlockAlgebra& algebra, const std::vector<std::int64_t>& alpha_values,
                             const std::vector<std::int64_t>& beta_values);

/// With L_a = q^{-1} L_{a,0} and k = q^{-2} c, checks
/// [L_a, L_b] = (b-a) L_{a+b} + (a^3-a)/12 delta_{a+b,0} k for window grades.
/// The identity is compared after multiplying through by the unit q^2, so q
/// may stay symbolic. Throws std::invalid_argument for q = 0.
Verdict virasoro_embedding_check(const BlockAlgebra& algebra, const Window& window);

/// Compares the bracket with the realization on x^a t^{q+i}:
///   [x^a f, x^b g] = x^{a+b} t^{1-q}((b+p) f' g - (a+p) f g')
///                    + delta_{a+b,0} (a^3-a)/12 Res_t(t^{-2q-1} f g) c,
/// computed by formal differentiation with t^q kept symbolic.
Verdict laurent_realization_check(const BlockAlgebra& algebra, const Window& window);

/// Images [a, L_{1,j}] for j = 0..level_max of a grade -1 element
/// a = sum c_i L_{-1,i}:  w_j = sum_i c_i (2q + i + j + p(i-j)) L_{0,i+j}.
std::vector<Element> parabolic_degree_zero(const BlockParams& params, const Element& a, std::int64_t level_max);

}  // namespace blockalg
