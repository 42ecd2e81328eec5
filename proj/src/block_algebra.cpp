#include "blockalg/block_algebra.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace blockalg {

void BlockParams::validate() const {
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
}

Rational virasoro_cocycle(std::int64_t alpha) {
    const Rational a(alpha);
    return (a * a * a - a) / Rational(12);
}

namespace {

Element structure_term(const BlockParams& params, const BasisIndex& x, const BasisIndex& y) {
    const Scalar a{Rational(x.grade)}, b{Rational(y.grade)};
    const Scalar i{Rational(x.level)}, j{Rational(y.level)};
    return Element(BasisIndex::graded(x.grade + y.grade, x.level + y.level),
                   (i + params.q) * (b + params.p) - (j + params.q) * (a + params.p));
}

void require_nonnegative(const BasisIndex& x) {
    if (!x.is_central() && x.level < 0)
        throw std::invalid_argument("B(p,q) has no label " + x.to_string() + " (levels are nonnegative)");
}

}  // namespace

BlockAlgebra::BlockAlgebra(BlockParams params, Cocycle cocycle)
    : params_(std::move(params)), cocycle_(std::move(cocycle)) {
    params_.validate();
    auto full = [p = params_, cocycle = cocycle_](const BasisIndex& x, const BasisIndex& y) {
        require_nonnegative(x);
        require_nonnegative(y);
        Element out = structure_term(p, x, y);
        if (x.grade + y.grade == 0 && x.level == 0 && y.level == 0) out.add(BasisIndex::central(), Scalar(cocycle(x.grade)));
        return out;
    };
    auto delta_free = [p = params_](const BasisIndex& x, const BasisIndex& y) {
        require_nonnegative(x);
        require_nonnegative(y);
        return structure_term(p, x, y);
    };
    rule_ = BracketRule{"B(p,q)", full, DegreeBounds{1, 1}, false, 0};
    delta_free_ = make_rule("B(p,q) without cocycle", delta_free, DegreeBounds{1, 1}, true, 0);
}

Element BlockAlgebra::bracket(const Element& x, const Element& y) const {
    for (const auto& [index, c] : x.support()) require_nonnegative(index);
    for (const auto& [index, c] : y.support()) require_nonnegative(index);
    return bracket_apply(rule_, x, y);
}

Element block_bracket(const BlockParams& params, const Element& x, const Element& y) {
    return BlockAlgebra(params).bracket(x, y);
}

TriangularPart triangular_part(const BasisIndex& index) {
    if (index.is_central() || index.grade == 0) return TriangularPart::zero;
    return index.grade < 0 ? TriangularPart::negative : TriangularPart::positive;
}

Verdict cocycle_jacobi_check(const BlockAlgebra& algebra, const std::vector<std::int64_t>& alpha_values,
                             const std::vector<std::int64_t>& beta_values) {
    // cocycle has degree 3, structure constants degree 1 after gamma = -a-b
    constexpr std::size_t need = 5;
    for (const auto* values : {&alpha_values, &beta_values}) {
        if (values->size() < need)
            throw std::invalid_argument("cocycle grid has " + std::to_string(values->size()) + " values; at least " +
                                        std::to_string(need) + " required");
        if (std::set<std::int64_t>(values->begin(), values->end()).size() != values->size())
            throw std::invalid_argument("cocycle grid has repeated values");
    }

    Verdict verdict;
    std::ostringstream scope;
    scope << "alpha={";
    for (std::size_t k = 0; k < alpha_values.size(); ++k) scope << (k ? "," : "") << alpha_values[k];
    scope << "} beta={";
    for (std::size_t k = 0; k < beta_values.size(); ++k) scope << (k ? "," : "") << beta_values[k];
    scope << "} gamma=-alpha-beta levels=0";
    verdict.scope = scope.str();

    const auto& rule = algebra.rule();
    for (auto a : alpha_values) {
        for (auto b : beta_values) {
            ++verdict.points_checked;
            const std::int64_t g = -a - b;
            const Element x = Element::basis(a), y = Element::basis(b), z = Element::basis(g);
            const Element jacobi = bracket_apply(rule, x, bracket_apply(rule, y, z)) +
                                   bracket_apply(rule, y, bracket_apply(rule, z, x)) +
                                   bracket_apply(rule, z, bracket_apply(rule, x, y));
            const Scalar central = jacobi.coefficient(BasisIndex::central());
            if (!central.is_zero()) {
                verdict.status = Verdict::Status::fails;
                verdict.witness = Witness{{{"alpha", a}, {"beta", b}, {"gamma", g}}, Element::central(central)};
                return verdict;
            }
        }
    }
    verdict.status = Verdict::Status::holds_universally;
    return verdict;
}

Verdict virasoro_embedding_check(const BlockAlgebra& algebra, const Window& window) {
    const Scalar& q = algebra.params().q;
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
    Verdict verdict;
    verdict.status = Verdict::Status::holds_on_window;
    verdict.scope = "grades [" + std::to_string(window.grade_min) + "," + std::to_string(window.grade_max) + "]";
    for (std::int64_t a = window.grade_min; a <= window.grade_max; ++a) {
        for (std::int64_t b = window.grade_min; b <= window.grade_max; ++b) {
            ++verdict.points_checked;
            // q^2 [L_a, L_b] = [L_{a,0}, L_{b,0}]
            const Element lhs = algebra.bracket(Element::basis(a), Element::basis(b));
            Element rhs(BasisIndex::graded(a + b, 0), q * Scalar(Rational(b - a)));
            if (a + b == 0) rhs.add(BasisIndex::central(), Scalar(virasoro_cocycle(a)));
            Element residual = lhs - rhs;
            if (!residual.is_zero()) {
                verdict.status = Verdict::Status::fails;
                verdict.witness = Witness{{{"alpha", a}, {"beta", b}}, std::move(residual)};
                return verdict;
            }
        }
    }
    return verdict;
}

namespace {

/// Formal power t^{q_multiple*q + offset}.
struct FormalPower {
    std::int64_t q_multiple = 0;
    std::int64_t offset = 0;

    FormalPower operator*(const FormalPower& rhs) const { return {q_multiple + rhs.q_multiple, offset + rhs.offset}; }
};

/// d/dt t^{mq+e} = (mq + e) t^{mq+e-1}
std::pair<Scalar, FormalPower> derivative(const FormalPower& f, const Scalar& q) {
    return {q * Scalar(Rational(f.q_multiple)) + Scalar(Rational(f.offset)), FormalPower{f.q_multiple, f.offset - 1}};
}

Element realization_bracket(const BlockParams& params, std::int64_t a, const FormalPower& f, std::int64_t b,
                            const FormalPower& g) {
    const FormalPower shift{-1, 1};  // t^{1-q}
    const auto [df_coef, df] = derivative(f, params.q);
    const auto [dg_coef, dg] = derivative(g, params.q);
    const FormalPower first = shift * df * g;
    const FormalPower second = shift * f * dg;
    if (first.q_multiple != 1 || second.q_multiple != 1 || first.offset != second.offset || first.offset < 0)
        throw std::logic_error("realization bracket left t^q C[t]");

    const Scalar pa = Scalar(Rational(a)) + params.p;
    const Scalar pb = Scalar(Rational(b)) + params.p;
    Element out(BasisIndex::graded(a + b, first.offset), pb * df_coef - pa * dg_coef);

    if (a + b == 0) {
        const FormalPower integrand = FormalPower{-2, -1} * f * g;
        if (integrand.q_multiple == 0 && integrand.offset == -1) out.add(BasisIndex::central(), Scalar(virasoro_cocycle(a)));
    }
    return out;
}

}  // namespace

Verdict laurent_realization_check(const BlockAlgebra& algebra, const Window& window) {
    Verdict verdict;
    verdict.status = Verdict::Status::holds_on_window;
    verdict.scope = "grades [" + std::to_string(window.grade_min) + "," + std::to_string(window.grade_max) +
                    "] levels [0," + std::to_string(window.level_max) + "]";
    for (std::int64_t a = window.grade_min; a <= window.grade_max; ++a) {
        for (std::int64_t b = window.grade_min; b <= window.grade_max; ++b) {
            for (std::int64_t i = 0; i <= window.level_max; ++i) {
                for (std::int64_t j = 0; j <= window.level_max; ++j) {
                    ++verdict.points_checked;
                    const Element realized = realization_bracket(algebra.params(), a, FormalPower{1, i}, b, FormalPower{1, j});
                    const Element direct = algebra.bracket(Element::basis(a, i), Element::basis(b, j));
                    Element residual = realized - direct;
                    if (!residual.is_zero()) {
                        verdict.status = Verdict::Status::fails;
                        verdict.witness = Witness{{{"alpha", a}, {"i", i}, {"beta", b}, {"j", j}}, std::move(residual)};
                        return verdict;
                    }
                }
            }
        }
    }
    return verdict;
}

std::vector<Element> parabolic_degree_zero(const BlockParams& params, const Element& a, std::int64_t level_max) {
    if (a.is_zero()) throw std::invalid_argument("parabolic_degree_zero needs a nonzero grade -1 element");
    for (const auto& [index, c] : a.support())
        if (index.is_central() || index.grade != -1 || index.level < 0)
            throw std::invalid_argument("element " + a.to_string() + " is not homogeneous of grade -1");

    std::vector<Element> images;
    for (std::int64_t j = 0; j <= level_max; ++j) {
        Element w;
        const Scalar sj{Rational(j)};
        for (const auto& [index, c] : a.support()) {
            const Scalar si{Rational(index.level)};
            w.add(BasisIndex::graded(0, index.level + j), c * (Scalar(2) * params.q + si + sj + params.p * (si - sj)));
        }
        images.push_back(std::move(w));
    }
    return images;
}

}  // namespace blockalg
