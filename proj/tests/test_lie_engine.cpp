#include "blockalg/block_algebra.hpp"
#include "blockalg/linalg.hpp"
#include "blockalg/novikov.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace blockalg;
using testing::sym;

namespace {

/// Independent oracle for the B(p,q) structure constant at concrete indices.
Element direct_bracket(const Rational& p, const Rational& q, std::int64_t a, std::int64_t i, std::int64_t b,
                       std::int64_t j) {
    Element out(BasisIndex::graded(a + b, i + j),
                Scalar((Rational(i) + q) * (Rational(b) + p) - (Rational(j) + q) * (Rational(a) + p)));
    if (a + b == 0 && i == 0 && j == 0)
        out.add(BasisIndex::central(), Scalar((Rational(a) * Rational(a) * Rational(a) - Rational(a)) / Rational(12)));
    return out;
}

BracketRule mutated_bpq(const Scalar& p, const Scalar& q) {
    auto on_basis = [=](const BasisIndex& x, const BasisIndex& y) {
        const Scalar a{Rational(x.grade)}, b{Rational(y.grade)}, i{Rational(x.level)}, j{Rational(y.level)};
        return Element(BasisIndex::graded(x.grade + y.grade, x.level + y.level),
                       (i + q) * (b + p) - (j + q) * (a + Scalar(2) * p));
    };
    return make_rule("mutated", on_basis, DegreeBounds{1, 1});
}

}  // namespace

TEST_CASE("B(1,1) bracket examples") {
    const BlockAlgebra b11({Scalar(1), Scalar(1)});
    CHECK(b11.bracket(Element::basis(1), Element::basis(-1)) == Element::basis(0) * Scalar(-2));
    const Element e = b11.bracket(Element::basis(2), Element::basis(-2));
    CHECK(e == Element::basis(0) * Scalar(-4) + Element::central(Scalar(Rational(1, 2))));
    CHECK(e.to_string() == "-4*L[0,0] + 1/2*c");
    CHECK(b11.bracket(Element::basis(0, 1), Element::basis(0, 2)) == Element::basis(0, 3) * Scalar(-1));
    CHECK(b11.bracket(Element::central(), Element::basis(3, 1)).is_zero());
    CHECK_THROWS_AS(b11.bracket(Element::basis(0, -1), Element::basis(1)), std::invalid_argument);
}

TEST_CASE("bracket agrees with the direct formula on random concrete parameters") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational p = testing::random_rational(rng), q = testing::random_rational(rng, true);
        const BlockAlgebra alg({Scalar(p), Scalar(q)});
        for (std::int64_t a = -3; a <= 3; ++a)
            for (std::int64_t b = -3; b <= 3; ++b)
                for (std::int64_t i = 0; i <= 2; ++i)
                    for (std::int64_t j = 0; j <= 2; ++j)
                        CHECK(alg.bracket(Element::basis(a, i), Element::basis(b, j)) == direct_bracket(p, q, a, i, b, j));
    }
}

TEST_CASE("bilinearity and antisymmetry of bracket_apply") {
    std::mt19937_64 rng(5);
    const BlockAlgebra alg({sym("p"), sym("q")});
    auto random_element = [&]() {
        std::uniform_int_distribution<std::int64_t> g(-3, 3), l(0, 2);
        Element x;
        for (int t = 0; t < 3; ++t) x.add(BasisIndex::graded(g(rng), l(rng)), Scalar(testing::random_rational(rng)));
        return x;
    };
    for (int trial = 0; trial < 40; ++trial) {
        const Element x = random_element(), y = random_element(), z = random_element();
        const Scalar s(testing::random_rational(rng)), t = sym("a");
        CHECK(alg.bracket(x * s + y * t, z) == alg.bracket(x, z) * s + alg.bracket(y, z) * t);
        CHECK(alg.bracket(x, y) == -alg.bracket(y, x));
        CHECK(alg.bracket(x, x).is_zero());
    }
}

TEST_CASE("grid Jacobi for B(p,q,mu,theta)") {
    const BracketRule rule = bpqmt_rule(Scalar(1), Scalar(1), Scalar(2), 1);
    const IndexGrid grid = uniform_grid(Identity::jacobi, {-1, 0, 1}, {-1, 0, 1});
    const Verdict v = grid_identity_check(rule, Identity::jacobi, grid);
    CHECK(v.status == Verdict::Status::holds_universally);
    CHECK(v.points_checked == 729);

    const Verdict symbolic = grid_identity_check(bpqmt_rule(sym("p"), sym("q"), sym("mu"), 2), Identity::jacobi, grid, 4);
    CHECK(symbolic.status == Verdict::Status::holds_universally);

    const Verdict anti = grid_identity_check(rule, Identity::antisymmetry, uniform_grid(Identity::antisymmetry, {0, 1}, {0, 1}));
    CHECK(anti.status == Verdict::Status::holds_universally);
}

TEST_CASE("mutated rule fails Jacobi with a witness") {
    const IndexGrid grid = uniform_grid(Identity::jacobi, {-1, 0, 1}, {0, 1, 2});
    const Verdict v = grid_identity_check(mutated_bpq(sym("p"), sym("q")), Identity::jacobi, grid);
    REQUIRE(v.status == Verdict::Status::fails);
    REQUIRE(v.witness);
    CHECK(!v.witness->residual.is_zero());
    CHECK(v.witness->indices.size() == 6);

    // the witness is independent of the thread count
    const Verdict v4 = grid_identity_check(mutated_bpq(sym("p"), sym("q")), Identity::jacobi, grid, 4);
    CHECK(v4.witness->to_string() == v.witness->to_string());
    CHECK(v4.points_checked == v.points_checked);
}

TEST_CASE("grid preconditions") {
    const BracketRule rule = bpqmt_rule(Scalar(1), Scalar(1), Scalar(0), 0);
    CHECK(required_grid_size(rule, Identity::jacobi, "alpha") == 3);
    CHECK(required_grid_size(rule, Identity::antisymmetry, "i") == 2);
    try {
        grid_identity_check(rule, Identity::jacobi, uniform_grid(Identity::jacobi, {0, 1}, {0, 1, 2}));
        FAIL("expected an insufficient grid error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("at least 3") != std::string::npos);
    }
    CHECK_THROWS_AS(grid_identity_check(rule, Identity::jacobi, uniform_grid(Identity::jacobi, {0, 0, 1}, {0, 1, 2})),
                    std::invalid_argument);

    // the full B(p,q) bracket carries the delta cocycle and is refused
    const BlockAlgebra alg({Scalar(1), Scalar(1)});
    CHECK_THROWS_AS(grid_identity_check(alg.rule(), Identity::jacobi, uniform_grid(Identity::jacobi, {-1, 0, 1}, {0, 1, 2})),
                    std::invalid_argument);
    // levels below the rule's minimum are refused
    CHECK_THROWS_AS(grid_identity_check(alg.delta_free_rule(), Identity::jacobi,
                                        uniform_grid(Identity::jacobi, {-1, 0, 1}, {-1, 0, 1})),
                    std::invalid_argument);
}

TEST_CASE("declared degree bounds are enforced") {
    auto quadratic = [](const BasisIndex& x, const BasisIndex& y) {
        const Scalar a{Rational(x.grade)};
        return Element(BasisIndex::graded(x.grade + y.grade, x.level + y.level), a * a);
    };
    CHECK_THROWS_AS(make_rule("quadratic", quadratic, DegreeBounds{1, 1}), std::logic_error);
    CHECK_NOTHROW(make_rule("quadratic", quadratic, DegreeBounds{2, 1}));
}

TEST_CASE("subalgebra closure examples") {
    const BlockAlgebra b11({Scalar(1), Scalar(1)});
    const Window window(0, 6, 0);
    const GradedBasis closure = subalgebra_closure(b11.delta_free_rule(), {Element::basis(1), Element::basis(2)}, window);
    for (std::int64_t a = 3; a <= 6; ++a) CHECK(membership(Element::basis(a), closure));
    CHECK(membership(Element::basis(4), closure));
    CHECK(!membership(Element::central(), closure));
    CHECK(membership(Element(), closure));
    CHECK_THROWS_AS(membership(Element::basis(9), closure), std::invalid_argument);

    const GradedBasis central = subalgebra_closure(b11.rule(), {Element::central()}, Window(-2, 2, 1));
    CHECK(central.dimension() == 1);
    CHECK(membership(Element::central(Scalar(3)), central));

    const GradedBasis zero = subalgebra_closure(b11.rule(), {Element::basis(0)}, Window(-2, 2, 1));
    CHECK(zero.dimension() == 1);
    CHECK(zero.dimension(0) == 1);

    CHECK_THROWS_AS(subalgebra_closure(b11.rule(), {Element::basis(0) * sym("p")}, Window(-2, 2, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(subalgebra_closure(b11.rule(), {Element::basis(0) + Element::basis(1)}, Window(-2, 2, 1)),
                    std::invalid_argument);
}

TEST_CASE("closure is idempotent and monotone in the window") {
    const BlockAlgebra alg({Scalar(Rational(1, 2)), Scalar(3)});
    const std::vector<Element> gens = {Element::basis(-1, 1), Element::basis(2), Element::basis(1, 0) + Element::basis(1, 1)};
    const Window small(-3, 3, 2), large(-4, 4, 3);
    const GradedBasis a = subalgebra_closure(alg.rule(), gens, small);
    const GradedBasis b = subalgebra_closure(alg.rule(), gens, large);

    // coordinates of a grade-g element inside the small window
    auto coords = [&](const Element& e, std::int64_t g) {
        RationalVector v;
        for (std::int64_t l = 0; l <= small.level_max; ++l) v.push_back(e.coefficient(BasisIndex::graded(g, l)).constant_value());
        v.push_back(e.coefficient(BasisIndex::central()).constant_value());
        return v;
    };
    for (const auto& [g, rows] : a.by_grade) {
        std::vector<RationalVector> span;
        if (b.by_grade.count(g))
            for (const auto& e : b.by_grade.at(g)) span.push_back(coords(truncate(e, small), g));
        for (const auto& e : rows) CHECK(in_span(coords(e, g), span));
    }

    std::vector<Element> all;
    for (const auto& [g, rows] : a.by_grade) all.insert(all.end(), rows.begin(), rows.end());
    const GradedBasis again = subalgebra_closure(alg.rule(), all, small);
    CHECK(again.dimension() == a.dimension());
    for (const auto& [g, rows] : again.by_grade) CHECK(rows == a.by_grade.at(g));
}

TEST_CASE("adjoint chains match the closed form") {
    const BlockAlgebra alg({sym("p"), sym("q")});
    const Scalar q = sym("q");
    const Element z1 = Element::basis(2), z2 = Element::basis(1);
    CHECK(adjoint_chain(alg.rule(), z1, z2, 1, 1) == Element::basis(3) * (-q));
    CHECK(adjoint_chain(alg.rule(), z1, z2, 2, 1) == Element::basis(5) * (-(q * q)));
    CHECK(adjoint_chain(alg.rule(), z1, z2, 1, 2) == Element::basis(4) * (Scalar(-2) * q * q));

    for (std::int64_t mu0 : {-1, -2, -3}) {
        for (unsigned l1 = 1; l1 <= 5; ++l1) {
            for (unsigned l2 = 1; l2 <= 5; ++l2) {
                Rational coef(1);
                for (unsigned i = 1; i <= l1; ++i) coef *= Rational(-(static_cast<long>(i) - 1) * mu0 + static_cast<long>(i) - 2);
                for (unsigned j = 1; j + 1 <= l2; ++j) coef *= Rational(-(static_cast<long>(l1 + j) - 1) * mu0 + static_cast<long>(l1));
                const std::int64_t alpha = static_cast<std::int64_t>(l1) * (1 - mu0) - static_cast<std::int64_t>(l2) * mu0;
                const Element expected = Element::basis(alpha) * (Scalar(coef) * pow(q, l1 + l2 - 1));
                CHECK(adjoint_chain(alg.rule(), Element::basis(1 - mu0), Element::basis(-mu0), l1, l2) == expected);
            }
        }
    }
    CHECK_THROWS_AS(adjoint_chain(alg.rule(), z1, z2, 1, 0), std::invalid_argument);
}
