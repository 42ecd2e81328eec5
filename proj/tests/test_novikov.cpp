#include "blockalg/novikov.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace blockalg;
using testing::sym;

namespace {

const IndexGrid jacobi_grid = uniform_grid(Identity::jacobi, {-1, 0, 1}, {-1, 0, 1});

}  // namespace

TEST_CASE("Witt-type products") {
    CHECK(witt_novikov_product({Scalar(2), Scalar(0), 0}, 1, 2) == Element::basis(3) * Scalar(4));
    CHECK(witt_novikov_product({Scalar(2), Scalar(3), 1}, 1, 2) == Element::basis(3) * Scalar(4) + Element::basis(4) * Scalar(3));
    CHECK(witt_novikov_product({Scalar(0), Scalar(0), 0}, 0, 0).is_zero());
}

TEST_CASE("Novikov axioms") {
    const auto grid = novikov_grid({-1, 0, 1});
    const NovikovVerdict witt = novikov_axiom_check(witt_novikov_rule({sym("p"), sym("mu"), 1}), grid);
    CHECK(witt.left_symmetry.status == Verdict::Status::holds_universally);
    CHECK(witt.right_commutativity.status == Verdict::Status::holds_universally);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const WittNovikovParams params{Scalar(testing::random_rational(rng)), Scalar(testing::random_rational(rng)),
                                       std::uniform_int_distribution<std::int64_t>(-3, 3)(rng)};
        CHECK(novikov_axiom_check(witt_novikov_rule(params), grid).holds());
    }

    // x_a x_b = (b+p) x_{a+b} + mu*a x_{a+b+theta}
    const ProductRule broken = linear_product_rule(
        "broken", {ProductTerm{0, sym("p"), Scalar(), Scalar(1)}, ProductTerm{1, Scalar(), sym("mu"), Scalar()}});
    const NovikovVerdict bad = novikov_axiom_check(broken, grid);
    CHECK(bad.right_commutativity.status == Verdict::Status::fails);
    REQUIRE(bad.right_commutativity.witness);
    CHECK(!bad.right_commutativity.witness->residual.is_zero());

    const NovikovVerdict zero = novikov_axiom_check(zero_product_rule(), grid);
    CHECK(zero.holds());

    CHECK_THROWS_AS(novikov_axiom_check(witt_novikov_rule({sym("p"), sym("mu"), 1}), novikov_grid({0, 1})),
                    std::invalid_argument);
}

TEST_CASE("affinization reproduces the closed-form bracket") {
    const Scalar p = sym("p"), q = sym("q"), mu = sym("mu");
    const BracketRule plain = affinize(witt_novikov_rule({p, Scalar(), 0}), {q});
    const BracketRule full = affinize(witt_novikov_rule({p, mu, 2}), {q});
    const BracketRule closed = bpqmt_rule(p, q, mu, 2);
    for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t b = -2; b <= 2; ++b)
            for (std::int64_t i = -2; i <= 2; ++i)
                for (std::int64_t j = -2; j <= 2; ++j) {
                    const BasisIndex x = BasisIndex::graded(a, i), y = BasisIndex::graded(b, j);
                    const Scalar si{Rational(i)}, sj{Rational(j)}, sa{Rational(a)}, sb{Rational(b)};
                    const Scalar coef = (si + q) * (sb + p) - (sj + q) * (sa + p);
                    CHECK(plain(x, y) == Element(BasisIndex::graded(a + b, i + j), coef));
                    CHECK(full(x, y) == closed(x, y));
                    Element expected(BasisIndex::graded(a + b, i + j), coef);
                    expected.add(BasisIndex::graded(a + b + 2, i + j), (si - sj) * mu);
                    CHECK(full(x, y) == expected);
                }
    CHECK(bracket_apply(affinize(zero_product_rule(), {q}), Element::basis(1, 2), Element::basis(3, -1)).is_zero());
}

TEST_CASE("affinization commutes with a grade shift") {
    const Scalar p = sym("p"), q = sym("q"), mu = sym("mu");
    const std::int64_t shift = 3;
    const ProductRule base = witt_novikov_rule({p, mu, 1});
    // same product on labels shifted by `shift`: x'_a = x_{a - shift}
    ProductRule shifted;
    shifted.name = "shifted";
    shifted.on_basis = [&](std::int64_t a, std::int64_t b) {
        Element out;
        const Element product = base(a - shift, b - shift);
        for (const auto& [label, c] : product.support()) out.add(BasisIndex::graded(label.grade + 2 * shift, 0), c);
        return out;
    };
    const BracketRule l0 = affinize(base, {q});
    const BracketRule l1 = affinize(shifted, {q});
    for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t b = -2; b <= 2; ++b)
            for (std::int64_t i = -1; i <= 1; ++i)
                for (std::int64_t j = -1; j <= 1; ++j) {
                    Element moved;
                    const Element original = l0(BasisIndex::graded(a, i), BasisIndex::graded(b, j));
                    for (const auto& [label, c] : original.support())
                        moved.add(BasisIndex::graded(label.grade + 2 * shift, label.level), c);
                    CHECK(l1(BasisIndex::graded(a + shift, i), BasisIndex::graded(b + shift, j)) == moved);
                }
}

TEST_CASE("Novikov and affinized Jacobi verdicts agree") {
    const Scalar q = sym("q");
    const auto ngrid = novikov_grid({-1, 0, 1});
    const EquivalenceRecord witt = equivalence_probe(witt_novikov_rule({sym("p"), sym("mu"), 1}), {q}, ngrid, jacobi_grid);
    CHECK(witt.novikov.holds());
    CHECK(witt.jacobi.status == Verdict::Status::holds_universally);
    CHECK(witt.equivalence_observed);

    const ProductRule broken = linear_product_rule(
        "broken", {ProductTerm{0, sym("p"), Scalar(), Scalar(1)}, ProductTerm{1, Scalar(), sym("mu"), Scalar()}});
    const EquivalenceRecord bad = equivalence_probe(broken, {q}, ngrid, jacobi_grid);
    CHECK(!bad.novikov.holds());
    CHECK(!bad.jacobi.holds());
    CHECK(bad.equivalence_observed);

    // one-dimensional x0 x0 = x0
    const ProductRule unit = table_product_rule("unit", {{{0, 0}, Element::basis(0)}});
    const EquivalenceRecord one = equivalence_probe(unit, {q}, {}, jacobi_grid);
    CHECK(one.novikov.left_symmetry.status == Verdict::Status::holds_on_window);
    CHECK(one.jacobi.status == Verdict::Status::holds_on_window);
    CHECK(one.equivalence_observed);

    std::mt19937_64 rng(2024);
    const auto terms = witt_terms({sym("p"), sym("mu"), 1});
    for (int k = 0; k < 50; ++k) {
        const ProductRule m = linear_product_rule("mutation", mutate_one_coefficient(terms, rng));
        CHECK(equivalence_probe(m, {q}, ngrid, jacobi_grid, 2).equivalence_observed);
    }
}

TEST_CASE("table rules need every product on their domain") {
    const ProductRule partial = table_product_rule("partial", {{{0, 1}, Element::basis(1)}});
    CHECK_THROWS_AS(partial(1, 0), std::out_of_range);
}

TEST_CASE("Block algebra over sZ reindexing") {
    for (const Rational& s : {Rational(1), Rational(2), Rational(5, 2)}) {
        const Verdict v = block_sZ_reindex_check(s, Window(-3, 3, 3));
        CHECK(v.status == Verdict::Status::holds_on_window);
        CHECK(v.points_checked == 7 * 7 * 4 * 4);
    }
}
