#include "blockalg/intermediate_series.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>
#include <tuple>

using namespace blockalg;
using testing::sym;

namespace {

const BlockParams p0q1{Scalar(0), Scalar(1)};

ModuleVector v(std::int64_t mu, Rational c = Rational(1)) { return ModuleVector::basis(mu, Scalar(c)); }

}  // namespace

TEST_CASE("action examples") {
    CHECK(act(Aab{Rational(1, 2), Rational(0)}, p0q1, Element::basis(2), v(1)) == v(3, Rational(3, 2)));
    CHECK(act(Ba{Rational(2)}, p0q1, Element::basis(1), v(-1)) == v(0, Rational(-3)));
    CHECK(act(Aa{Rational(5)}, p0q1, Element::basis(2), v(0)) == v(2, Rational(14)));
    CHECK(act(Aa{Rational(5)}, p0q1, Element::basis(2), v(3)) == v(5, Rational(5)));
    CHECK(act(Ba{Rational(5)}, p0q1, Element::basis(2), v(3)) == v(5, Rational(3)));
    for (const IntermediateKind& kind : {IntermediateKind{Aab{Rational(1), Rational(2)}}, IntermediateKind{Aa{Rational(1)}},
                                         IntermediateKind{Ba{Rational(1)}}}) {
        CHECK(act(kind, p0q1, Element::basis(3, 1), v(2)).is_zero());
        CHECK(act(kind, p0q1, Element::central(), v(2)).is_zero());
        CHECK(act(kind, p0q1, Element::central(), v(2), Scalar(Rational(1, 3))) == v(2, Rational(1, 3)));
    }
    CHECK(v(3, Rational(3, 2)).to_string() == "3/2*v[3]");
    CHECK((v(0, Rational(-1)) + v(3)).to_string() == "-v[0] + v[3]");
}

TEST_CASE("action is bilinear") {
    std::mt19937_64 rng(31);
    const IntermediateKind kinds[] = {Aab{Rational(1, 3), Rational(2)}, Aa{Rational(-1)}, Ba{Rational(4)}};
    std::uniform_int_distribution<std::int64_t> g(-3, 3), l(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        for (const auto& kind : kinds) {
            Element x, y;
            ModuleVector u, w;
            for (int t = 0; t < 3; ++t) {
                x.add(BasisIndex::graded(g(rng), l(rng)), Scalar(testing::random_rational(rng)));
                y.add(BasisIndex::graded(g(rng), l(rng)), Scalar(testing::random_rational(rng)));
                u.add(g(rng), Scalar(testing::random_rational(rng)));
                w.add(g(rng), Scalar(testing::random_rational(rng)));
            }
            const BlockParams params{sym("p"), sym("q")};
            CHECK(act(kind, params, x + y, u) == act(kind, params, x, u) + act(kind, params, y, u));
            CHECK(act(kind, params, x, u + w) == act(kind, params, x, u) + act(kind, params, x, w));
        }
    }
}

TEST_CASE("module axioms: documented instance and symbolic q") {
    const BlockAlgebra alg({Scalar(3), Scalar(1)});
    const ModuleVerdict v = module_axiom_check(Aab{Rational(1, 2), Rational(0)}, alg, Window(-3, 3, 2), -5, 5);
    CHECK(v.status == Verdict::Status::holds_on_window);
    CHECK(v.failures.empty());
    CHECK(v.points_checked == 7 * 3 * 7 * 3 * 11);

    const BlockAlgebra symbolic({sym("p"), sym("q")});
    CHECK(module_axiom_check(Aab{Rational(2, 3), Rational(-5)}, symbolic, Window(-2, 2, 1), -3, 3).holds());
    CHECK(module_axiom_check(Aa{Rational(7)}, symbolic, Window(-2, 2, 1), -3, 3).holds());
    CHECK(module_axiom_check(Ba{Rational(-1, 2)}, symbolic, Window(-2, 2, 1), -3, 3).holds());
}

TEST_CASE("module axioms on random parameters") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational p = testing::random_rational(rng), q = testing::random_rational(rng, true);
        const Rational a = testing::random_rational(rng), b = testing::random_rational(rng);
        const BlockAlgebra alg({Scalar(p), Scalar(q)});
        for (const IntermediateKind& kind : {IntermediateKind{Aab{a, b}}, IntermediateKind{Aa{a}}, IntermediateKind{Ba{a}}})
            CHECK(module_axiom_check(kind, alg, Window(-3, 3, 2), -6, 6).holds());
    }
}

TEST_CASE("A_a and B_a agree with A_{0,1} and A_{0,0} away from their exceptional vectors") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        const Rational a = testing::random_rational(rng), q = testing::random_rational(rng, true);
        const BlockParams params{Scalar(testing::random_rational(rng)), Scalar(q)};
        for (std::int64_t alpha = -3; alpha <= 3; ++alpha)
            for (std::int64_t mu = -6; mu <= 6; ++mu) {
                const Element x = Element::basis(alpha);
                if (mu != 0) CHECK(act(Aa{a}, params, x, v(mu)) == act(Aab{Rational(0), Rational(1)}, params, x, v(mu)));
                if (mu != -alpha) CHECK(act(Ba{a}, params, x, v(mu)) == act(Aab{Rational(0), Rational(0)}, params, x, v(mu)));
            }
    }
}

TEST_CASE("a nonzero central action breaks the module exactly at the cocycle") {
    const BlockAlgebra alg({Scalar(3), Scalar(1)});
    const ModuleVerdict r = module_axiom_check(Aab{Rational(1, 2), Rational(0)}, alg, Window(-3, 3, 2), -6, 6, Scalar(1));
    CHECK(r.status == Verdict::Status::fails);
    REQUIRE(r.witness);
    CHECK(r.witness->alpha == 2);
    CHECK(r.witness->beta == -2);
    CHECK(r.witness->i == 0);
    CHECK(r.witness->j == 0);
    CHECK(r.witness->residual == v(r.witness->mu, Rational(1, 2)));

    // failing pairs: alpha + beta = 0, i = j = 0, |alpha| >= 2, every mu
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> pairs;
    for (const auto& f : r.failures) {
        pairs.insert({f.alpha, f.i, f.beta, f.j});
        CHECK(f.residual == v(f.mu, virasoro_cocycle(f.alpha)));
    }
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> expected;
    for (std::int64_t a : {-3, -2, 2, 3}) expected.insert({a, 0, -a, 0});
    CHECK(pairs == expected);
    CHECK(r.failures.size() == expected.size() * 13);
}

TEST_CASE("boundedness") {
    CHECK(boundedness_report(Aab{Rational(1), Rational(2)}).bound == 1);
    CHECK(boundedness_report(Aa{Rational(1)}).bound == 1);
    CHECK(boundedness_report(Ba{Rational(1)}).bound == 1);
    CHECK(boundedness_report(Ba{Rational(-1, 2)}).kind == "B_{-1/2}");
}
