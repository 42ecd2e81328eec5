#include "blockalg/poly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace blockalg;
using testing::sym;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("3").to_string() == "3");
    CHECK(Rational::parse("-4/6").to_string() == "-2/3");
    CHECK(Rational::parse("10/5") == Rational(2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 3) + Rational(1, 6) == Rational(5, 6));
    CHECK(Rational(2, 3) * Rational(-3, 4) == Rational(-1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(factorial(5) == Rational(120));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("polynomial examples") {
    const Poly p = sym("p"), q = sym("q");
    CHECK((p + Poly(1)) * (p - Poly(1)) == p * p - Poly(1));
    CHECK((Poly(Rational(2, 3)) + Poly(Rational(1, 6))) == Poly(Rational(5, 6)));

    // bracket coefficient of B(p,q) at i=j=0, alpha=1, beta=-1, p=q=1
    const auto idx = make_symbols({"alpha", "beta", "i", "j", "p", "q"});
    auto v = [&](const char* n) { return Poly::variable(idx, n); };
    const Poly coef = (v("i") + v("q")) * (v("beta") + v("p")) - (v("j") + v("q")) * (v("alpha") + v("p"));
    const Poly at = coef.substitute({{"i", 0}, {"j", 0}, {"alpha", 1}, {"beta", -1}, {"p", 1}, {"q", 1}});
    CHECK(at.is_constant());
    CHECK(at.constant_value() == Rational(-2));
    CHECK(coef.degree_bound("alpha") == 1);
    CHECK(coef.degree_bound("i") == 1);

    CHECK((p * p - Poly(1)).substitute({{"p", 3}}) == Poly(8));
    const Poly k = Poly::variable(make_symbols({"k", "p", "q"}), "k");
    const Poly pk = Poly::variable(k.symbols(), "p"), qk = Poly::variable(k.symbols(), "q");
    CHECK((Poly(2) * qk + (Poly(1) - pk * pk) * k).substitute({{"p", 2}, {"q", 1}}) == Poly(2) - Poly(3) * k);
    CHECK(Poly().substitute({{"p", 5}}).is_zero());
    CHECK((p * p - Poly(1)).degree_bound("q") == 0);
    CHECK((v("i") * v("i") + v("alpha")).degree_bound("i") == 2);
}

TEST_CASE("polynomial printing is canonical") {
    const Poly p = sym("p"), q = sym("q");
    CHECK((Poly(2) * p * p * q - Poly(Rational(1, 3))).to_string() == "2*p^2*q - 1/3");
    CHECK((q + p).to_string() == (p + q).to_string());
    CHECK(Poly().to_string() == "0");
    CHECK((-p).to_string() == "-p");
}

TEST_CASE("symbol table mismatch names the symbol") {
    const Poly x = Poly::variable(make_symbols({"x"}), "x");
    const Poly y = Poly::variable(make_symbols({"y"}), "y");
    try {
        (void)(x + y);
        FAIL("expected a mismatch error");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("symbol table mismatch") != std::string::npos);
        CHECK((what.find("'x'") != std::string::npos || what.find("'y'") != std::string::npos));
    }
    // constants combine with anything
    CHECK((x + Poly(1)) - Poly(1) == x);
    // tables equal by content are compatible
    const Poly x2 = Poly::variable(make_symbols({"x"}), "x");
    CHECK(x + x2 == Poly(2) * x);
}

TEST_CASE("division only by nonzero constants") {
    CHECK(sym("p") / Rational(2) * Poly(2) == sym("p"));
    CHECK_THROWS_AS(sym("p") / Rational(0), std::domain_error);
    CHECK_THROWS_AS((void)sym("p").constant_value(), std::invalid_argument);
}

namespace {

Poly random_poly(std::mt19937_64& rng) {
    const char* names[] = {"a", "b", "p", "q"};
    std::uniform_int_distribution<int> terms(0, 4), exp(0, 2), pick(0, 3);
    Poly out;
    for (int t = terms(rng); t > 0; --t) {
        Poly m(testing::random_rational(rng));
        for (int f = exp(rng); f > 0; --f) m *= sym(names[pick(rng)]);
        out += m;
    }
    return out;
}

}  // namespace

TEST_CASE("ring axioms and substitution homomorphism on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f + g == g + f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == Poly());

        std::map<std::string, Rational> bind{{"a", testing::random_rational(rng)},
                                             {"p", testing::random_rational(rng)},
                                             {"q", testing::random_rational(rng)}};
        CHECK((f * g).substitute(bind) == f.substitute(bind) * g.substitute(bind));
        CHECK((f + g).substitute(bind) == f.substitute(bind) + g.substitute(bind));

        if (!f.is_zero() && !g.is_zero())
            for (const char* s : {"a", "b", "p", "q"})
                CHECK((f * g).degree_bound(s) == f.degree_bound(s) + g.degree_bound(s));
    }
}
