#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "vsym/groebner.hpp"
#include "vsym/parse.hpp"

using namespace vsym;

TEST_CASE("spolynomial examples") {
    VarListPtr vars = make_vars({"x", "y"});
    auto lex = MonomialOrder::lex();

    SECTION("divisible leading terms cancel completely") {
        Polynomial f = poly_parse("x^2", vars), g = poly_parse("x", vars);
        REQUIRE(spolynomial(f, g, lex).is_zero());
    }
    SECTION("hand-expanded example") {
        Polynomial f = poly_parse("x^2+y", vars), g = poly_parse("x*y+1", vars);
        // S = y*f - x*g = y^2 - x
        REQUIRE(spolynomial(f, g, lex) == poly_parse("y^2-x", vars));
    }
    SECTION("identical inputs") {
        Polynomial f = poly_parse("x^2+y", vars);
        REQUIRE(spolynomial(f, f, lex).is_zero());
    }
    SECTION("zero input rejected") {
        Polynomial f = poly_parse("x", vars);
        REQUIRE_THROWS(spolynomial(f, Polynomial(vars), lex));
    }
}

TEST_CASE("buchberger examples") {
    auto drl = MonomialOrder::degrevlex();

    SECTION("single variable") {
        VarListPtr vars = make_vars({"x"});
        GroebnerBasis gb = buchberger({poly_parse("x", vars)}, drl);
        REQUIRE(gb.generators.size() == 1);
        REQUIRE(gb.generators[0] == poly_parse("x", vars));
        REQUIRE(gb.reduced);
    }
    SECTION("circle and line") {
        VarListPtr vars = make_vars({"x", "y"});
        GroebnerBasis gb = buchberger(
            {poly_parse("x^2+y^2-1", vars), poly_parse("x-y", vars)}, drl);
        REQUIRE(gb.generators.size() == 2);
        REQUIRE(std::find(gb.generators.begin(), gb.generators.end(),
                          poly_parse("x-y", vars)) != gb.generators.end());
        REQUIRE(std::find(gb.generators.begin(), gb.generators.end(),
                          poly_parse("y^2-1/2", vars)) != gb.generators.end());
    }
    SECTION("principal ideal stays put") {
        VarListPtr vars = make_vars({"x1", "x2", "x3", "y1", "y2", "y3"});
        Polynomial rel = poly_parse("x1*y1+x2*y2+x3*y3-1", vars);
        GroebnerBasis gb = buchberger({rel}, drl);
        REQUIRE(gb.generators.size() == 1);
        REQUIRE(gb.generators[0] == rel);
    }
}

TEST_CASE("normal form examples") {
    auto drl = MonomialOrder::degrevlex();

    SECTION("generator reduces to zero") {
        VarListPtr vars = make_vars({"x1", "x2", "x3", "y1", "y2", "y3"});
        Polynomial rel = poly_parse("x1*y1+x2*y2+x3*y3-1", vars);
        GroebnerBasis gb = buchberger({rel}, drl);
        REQUIRE(normal_form(rel, gb).is_zero());
    }
    SECTION("sphere relation rewrite") {
        VarListPtr vars = make_vars({"x", "y", "z", "w"});
        GroebnerBasis gb = buchberger({poly_parse("x^2+y^2+z^2+w^2-1", vars)}, drl);
        REQUIRE(normal_form(poly_parse("x^2", vars), gb) ==
                poly_parse("1-y^2-z^2-w^2", vars));
    }
    SECTION("units survive proper ideals") {
        VarListPtr vars = make_vars({"x", "y"});
        GroebnerBasis gb = buchberger({poly_parse("x^2+y^2-1", vars)}, drl);
        REQUIRE(normal_form(poly_parse("1", vars), gb) == poly_parse("1", vars));
    }
}

TEST_CASE("normal form idempotence") {
    std::mt19937 rng(5);
    VarListPtr vars = make_vars({"x", "y", "z"});
    GroebnerBasis gb = buchberger(
        {poly_parse("x^2+y^2+z^2-1", vars), poly_parse("x*y-z", vars)},
        MonomialOrder::degrevlex());
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, 2);
    for (int i = 0; i < 30; ++i) {
        Polynomial p(vars);
        for (int t = 0; t < 3; ++t) {
            Monomial m(3);
            for (int j = 0; j < 3; ++j) m.e[j] = expo(rng);
            p = p + Polynomial::term(vars, m, coeff(rng));
        }
        Polynomial nf = normal_form(p, gb);
        REQUIRE(normal_form(nf, gb) == nf);
    }
}

TEST_CASE("cofactor extraction") {
    auto drl = MonomialOrder::degrevlex();

    auto reexpand = [](const std::vector<Polynomial>& cof,
                       const std::vector<Polynomial>& orig, const Polynomial& rem) {
        Polynomial acc = rem;
        for (std::size_t i = 0; i < cof.size(); ++i) acc = acc + cof[i] * orig[i];
        return acc;
    };

    SECTION("x + (1-x) = 1") {
        VarListPtr vars = make_vars({"x"});
        std::vector<Polynomial> orig = {poly_parse("x", vars), poly_parse("1-x", vars)};
        GroebnerBasis gb = buchberger(orig, drl, true);
        auto [rem, cof] = normal_form_with_cofactors(poly_parse("1", vars), gb);
        REQUIRE(rem.is_zero());
        REQUIRE(reexpand(cof, orig, rem) == poly_parse("1", vars));
    }
    SECTION("1 is not in a proper ideal") {
        VarListPtr vars = make_vars({"x", "y", "z", "w"});
        std::vector<Polynomial> orig = {poly_parse("x^2+y^2+z^2+w^2-1", vars)};
        GroebnerBasis gb = buchberger(orig, drl, true);
        auto [rem, cof] = normal_form_with_cofactors(poly_parse("1", vars), gb);
        REQUIRE(rem == poly_parse("1", vars));
        REQUIRE(cof[0].is_zero());
    }
    SECTION("any valid representation accepted, verified by expansion") {
        VarListPtr vars = make_vars({"x", "y"});
        std::vector<Polynomial> orig = {poly_parse("x", vars), poly_parse("y", vars),
                                        poly_parse("x+y-1", vars)};
        GroebnerBasis gb = buchberger(orig, drl, true);
        auto [rem, cof] = normal_form_with_cofactors(poly_parse("1", vars), gb);
        REQUIRE(rem.is_zero());
        REQUIRE(reexpand(cof, orig, rem) == poly_parse("1", vars));
    }
    SECTION("tracking data absent") {
        VarListPtr vars = make_vars({"x"});
        GroebnerBasis gb = buchberger({poly_parse("x", vars)}, drl, false);
        REQUIRE_THROWS(normal_form_with_cofactors(poly_parse("1", vars), gb));
    }
}

TEST_CASE("cofactor identity holds on random inputs") {
    std::mt19937 rng(31);
    VarListPtr vars = make_vars({"x", "y"});
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    auto rp = [&] {
        Polynomial p(vars);
        for (int t = 0; t < 2; ++t) {
            Monomial m(2);
            m.e[0] = expo(rng);
            m.e[1] = expo(rng);
            p = p + Polynomial::term(vars, m, coeff(rng));
        }
        return p;
    };
    for (int i = 0; i < 20; ++i) {
        std::vector<Polynomial> orig = {rp(), rp(), rp()};
        std::erase_if(orig, [](const Polynomial& p) { return p.is_zero(); });
        if (orig.empty()) continue;
        GroebnerBasis gb = buchberger(orig, MonomialOrder::degrevlex(), true);
        Polynomial f = rp();
        auto [rem, cof] = normal_form_with_cofactors(f, gb);
        Polynomial acc = rem;
        for (std::size_t k = 0; k < orig.size(); ++k) acc = acc + cof[k] * orig[k];
        REQUIRE(acc == f);
    }
}

TEST_CASE("reduced basis is canonical under permutation and rescaling") {
    VarListPtr vars = make_vars({"x", "y", "z"});
    std::vector<Polynomial> gens = {poly_parse("x^2+y^2+z^2-1", vars),
                                    poly_parse("x*y-z", vars),
                                    poly_parse("x-z^2", vars)};
    GroebnerBasis ref = buchberger(gens, MonomialOrder::degrevlex());

    std::vector<Polynomial> shuffled = {gens[2] * Rational(7, 3), gens[0] * Rational(-2),
                                        gens[1] * Rational(1, 5)};
    GroebnerBasis other = buchberger(shuffled, MonomialOrder::degrevlex());
    REQUIRE(ref.generators == other.generators);
}

TEST_CASE("budget exhaustion is loud") {
    VarListPtr vars = make_vars({"x", "y", "z"});
    std::vector<Polynomial> gens = {poly_parse("x^3*y^2-z^4", vars),
                                    poly_parse("y^3*z-x^2", vars),
                                    poly_parse("z^3*x-y^2", vars)};
    REQUIRE_THROWS_AS(buchberger(gens, MonomialOrder::degrevlex(), false, 5),
                      BudgetExceeded);
}
