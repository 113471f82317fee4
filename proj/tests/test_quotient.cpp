#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vsym/quotient.hpp"

using namespace vsym;

TEST_CASE("ring_make examples") {
    SECTION("coordinate ring of Q5") {
        RingPtr q5 = ring_make({"x1", "x2", "x3", "y1", "y2", "y3"},
                               {"x1*y1+x2*y2+x3*y3-1"});
        REQUIRE_FALSE(q5->is_trivial());
        REQUIRE(q5->gb().generators.size() == 1);
    }
    SECTION("real 3-sphere") {
        RingPtr s3 = ring_make({"x", "y", "z", "w"}, {"x^2+y^2+z^2+w^2-1"});
        REQUIRE_FALSE(s3->is_trivial());
    }
    SECTION("trivial ring flagged") {
        RingPtr t = ring_make({"x"}, {"x", "x-1"});
        REQUIRE(t->is_trivial());
    }
}

TEST_CASE("canonical representatives") {
    RingPtr s3 = ring_make({"x", "y", "z", "w"}, {"x^2+y^2+z^2+w^2-1"});

    SECTION("x^2 rewrites through the sphere relation") {
        REQUIRE(elem(s3, "x^2") == elem(s3, "1-y^2-z^2-w^2"));
        REQUIRE(elem(s3, "x^2").rep() == poly_parse("1-y^2-z^2-w^2", s3->vars()));
    }
    SECTION("zero element") {
        REQUIRE(elem(s3, "0").is_zero());
    }
    SECTION("defining relation is 1") {
        RingPtr q5 = ring_make({"x1", "x2", "x3", "y1", "y2", "y3"},
                               {"x1*y1+x2*y2+x3*y3-1"});
        REQUIRE(elem(q5, "x1*y1+x2*y2+x3*y3").is_one());
    }
}

TEST_CASE("equality soundness") {
    RingPtr s3 = ring_make({"x", "y", "z", "w"}, {"x^2+y^2+z^2+w^2-1"});
    RingElement f = elem(s3, "x^2+y^2");
    RingElement g = elem(s3, "1-z^2-w^2");
    REQUIRE(f == g);
    REQUIRE((f - g).is_zero());
    REQUIRE(normal_form(poly_parse("x^2+y^2-(1-z^2-w^2)", s3->vars()), s3->gb()).is_zero());
    REQUIRE(f != elem(s3, "x^2"));
}

TEST_CASE("express_one examples") {
    SECTION("x and 1-x") {
        RingPtr r = ring_make({"x"}, {});
        auto cert = express_one(r, {elem(r, "x"), elem(r, "1-x")});
        REQUIRE(cert);
        REQUIRE((*cert)[0] * elem(r, "x") + (*cert)[1] * elem(r, "1-x") == elem(r, "1"));
    }
    SECTION("sphere coordinates") {
        RingPtr s3 = ring_make({"x", "y", "z", "w"}, {"x^2+y^2+z^2+w^2-1"});
        std::vector<RingElement> coords = {elem(s3, "x"), elem(s3, "y"), elem(s3, "z"),
                                           elem(s3, "w")};
        auto cert = express_one(s3, coords);
        REQUIRE(cert);
        RingElement sum = elem(s3, "0");
        for (std::size_t i = 0; i < 4; ++i) sum = sum + (*cert)[i] * coords[i];
        REQUIRE(sum.is_one());
    }
    SECTION("proper ideal refused") {
        RingPtr r = ring_make({"x", "y"}, {});
        REQUIRE_FALSE(express_one(r, {elem(r, "x"), elem(r, "y")}));
    }
}

TEST_CASE("express_one is complete on constructed unimodular families") {
    std::mt19937 rng(1234);
    RingPtr s3 = ring_make({"x", "y", "z", "w"}, {"x^2+y^2+z^2+w^2-1"});
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> var(0, 3);
    auto rnd = [&] {
        Polynomial p = Polynomial::constant(s3->vars(), coeff(rng));
        p = p + Polynomial::variable(s3->vars(), var(rng)) * Rational(coeff(rng));
        return elem(s3, p);
    };
    for (int trial = 0; trial < 10; ++trial) {
        // a_1 := 1 - sum_{i>=2} c_i a_i guarantees a representation of 1
        std::vector<RingElement> a(3);
        RingElement acc = elem(s3, Rational(0));
        for (int i = 1; i < 3; ++i) {
            a[i] = rnd();
            acc = acc + rnd() * a[i];
        }
        a[0] = elem(s3, Rational(1)) - acc;
        auto cert = express_one(s3, a);
        REQUIRE(cert);
        RingElement sum = elem(s3, Rational(0));
        for (int i = 0; i < 3; ++i) sum = sum + (*cert)[i] * a[i];
        REQUIRE(sum.is_one());
    }
}

TEST_CASE("trivial ring refused by express_one") {
    RingPtr t = ring_make({"x"}, {"x", "x-1"});
    REQUIRE_THROWS(express_one(t, {elem(t, "x")}));
}
