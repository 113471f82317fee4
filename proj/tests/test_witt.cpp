#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vsym/witt.hpp"

using namespace vsym;

namespace {

RingPtr free1() { return ring_make({"t"}, {}); }

UnimodularRow e1_row(const RingPtr& r) {
    std::vector<RingElement> e = {elem(r, Rational(1)), elem(r, Rational(0)),
                                  elem(r, Rational(0))};
    return row_make(r, e, e);
}

// determinant by cofactor expansion, test-side oracle
RingElement det(const Matrix& m) {
    if (m.rows == 1) return m.at(0, 0);
    RingElement acc = elem(m.ring, Rational(0));
    for (std::size_t j = 0; j < m.cols; ++j) {
        Matrix minor(m.ring, m.rows - 1, m.cols - 1);
        for (std::size_t r = 1; r < m.rows; ++r)
            for (std::size_t c = 0, cc = 0; c < m.cols; ++c)
                if (c != j) minor.at(r - 1, cc++) = m.at(r, c);
        RingElement term = m.at(0, j) * det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

TEST_CASE("pfaffian convention and base cases") {
    RingPtr r = free1();

    SECTION("psi2 has Pfaffian -1") {
        REQUIRE(pfaffian(psi2(r)) == elem(r, Rational(-1)));
    }
    SECTION("Pf([[0,a],[-a,0]]) = a") {
        Matrix m(r, 2, 2);
        m.at(0, 1) = elem(r, "t");
        m.at(1, 0) = elem(r, "0-t");
        REQUIRE(pfaffian(skew_make(m)) == elem(r, "t"));
    }
    SECTION("V(e1) has Pfaffian 1") {
        WittRep w = vaserstein_symbol(e1_row(r));
        REQUIRE(w.pf.is_one());
    }
    SECTION("Pf(M)^2 = det(M) for 4x4") {
        WittRep w = vaserstein_symbol(e1_row(r));
        REQUIRE(w.pf * w.pf == det(w.matrix.m));
    }
    SECTION("input validation") {
        Matrix odd(r, 3, 3);
        REQUIRE_THROWS(skew_make(odd));
        Matrix bad(r, 2, 2);
        bad.at(0, 0) = elem(r, "1");
        REQUIRE_THROWS(skew_make(bad));
    }
}

TEST_CASE("vaserstein symbol") {
    RingPtr r = free1();

    SECTION("the e1 template") {
        WittRep w = vaserstein_symbol(e1_row(r));
        Matrix expect(r, 4, 4);
        expect.at(0, 1) = elem(r, Rational(-1));
        expect.at(1, 0) = elem(r, Rational(1));
        expect.at(2, 3) = elem(r, Rational(-1));
        expect.at(3, 2) = elem(r, Rational(1));
        REQUIRE(w.matrix.m == expect);
    }
    SECTION("(x, 1-x, 0) with certificate (1,1,0)") {
        RingPtr rx = ring_make({"x"}, {});
        std::vector<RingElement> a = {elem(rx, "x"), elem(rx, "1-x"), elem(rx, "0")};
        std::vector<RingElement> b = {elem(rx, "1"), elem(rx, "1"), elem(rx, "0")};
        WittRep w = vaserstein_symbol(row_make(rx, a, b));
        REQUIRE(w.pf.is_one());
        REQUIRE(w.matrix.at(0, 1) == elem(rx, "0-x"));
    }
    SECTION("wrong length rejected") {
        RingPtr rx = ring_make({"x"}, {});
        std::vector<RingElement> a = {elem(rx, "x"), elem(rx, "1-x")};
        REQUIRE_THROWS(vaserstein_symbol(row_make(rx, a)));
    }
}

TEST_CASE("Pf(V(row)) = 1 for random certified rows") {
    std::mt19937 rng(2024);
    RingPtr s3 = ring_make({"x", "y", "z", "w"}, {"x^2+y^2+z^2+w^2-1"});
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> var(0, 3);
    auto rnd = [&] {
        Polynomial p = Polynomial::constant(s3->vars(), coeff(rng)) +
                       Polynomial::variable(s3->vars(), var(rng)) * Rational(coeff(rng));
        return elem(s3, p);
    };
    for (int k = 0; k < 25; ++k) {
        std::vector<RingElement> a(3), b(3);
        RingElement acc = elem(s3, Rational(0));
        for (int i = 1; i < 3; ++i) {
            a[i] = rnd();
            b[i] = rnd();
            acc = acc + a[i] * b[i];
        }
        b[0] = elem(s3, Rational(1));
        a[0] = elem(s3, Rational(1)) - acc;
        WittRep w = vaserstein_symbol(row_make(s3, a, b));
        REQUIRE(w.pf.is_one());
    }
}

TEST_CASE("orthogonal sum") {
    RingPtr r = free1();

    SECTION("psi2 + psi2") {
        SkewMatrix s = orthogonal_sum(psi2(r), psi2(r));
        REQUIRE(s.size() == 4);
        REQUIRE(pfaffian(s).is_one());
    }
    SECTION("empty block is the identity") {
        Matrix empty(r, 0, 0);
        SkewMatrix e = skew_make(empty);
        SkewMatrix m = orthogonal_sum(psi2(r), e);
        REQUIRE(m.m == psi2(r).m);
        REQUIRE(pfaffian(e).is_one());  // Pf of the 0x0 matrix is 1
    }
    SECTION("V(e1) + psi2 is 6x6 with Pfaffian -1") {
        WittRep w = vaserstein_symbol(e1_row(r));
        SkewMatrix s = orthogonal_sum(w.matrix, psi2(r));
        REQUIRE(s.size() == 6);
        REQUIRE(pfaffian(s) == elem(r, Rational(-1)));
    }
    SECTION("Pfaffian is multiplicative over blocks") {
        Matrix m(r, 2, 2);
        m.at(0, 1) = elem(r, "t+2");
        m.at(1, 0) = elem(r, "0-t-2");
        SkewMatrix a = skew_make(m);
        SkewMatrix s = orthogonal_sum(a, psi2(r));
        REQUIRE(pfaffian(s) == pfaffian(a) * pfaffian(psi2(r)));
    }
}

TEST_CASE("congruence witness checking") {
    RingPtr r = free1();
    WittRep w = vaserstein_symbol(e1_row(r));

    SECTION("identity is always a witness for M = N") {
        REQUIRE(congruence_check(w.matrix, Matrix::identity(r, 4), w.matrix));
    }
    SECTION("recomputed product, not a guessed value") {
        Matrix E = Matrix::identity(r, 4);
        E.at(3, 3) = elem(r, Rational(-1));
        Matrix P = E.transpose() * w.matrix.m * E;
        SkewMatrix N = skew_make(P);
        REQUIRE(congruence_check(w.matrix, E, N));
    }
    SECTION("perturbed target fails") {
        Matrix P = w.matrix.m;
        P.at(0, 1) = P.at(0, 1) + elem(r, "t");
        P.at(1, 0) = -P.at(0, 1);
        SkewMatrix N = skew_make(P);
        REQUIRE_FALSE(congruence_check(w.matrix, Matrix::identity(r, 4), N));
    }
}

TEST_CASE("congruence preserves alternating form and scales Pf by det") {
    std::mt19937 rng(9);
    RingPtr r = free1();
    std::uniform_int_distribution<int> coeff(-3, 3);

    for (int trial = 0; trial < 15; ++trial) {
        // random rational-entry E and alternating M of size 4
        Matrix E(r, 4, 4), M(r, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) E.at(i, j) = elem(r, Rational(coeff(rng)));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                M.at(i, j) = elem(r, Rational(coeff(rng)));
                M.at(j, i) = -M.at(i, j);
            }
        SkewMatrix sm = skew_make(M);
        Matrix P = E.transpose() * sm.m * E;
        SkewMatrix conj = skew_make(P);  // throws if not alternating
        REQUIRE(pfaffian(conj) == det(E) * pfaffian(sm));
    }
}
