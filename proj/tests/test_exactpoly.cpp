#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ipoly/families.hpp"
#include "ipoly/ratpoly.hpp"

#include "test_util.hpp"

using namespace ipoly;

namespace {
GaussRat q(long num, long den = 1) { return GaussRat(num, den); }
}

TEST_CASE("GaussRat arithmetic is exact and closed") {
    GaussRat a(mpq_class(3, 4), mpq_class(-1, 6));
    GaussRat b(mpq_class(-2, 5), mpq_class(7, 3));
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * conj(a) == GaussRat(norm2(a)));
    CHECK_THROWS_AS(a / GaussRat(0), std::domain_error);
    CHECK(GaussRat::i() * GaussRat::i() == q(-1));
    CHECK(GaussRat(mpq_class(2, 4)) == GaussRat(mpq_class(1, 2)));  // canonicalized
}

TEST_CASE("GaussRat string round trip") {
    test_util::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        GaussRat g = rng.gauss();
        CHECK(GaussRat::parse(g.str()) == g);
    }
    CHECK(GaussRat::parse("-1/3") == GaussRat(mpq_class(-1, 3)));
    CHECK(GaussRat::parse("0+1/2i") == GaussRat(mpq_class(0), mpq_class(1, 2)));
    CHECK(GaussRat::parse("1/2-3/4i") == GaussRat(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK_THROWS_AS(GaussRat::parse("1/0"), std::invalid_argument);
}

TEST_CASE("evaluation") {
    CHECK(binom_pow(3)(q(1)) == q(8));
    RatPoly zsq_m1({q(-1), q(0), q(1)});
    CHECK(zsq_m1(GaussRat::i()) == q(-2));

    // constant term of Q_{5,5} by direct sum oracle: binom(10,5)
    mpz_class oracle = 0;
    for (unsigned k = 5; k <= 5; ++k) oracle += binomial_z(10, 5);
    CHECK(bcd(5, 5)(q(0)) == GaussRat(oracle));
    CHECK(oracle == 252);

    // float path agrees with exact path
    BigComplex z(0.5, -0.25, 256);
    BigComplex viaf = bcd(5, 5)(z);
    GaussRat exact = bcd(5, 5)(GaussRat(mpq_class(1, 2), mpq_class(-1, 4)));
    CHECK(abs(viaf - exact.to_complex(256)).to_double() < 1e-60);
}

TEST_CASE("derivative") {
    CHECK(RatPoly::monomial(3).derivative() == RatPoly::monomial(2, q(3)));
    CHECK(RatPoly::constant(q(5)).derivative().is_zero());
    RatPoly i20 = iterated_integral(RatPoly::variable(), 2);  // z -> z^3
    CHECK(i20 == RatPoly::monomial(3));
    CHECK(i20.derivative(2) == RatPoly::monomial(1, q(6)));
}

TEST_CASE("iterated_integral basics") {
    CHECK(iterated_integral(RatPoly::constant(q(1)), 1) == RatPoly::variable());
    RatPoly p = binom_pow(4);
    CHECK(iterated_integral(p, 0) == p);
    CHECK_THROWS_AS(iterated_integral(RatPoly({q(1), q(2)}), 1), std::invalid_argument);
    // the general variant accepts non-monic input, same normalization
    RatPoly nm({q(1), q(2)});
    RatPoly gen = iterated_integral_general(nm, 2);
    CHECK(gen.derivative(2) == nm * q(6));  // (1+2)!/1! = 6
}

TEST_CASE("monicity, derivative and vanishing contracts") {
    test_util::Rng rng(11);
    const std::vector<GaussRat> lambdas = {q(0), q(1), GaussRat(mpq_class(0), mpq_class(1, 2)),
                                           rng.gauss(4, 4)};
    for (int t = 0; t < 12; ++t) {
        unsigned n = static_cast<unsigned>(rng.range(0, 7));
        unsigned m = static_cast<unsigned>(rng.range(0, 6));
        RatPoly p = rng.poly(n, true, t % 2 == 0);
        for (const auto& lam : lambdas) {
            RatPoly I = iterated_integral(p, m, lam);
            CHECK(I.is_monic());
            CHECK(I.degree() == static_cast<int>(n + m));
            CHECK(I.derivative(m) == p * GaussRat(mpq_class(rising_product(n, m))));
            RatPoly d = I;
            for (unsigned j = 0; j < m; ++j) {
                CHECK(d(lam).is_zero());
                d = d.derivative();
            }
        }
    }
}

TEST_CASE("m-fold integral of (1+z)^n against the binomial family") {
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; m <= 8; ++m)
            CHECK(iterated_integral(binom_pow(n), m) == RatPoly::monomial(m) * bcd(n, m));
}

TEST_CASE("semigroup of antiderivatives") {
    test_util::Rng rng(3);
    const std::vector<GaussRat> lambdas = {q(0), q(1), GaussRat(mpq_class(0), mpq_class(1, 2))};
    for (int t = 0; t < 8; ++t) {
        RatPoly p = rng.poly(static_cast<unsigned>(rng.range(0, 6)), false, true);
        for (const auto& lam : lambdas) {
            unsigned j = static_cast<unsigned>(rng.range(0, 4));
            unsigned k = static_cast<unsigned>(rng.range(0, 4));
            CHECK(iterated_antiderivative(iterated_antiderivative(p, k, lam), j, lam) ==
                  iterated_antiderivative(p, j + k, lam));
        }
    }
}

TEST_CASE("binomial coordinates") {
    for (unsigned n : {1u, 4u, 9u}) {
        auto a = binomial_coords(binom_pow(n));
        for (const auto& ak : a) CHECK(ak == q(1));
        auto e = binomial_coords(RatPoly::monomial(n));
        for (unsigned k = 0; k < n; ++k) CHECK(e[k].is_zero());
        CHECK(e[n] == q(1));
    }
    // Q_{n,m} coordinates: binom(n+m, k+m) / binom(n, k), exact division oracle
    for (unsigned n : {3u, 6u}) {
        for (unsigned m : {1u, 4u}) {
            auto a = binomial_coords(bcd(n, m));
            for (unsigned k = 0; k <= n; ++k) {
                mpq_class expect(binomial_z(n + m, k + m), binomial_z(n, k));
                expect.canonicalize();
                CHECK(a[k] == GaussRat(expect));
            }
        }
    }
    // inverse property
    test_util::Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        RatPoly p = rng.poly(static_cast<unsigned>(rng.range(0, 9)), false, true);
        CHECK(from_binomial_coords(binomial_coords(p)) == p);
    }
}

TEST_CASE("coefficientwise transform of the m-fold integral") {
    // z^{-m} I_{m,0}(p) has binomial coordinates a_k * b_k, b from Q_{n,m}
    test_util::Rng rng(13);
    for (int t = 0; t < 10; ++t) {
        unsigned n = static_cast<unsigned>(rng.range(1, 8));
        unsigned m = static_cast<unsigned>(rng.range(1, 6));
        RatPoly p = rng.poly(n, true);
        RatPoly I = iterated_integral_general(p, m);
        std::vector<GaussRat> shifted(I.coeffs().begin() + m, I.coeffs().end());
        auto c = binomial_coords(RatPoly(std::move(shifted)));
        auto a = binomial_coords(p);
        auto b = binomial_coords(bcd(n, m));
        REQUIRE(c.size() == a.size());
        for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] == a[k] * b[k]);
    }
}

TEST_CASE("taylor_polynomial") {
    test_util::Rng rng(17);
    RatPoly p = rng.poly(7, false, true);
    CHECK(taylor_polynomial(p, q(2), 7) == p);
    CHECK(taylor_polynomial(p, q(2), 12) == p);

    RatPoly zsq = RatPoly::monomial(2);
    CHECK(taylor_polynomial(zsq, q(1), 1) == RatPoly({q(-1), q(2)}));  // 2z - 1

    // derivatives 0..1 of a 2-fold integral vanish at the base point
    RatPoly monic = rng.poly(5, true);
    RatPoly I = iterated_integral(monic, 2);
    CHECK(taylor_polynomial(I, q(0), 1).is_zero());
    // and about a different point it reproduces the shift structure
    RatPoly t1 = taylor_polynomial(p, rng.gauss(6, 5), 3);
    CHECK(t1.degree() <= 3);
}

TEST_CASE("floating path for non-rational base points") {
    test_util::Rng rng(19);
    RatPoly p = rng.poly(6, true);
    // agrees with the exact route at a Gaussian-rational base point
    GaussRat lam(mpq_class(2, 3), mpq_class(-1, 5));
    BigComplex lamc = lam.to_complex(256);
    BigComplex z(1.25, 0.5, 256);
    BigComplex exact = iterated_integral(p, 3, lam)(z);
    BigComplex fl = iterated_integral_value(p, 3, lamc, z);
    CHECK(abs(fl - exact).to_double() < 1e-60);
    // an irrational base point: the integral still vanishes there
    BigComplex sqrt2(sqrt(BigFloat(2L, 256)), BigFloat(256));
    CHECK(abs(iterated_integral_value(p, 3, sqrt2, sqrt2)).to_double() < 1e-60);
}

TEST_CASE("BigFloat and BigComplex carry explicit precision") {
    BigFloat a(1.0, 256), b(3.0, 128);
    CHECK((a / b).prec() == 128);  // min rule
    CHECK(BigFloat(2.0, 16).prec() == 64);  // clamped to the floor
    BigComplex i(0.0, 1.0, 192);
    CHECK((i * i).prec() == 192);
    CHECK(abs(sqrt(i) * sqrt(i) - i).to_double() < 1e-50);
    BigComplex neg(-4.0, 0.0, 128);
    BigComplex s = sqrt(neg);
    CHECK(s.real().to_double() == doctest::Approx(0.0));
    CHECK(s.imag().to_double() == doctest::Approx(2.0));
    CHECK(BigFloat::from_string(a.str(), 256) == a);  // decimal round trip
}
