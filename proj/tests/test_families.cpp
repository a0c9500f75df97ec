#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ipoly/families.hpp"

#include "test_util.hpp"

using namespace ipoly;

namespace {

GaussRat q(long num, long den = 1) { return GaussRat(num, den); }

// q(-z^2), exact
RatPoly compose_neg_z2(const RatPoly& p) {
    std::vector<GaussRat> c(2 * static_cast<std::size_t>(p.degree()) + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k)
        c[2 * k] = (k % 2) ? -p.coeff(k) : p.coeff(k);
    return RatPoly(std::move(c));
}

// closed form for the central value of the even-degree polynomial with
// parameter alpha + 1/2, as an exact rational product
GaussRat central_value_oracle(unsigned k, unsigned alpha) {
    // (-1)^{k+1} (2k+2)! / (2^{2k+2} (k+1)! prod_{j=0}^{k} (k+alpha+3/2+j))
    mpq_class prod = 1;
    for (unsigned j = 0; j <= k; ++j)
        prod *= mpq_class(2 * (k + alpha + j) + 3, 2);
    mpz_class pow4;
    mpz_ui_pow_ui(pow4.get_mpz_t(), 2, 2 * k + 2);
    mpq_class v(factorial_z(2 * k + 2), pow4 * factorial_z(k + 1));
    v.canonicalize();
    v /= prod;
    if (k % 2 == 0) v = -v;
    return GaussRat(v);
}

}  // namespace

TEST_CASE("bcd coefficients") {
    CHECK(bcd(2, 1) == RatPoly({q(3), q(3), q(1)}));
    for (unsigned n = 0; n <= 12; ++n) CHECK(bcd(n, 0) == binom_pow(n));
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned m = 0; m <= 10; ++m) {
            CHECK(bcd(n, m).is_monic());
            CHECK(bcd(n, m).degree() == static_cast<int>(n));
        }
}

TEST_CASE("bcd equals the partial-sum expansion") {
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned m = 0; m <= 10; ++m) {
            std::vector<GaussRat> sub(m);
            for (unsigned k = 0; k < m; ++k) sub[k] = GaussRat(binomial_z(n + m, k));
            RatPoly rem = binom_pow(n + m) - RatPoly(std::move(sub));
            for (unsigned k = 0; k < m; ++k) CHECK(rem.coeff(k).is_zero());
            std::vector<GaussRat> shifted(rem.coeffs().begin() + m, rem.coeffs().end());
            CHECK(RatPoly(std::move(shifted)) == bcd(n, m));
        }
}

TEST_CASE("monic Legendre via Rodrigues") {
    CHECK(legendre_monic(0) == RatPoly::constant(q(1)));
    CHECK(legendre_monic(2) == RatPoly({q(-1, 3), q(0), q(1)}));
    for (unsigned n = 1; n <= 15; n += 2) CHECK(legendre_monic(n).coeff(0).is_zero());
    // parity: only every other coefficient appears
    for (unsigned n = 0; n <= 15; ++n) {
        RatPoly p = legendre_monic(n);
        for (int k = 0; k <= p.degree(); ++k)
            if ((static_cast<unsigned>(k) % 2) != (n % 2)) CHECK(p.coeff(k).is_zero());
    }
}

TEST_CASE("ultraspherical recurrence matches Rodrigues at alpha = 0") {
    for (unsigned n = 0; n <= 30; ++n) CHECK(ultra_monic(n, 0) == legendre_monic(n));
}

TEST_CASE("ultraspherical derivative identity (recurrence validation)") {
    for (unsigned alpha = 0; alpha <= 3; ++alpha)
        for (unsigned n = 1; n <= 12; ++n)
            CHECK(ultra_monic(n, alpha).derivative() ==
                  ultra_monic(n - 1, alpha + 1) * GaussRat(static_cast<long>(n)));
}

TEST_CASE("ultraspherical basics") {
    for (unsigned alpha = 0; alpha <= 6; ++alpha) CHECK(ultra_monic(1, alpha) == RatPoly::variable());
    // parity coefficientwise
    for (unsigned alpha = 0; alpha <= 3; ++alpha)
        for (unsigned n = 0; n <= 10; ++n) {
            RatPoly p = ultra_monic(n, alpha);
            for (int k = 0; k <= p.degree(); ++k)
                if ((static_cast<unsigned>(k) % 2) != (n % 2)) CHECK(p.coeff(k).is_zero());
        }
}

TEST_CASE("central value closed form at even degree") {
    for (unsigned alpha = 0; alpha <= 3; ++alpha)
        for (unsigned k = 0; k <= 6; ++k)
            CHECK(ultra_monic(2 * k + 2, alpha)(q(0)) == central_value_oracle(k, alpha));
}

TEST_CASE("monic Chebyshev") {
    CHECK(chebyshev_monic(1) == RatPoly::variable());
    CHECK(chebyshev_monic(2) == RatPoly({q(-1, 2), q(0), q(1)}));
    CHECK(chebyshev_monic(3) == RatPoly({q(0), q(-3, 4), q(0), q(1)}));
    // 2^{1-n} cos(n theta) at z = cos(theta), and the sup bound on [-1,1]
    const mpfr_prec_t prec = 192;
    for (unsigned n : {4u, 9u, 16u}) {
        RatPoly t = chebyshev_monic(n);
        BigFloat bound(1L, prec);
        mpfr_div_2ui(bound.raw(), bound.raw(), n - 1, MPFR_RNDN);
        for (int j = 0; j <= 24; ++j) {
            BigFloat theta = BigFloat::pi(prec) * j / 24L;
            BigComplex z(cos(theta), BigFloat(prec));
            BigFloat expect = bound * cos(theta * static_cast<long>(n));
            CHECK(abs(t(z).real() - expect).to_double() < 1e-40);
            CHECK(abs(t(z)).to_double() <= bound.to_double() * (1 + 1e-12));
        }
    }
}

TEST_CASE("G_n exact values and reflection identity") {
    CHECK(gn_exact(1, q(0)) == q(2, 3));
    for (unsigned n : {0u, 3u, 7u}) CHECK(gn_exact(n, q(1)).is_zero());
    test_util::Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        unsigned n = static_cast<unsigned>(rng.range(0, 12));
        GaussRat w = (t % 3 == 0) ? rng.gauss(8, 6) : GaussRat(rng.rational(8, 6));
        CHECK(gn_exact(n, w) + gn_exact(n, -w) == gn_exact(n, q(0)) * q(2));
    }
    // closed form at 0: 2 G_n(0) (2n+1)!! = 2^{n+1} n!
    for (unsigned n = 0; n <= 30; ++n) {
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n + 1);
        CHECK(gn_exact(n, q(0)) * q(2) * GaussRat(odd_double_factorial(n)) ==
              GaussRat(mpz_class(pow2 * factorial_z(n))));
    }
}

TEST_CASE("P_{n,m} exact values") {
    test_util::Rng rng(29);
    for (int t = 0; t < 10; ++t) {
        GaussRat z = rng.gauss(10, 8);
        CHECK(pnm_exact(0, 1, z) == q(1));
    }
    for (unsigned n : {0u, 2u, 5u})
        for (unsigned m : {1u, 2u, 7u})
            CHECK(pnm_exact(n, m, q(0)) == q(1, static_cast<long>(m)));
    // (n+m)!/((m-1)! n!) P_{n,m} = Q_{n,m}
    for (unsigned n : {1u, 4u})
        for (unsigned m : {1u, 3u}) {
            GaussRat z = rng.gauss(6, 5);
            mpq_class f(factorial_z(n + m), factorial_z(m - 1) * factorial_z(n));
            f.canonicalize();
            CHECK(pnm_exact(n, m, z) * GaussRat(f) == bcd(n, m)(z));
        }
    CHECK_THROWS_AS(pnm_exact(3, 0, q(1)), std::invalid_argument);
}

TEST_CASE("change of variable ties P_{n,n} to G_{n-1}") {
    test_util::Rng rng(31);
    for (int t = 0; t < 12; ++t) {
        unsigned n = static_cast<unsigned>(rng.range(1, 8));
        mpq_class zq = rng.rational(9, 7);
        zq.canonicalize();
        if (zq == 0 || zq == -1) continue;
        GaussRat z(zq);
        GaussRat w = (q(1) - z) / (q(1) + z);
        GaussRat lhs = pnm_exact(n, n, z);
        mpz_class pow4;
        mpz_ui_pow_ui(pow4.get_mpz_t(), 2, 2 * n);
        GaussRat front = (q(1) + z).pow(2 * n) / (GaussRat(pow4) * z.pow(n));
        GaussRat inner = gn_exact(n - 1, w) +
                         (q(1) - w * w).pow(n) / q(2 * static_cast<long>(n));
        CHECK(lhs == front * inner);
    }
}

TEST_CASE("iterated integrals of monic Legendre collapse to the Q-families") {
    for (unsigned n = 0; n <= 6; ++n) {
        RatPoly even = iterated_integral(legendre_monic(2 * n), 2 * n);
        RatPoly even_rhs =
            RatPoly::monomial(2 * n, q((n % 2) ? -1 : 1)) * compose_neg_z2(bcd(n, n));
        CHECK(even == even_rhs);
        RatPoly odd = iterated_integral(legendre_monic(2 * n + 1), 2 * n + 1);
        // -(-z^2)^{n+1} Q_{n,n+1}(-z^2) = (-1)^n z^{2n+2} Q_{n,n+1}(-z^2)
        RatPoly odd_rhs = RatPoly::monomial(2 * (n + 1), q((n % 2) ? -1 : 1)) *
                          compose_neg_z2(bcd(n, n + 1));
        CHECK(odd == odd_rhs);
    }
}

TEST_CASE("family spec generation") {
    FamilySpec fs;
    fs.kind = FamilySpec::Kind::UltraMonic;
    fs.n = 5;
    fs.alpha = 2;
    CHECK(fs.generate() == ultra_monic(5, 2));
    CHECK(fs.name() == "ultra");
}
