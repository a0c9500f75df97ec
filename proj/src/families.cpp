#include "ipoly/families.hpp"

#include <stdexcept>
#include <utility>

namespace ipoly {

RatPoly bcd(unsigned n, unsigned m) {
    std::vector<GaussRat> c(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        c[k] = GaussRat(binomial_z(n + m, k + m));
    return RatPoly(std::move(c));
}

RatPoly binom_pow(unsigned n) {
    std::vector<GaussRat> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[k] = GaussRat(binomial_z(n, k));
    return RatPoly(std::move(c));
}

RatPoly legendre_monic(unsigned n) {
    // (1-z^2)^n, differentiated n times, scaled by (-1)^n n!/(2n)!.
    std::vector<GaussRat> c(2 * n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        mpz_class b = binomial_z(n, k);
        c[2 * k] = GaussRat((k % 2) ? -b : b);
    }
    RatPoly p = RatPoly(std::move(c)).derivative(n);
    mpq_class scale(factorial_z(n), factorial_z(2 * n));
    scale.canonicalize();
    if (n % 2) scale = -scale;
    return p * GaussRat(scale);
}

RatPoly ultra_monic(unsigned n, unsigned alpha) {
    RatPoly prev = RatPoly::constant(GaussRat(1));
    if (n == 0) return prev;
    RatPoly cur = RatPoly::variable();
    long a = static_cast<long>(alpha);
    for (unsigned k = 1; k < n; ++k) {
        long kl = static_cast<long>(k);
        mpq_class ck(kl * (kl + 2 * a), (2 * kl + 2 * a + 1) * (2 * kl + 2 * a - 1));
        ck.canonicalize();
        RatPoly next = RatPoly::variable() * cur - prev * GaussRat(ck);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RatPoly chebyshev_monic(unsigned n) {
    RatPoly prev = RatPoly::constant(GaussRat(1));
    if (n == 0) return prev;
    RatPoly cur = RatPoly::variable();
    for (unsigned k = 1; k < n; ++k) {
        GaussRat ck = (k == 1) ? GaussRat(1, 2) : GaussRat(1, 4);
        RatPoly next = RatPoly::variable() * cur - prev * ck;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

GaussRat gn_exact(unsigned n, const GaussRat& w) {
    // sum_k binom(n,k) (-1)^k (1 - w^{2k+1}) / (2k+1)
    GaussRat acc;
    GaussRat w2 = w * w;
    GaussRat wpow = w;  // w^{2k+1}
    for (unsigned k = 0; k <= n; ++k) {
        mpz_class b = binomial_z(n, k);
        GaussRat term = (GaussRat(1) - wpow) * GaussRat(mpq_class(std::move(b), mpz_class(2 * k + 1)));
        acc += (k % 2) ? -term : term;
        wpow *= w2;
    }
    return acc;
}

GaussRat pnm_exact(unsigned n, unsigned m, const GaussRat& z) {
    if (m == 0) throw std::invalid_argument("pnm_exact: m must be >= 1");
    mpq_class scale(1, m * binomial_z(n + m, n));
    scale.canonicalize();
    return bcd(n, m)(z) * GaussRat(scale);
}

RatPoly FamilySpec::generate() const {
    switch (kind) {
        case Kind::BCD: return bcd(n, m);
        case Kind::BinomPow: return binom_pow(n);
        case Kind::LegendreMonic: return legendre_monic(n);
        case Kind::UltraMonic: return ultra_monic(n, alpha);
        case Kind::ChebyshevMonic: return chebyshev_monic(n);
    }
    throw std::logic_error("FamilySpec: bad kind");
}

std::string FamilySpec::name() const {
    switch (kind) {
        case Kind::BCD: return "bcd";
        case Kind::BinomPow: return "binom";
        case Kind::LegendreMonic: return "legendre";
        case Kind::UltraMonic: return "ultra";
        case Kind::ChebyshevMonic: return "chebyshev";
    }
    throw std::logic_error("FamilySpec: bad kind");
}

}  // namespace ipoly
