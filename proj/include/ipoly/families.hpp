#pragma once

/**
 * @file families.hpp
 * @brief Exact generators for the polynomial families used throughout:
 *        Q_{n,m} (coefficients binom(n+m, k+m)), binomial powers (1+z)^n,
 *        monic Legendre / ultraspherical / Chebyshev polynomials, and the
 *        auxiliary scalars G_n(w), P_{n,m}(z).
 */

#include "ipoly/ratpoly.hpp"

#include <string>

namespace ipoly {

/// Monic degree-n polynomial with coefficient of z^k equal to binom(n+m, k+m).
RatPoly bcd(unsigned n, unsigned m);

/// (1+z)^n
RatPoly binom_pow(unsigned n);

/// Monic Legendre polynomial via the Rodrigues formula
/// (-1)^n (n!/(2n)!) d^n/dz^n (1-z^2)^n, exact.
RatPoly legendre_monic(unsigned n);

/// Monic ultraspherical polynomial with parameter alpha + 1/2 (alpha a
/// nonnegative integer) via the three-term recurrence
///   P_{k+1} = z P_k - c_k P_{k-1},
///   c_k = k(k+2a) / ((2k+2a+1)(2k+2a-1)).
/// alpha = 0 agrees with legendre_monic exactly.
RatPoly ultra_monic(unsigned n, unsigned alpha);

/// Monic Chebyshev polynomial 2^{1-n} T_n via recurrence.
RatPoly chebyshev_monic(unsigned n);

/// G_n(w) = integral of (1-x^2)^n from w to 1, exact via termwise
/// integration. Works for Gaussian-rational w.
GaussRat gn_exact(unsigned n, const GaussRat& w);

/// P_{n,m}(z) = integral of (1-t)^{m-1} (1+zt)^n over [0,1], m >= 1,
/// computed exactly as bcd(n,m)(z) / (m * binom(n+m, n)).
GaussRat pnm_exact(unsigned n, unsigned m, const GaussRat& z);

/// CLI-facing family descriptor.
struct FamilySpec {
    enum class Kind { BCD, BinomPow, LegendreMonic, UltraMonic, ChebyshevMonic };
    Kind kind = Kind::BCD;
    unsigned n = 0;
    unsigned m = 0;      // BCD only
    unsigned alpha = 0;  // UltraMonic only

    RatPoly generate() const;
    std::string name() const;
};

}  // namespace ipoly
