#pragma once

/**
 * @file ratpoly.hpp
 * @brief Dense polynomials with exact Gaussian-rational coefficients, the
 *        m-fold integral operator, and evaluation at arbitrary-precision
 *        complex points.
 *
 * Coefficients are stored low degree first and kept normalized: the
 * highest-index coefficient is nonzero unless the polynomial is
 * identically zero (empty vector, degree() == -1).
 */

#include "ipoly/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace ipoly {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    RatPoly(std::initializer_list<GaussRat> coeffs) : c_(coeffs) { normalize(); }

    static RatPoly constant(GaussRat a) { return RatPoly({std::move(a)}); }
    static RatPoly variable() { return RatPoly({GaussRat(0), GaussRat(1)}); }
    /// a * z^k
    static RatPoly monomial(std::size_t k, GaussRat a = GaussRat(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const std::vector<GaussRat>& coeffs() const { return c_; }
    /// Coefficient of z^k (zero beyond the degree).
    const GaussRat& coeff(std::size_t k) const;
    const GaussRat& leading() const;

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const GaussRat& s);
    friend RatPoly operator*(const GaussRat& s, const RatPoly& a) { return a * s; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    /// Exact evaluation.
    GaussRat operator()(const GaussRat& z) const;
    /// Horner evaluation at z.prec(); exact coefficients are rounded only
    /// at use.
    BigComplex operator()(const BigComplex& z) const;

    /// Exact j-th derivative.
    RatPoly derivative(unsigned j = 1) const;
    /// Single exact antiderivative normalized to vanish at lambda.
    RatPoly antiderivative(const GaussRat& lambda) const;
    /// p(z) with z -> z + lambda (exact Taylor shift).
    RatPoly shifted(const GaussRat& lambda) const;

    friend std::ostream& operator<<(std::ostream& os, const RatPoly& p);

private:
    void normalize();
    std::vector<GaussRat> c_;
};

/// m-fold antiderivative vanishing to order m at lambda, without the
/// factorial normalization.
RatPoly iterated_antiderivative(const RatPoly& p, unsigned m, const GaussRat& lambda = GaussRat(0));

/// The m-fold integral of a monic polynomial: antidifferentiate m times
/// with each constant chosen so the result vanishes at lambda, then scale
/// by (n+m)!/n!. Monic of degree n+m; derivatives of order 0..m-1 vanish
/// at lambda; the m-th derivative is (n+m)!/n! times the input. Rejects
/// non-monic input.
RatPoly iterated_integral(const RatPoly& p, unsigned m, const GaussRat& lambda = GaussRat(0));

/// Same normalization for arbitrary nonzero p; no monicity claim.
RatPoly iterated_integral_general(const RatPoly& p, unsigned m, const GaussRat& lambda = GaussRat(0));

/// Value of the m-fold integral at z for an arbitrary complex base point.
/// The antiderivative chain runs in floating coefficients at the working
/// precision, so the contracts hold only approximately; base points that
/// are Gaussian rationals should use iterated_integral instead.
BigComplex iterated_integral_value(const RatPoly& p, unsigned m, const BigComplex& lambda,
                                   const BigComplex& z);

/// Coordinates (a_k) with p = sum binom(n,k) a_k z^k, n = deg p.
std::vector<GaussRat> binomial_coords(const RatPoly& p);
RatPoly from_binomial_coords(const std::vector<GaussRat>& a);

/// Degree-<=d truncation of the Taylor expansion of p about lambda,
/// expanded back to the monomial basis. Exact.
RatPoly taylor_polynomial(const RatPoly& p, const GaussRat& lambda, unsigned d);

}  // namespace ipoly
