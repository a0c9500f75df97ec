#pragma once

/**
 * @file rootfind.hpp
 * @brief Simultaneous (Ehrlich-Aberth) root finding for exact polynomials
 *        at arbitrary precision, with residual certificates.
 *
 * Deterministic: identical (polynomial, prec, tol, seed) input yields
 * bitwise-identical output. Updates are Jacobi-style (every correction in
 * a sweep is computed from the previous sweep's values).
 */

#include "ipoly/bigfloat.hpp"
#include "ipoly/bigcomplex.hpp"
#include "ipoly/ratpoly.hpp"

#include <cstdint>
#include <vector>

namespace ipoly {

struct RootSet {
    std::vector<BigComplex> roots;    // sorted by (re, im), |roots| == degree
    std::vector<BigFloat> residuals;  // |p(z_i)| / sum_k |a_k| |z_i|^k
    unsigned degree = 0;
    bool converged = false;
    unsigned iterations = 0;
};

struct RootOptions {
    mpfr_prec_t prec = 0;  // 0: max(128, 4 * degree)
    double tol = 1e-30;    // relative residual target
    unsigned max_iter = 400;
    std::uint64_t seed = 0;
};

/// All complex roots of p (degree >= 1). Exact zero roots are deflated
/// up front and reported exactly; the rest start from perturbed circles
/// whose radii come from the Newton polygon of the coefficient moduli.
/// converged is true iff every relative residual (certified against the
/// exact coefficients at twice the working precision) is <= tol.
RootSet roots(const RatPoly& p, const RootOptions& opt = {});

/// Removes roots with |z| <= tol (e.g. the deliberate multiplicity-m zero
/// of an m-fold integral based at 0).
RootSet strip_origin(const RootSet& rs, double tol);

/// Relative residual of z against the exact coefficients, evaluated at
/// twice the given precision: |p(z)| / sum_k |a_k| |z|^k.
BigFloat exact_residual(const RatPoly& p, const BigComplex& z, mpfr_prec_t prec);

}  // namespace ipoly
