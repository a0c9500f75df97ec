#pragma once

/**
 * @file asympt.hpp
 * @brief Asymptotic model values, empirical convergence measurements, and
 *        potential-theoretic statistics (n-th roots, log-potentials,
 *        angular equidistribution, ratio limits on [-1,1]).
 */

#include "ipoly/bigcomplex.hpp"
#include "ipoly/ratpoly.hpp"
#include "ipoly/regions.hpp"
#include "ipoly/rootfind.hpp"

#include <vector>

namespace ipoly {

/// Which closed-form limit a value is compared against.
struct AsymptoticModel {
    enum class Family { Qnn, Qnn1, UltraEven, UltraOdd, FixedM };
    Family family = Family::Qnn;
    unsigned alpha = 0;  // UltraEven / UltraOdd
    unsigned m = 1;      // FixedM
};

/// The exact polynomial the model approximates at index n:
/// Qnn -> bcd(n,n); Qnn1 -> bcd(n,n+1); UltraEven -> the 2n-fold integral
/// of ultra_monic(2n, alpha); UltraOdd -> the (2n+1)-fold integral of
/// ultra_monic(2n+1, alpha); FixedM -> bcd(n, m).
RatPoly model_actual(const AsymptoticModel& model, unsigned n);

/// Closed-form limit value at z; throws PoleError on the model's excluded
/// points and std::domain_error when z sits on a region boundary.
BigComplex model_value(const AsymptoticModel& model, unsigned n, const BigComplex& z);

/// |actual(n, z) / model_value(n, z) - 1|
BigFloat ratio_error(const AsymptoticModel& model, unsigned n, const BigComplex& z);

/// |p(z)|^{1/deg p} via exp(log|p(z)| / deg); throws if p(z) = 0.
BigFloat nth_root(const RatPoly& p, const BigComplex& z);

/// Uniform probability measure on a finite point set.
struct EmpiricalMeasure {
    std::vector<BigComplex> points;
};
EmpiricalMeasure counting_measure(const RootSet& rs);

/// U(mu, z) = (1/N) sum log|z - x_i|; throws if z hits a support point.
BigFloat log_potential(const EmpiricalMeasure& mu, const BigComplex& z);

/// Sup over `bins` equal angular bins of |fraction of roots with
/// arg phi(z_i) in the bin - 1/bins|.
double equidist_discrepancy(const RootSet& rs, unsigned bins);

/// phi_n(z) / I_{m,lambda}(phi_n)(z) with phi_n the monic Chebyshev
/// polynomial and lambda real rational in [-1,1] (default 0). The limit is
/// psi_interval(z)^m.
BigComplex integral_ratio_on_arc(unsigned n, unsigned m, const BigComplex& z,
                            const GaussRat& lambda = GaussRat(0));

/// For lambda off [-1,1]: n^{m-1} phi_n(z)/I_{m,lambda}(phi_n)(z) when z is
/// strictly inside the level region of lambda, phi_n(z)/I_{m,lambda}(phi_n)(z)
/// when strictly outside. Throws when z is within tol of the level curve.
BigComplex integral_ratio_off_arc(unsigned n, unsigned m, const GaussRat& lambda, const BigComplex& z);

/// | Chebyshev-Gauss quadrature of the arcsine-measure Cauchy transform
/// at z  -  psi_interval(z) |.
BigFloat markov_check(const BigComplex& z, unsigned nodes);

/// |integral of the monic Chebyshev polynomial from z1 to z2|^{1/n},
/// evaluated through the exact antiderivative (path independent).
BigFloat path_integral_nthroot(unsigned n, const BigComplex& z1, const BigComplex& z2);

/// Fixed, documented test grids for convergence sweeps (all points are
/// safely off the boundary curve).
std::vector<BigComplex> convergence_grid_E1(mpfr_prec_t prec);
std::vector<BigComplex> convergence_grid_E2(mpfr_prec_t prec);

}  // namespace ipoly
