#pragma once

/**
 * @file regions.hpp
 * @brief Geometry of the curves and regions tied to the zero sets: the
 *        rational map phi(z) = (z+1)^2/(4z) and its unit level curve
 *        Gamma, the E/F region classification, cardioid and disc zero
 *        bounds, and the exterior map tau of the complement of [-1,1].
 */

#include "ipoly/bigcomplex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ipoly {

enum class Region { E1, E2, F1, F2, InsideLevel, OutsideLevel };

std::string region_name(Region r);

struct RegionLabel {
    Region region;
    BigFloat boundary_dist;  // distance proxy, e.g. ||phi(z)| - 1|
    bool on_boundary;
};

/// Ordered point list sampling a named curve.
struct CurveSamples {
    std::string name;
    std::vector<BigComplex> points;
    std::vector<BigFloat> parameter;  // theta values, |points| == |parameter|
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};
struct OnArcError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Default boundary tolerance band at a working precision.
BigFloat boundary_tol(mpfr_prec_t prec);

/// phi(z) = (z+1)^2 / (4z); pole at z = 0.
BigComplex phi(const BigComplex& z);

/// E1 iff |phi(z)| > 1 and |z| > 1; everything else (including the pole
/// z = 0 by limit convention) is E2. on_boundary within tol of the curve.
RegionLabel classify_E(const BigComplex& z, const BigFloat& tol);
RegionLabel classify_E(const BigComplex& z);

/// F1 iff |(z^2-1)/(2z)| > 1 and |z| > 1; else F2. Equals classify_E at
/// -z^2 with the labels mapped F1 <-> E1.
RegionLabel classify_F(const BigComplex& z, const BigFloat& tol);
RegionLabel classify_F(const BigComplex& z);

/// InsideLevel iff |tau(z)| < |tau(lambda)|; boundary_dist is
/// ||tau(z)| - |tau(lambda)||.
RegionLabel classify_level_interval(const BigComplex& z, const BigComplex& lambda,
                                    const BigFloat& tol);

/// N samples of Gamma = { |phi(z)| = 1, |z| >= 1 }: for theta_j = 2 pi j/N
/// solve z^2 + (2 - 4 e^{i theta}) z + 1 = 0 and keep the root with
/// |z| >= 1.
CurveSamples gamma_samples(unsigned N, mpfr_prec_t prec);

/// True iff z = F_r(w) = 2 r w - conj(lambda) w^2 for some |w| <= 1
/// (small slack absorbs rounding in the quadratic solve).
bool cardioid_contains(const BigComplex& z, const BigComplex& lambda, const BigFloat& r);

/// Image of the unit circle under F_r.
CurveSamples cardioid_boundary(const BigComplex& lambda, const BigFloat& r, unsigned N);

/// rho = 2^m (|lambda| + r) - |lambda|.
BigFloat disc_bound(unsigned m, const BigComplex& lambda, const BigFloat& r);

/// tau(z) = z + sqrt(z^2 - 1), branch with |tau| > 1; maps the complement
/// of [-1,1] onto the exterior of the unit disc, tau(z)/z -> 2.
BigComplex tau_interval(const BigComplex& z);

/// psi = tau'/tau = 1/sqrt(z^2 - 1) with the branch matching tau.
BigComplex psi_interval(const BigComplex& z);

/// Level curve { |tau(z)| = |tau(lambda)| } parametrized as the Joukowski
/// image of the circle of radius |tau(lambda)|.
CurveSamples level_curve_interval(const BigComplex& lambda, unsigned N);

}  // namespace ipoly
