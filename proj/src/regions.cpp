#include "ipoly/regions.hpp"

namespace ipoly {

std::string region_name(Region r) {
    switch (r) {
        case Region::E1: return "E1";
        case Region::E2: return "E2";
        case Region::F1: return "F1";
        case Region::F2: return "F2";
        case Region::InsideLevel: return "inside";
        case Region::OutsideLevel: return "outside";
    }
    return "?";
}

BigFloat boundary_tol(mpfr_prec_t prec) {
    BigFloat t(1L, prec);
    mpfr_div_2ui(t.raw(), t.raw(), static_cast<unsigned long>(prec / 2), MPFR_RNDN);
    return t;
}

BigComplex phi(const BigComplex& z) {
    if (z.is_zero()) throw PoleError("phi: pole at z = 0");
    BigComplex zp1 = z + BigComplex(BigFloat(1L, z.prec()), BigFloat(z.prec()));
    return (zp1 * zp1) / (z * BigFloat(4L, z.prec()));
}

namespace {

RegionLabel classify_quotient(const BigFloat& q, const BigFloat& az, Region outer, Region inner,
                              const BigFloat& tol) {
    // q = |map(z)|, az = |z|; outer region iff q > 1 and az > 1.
    BigFloat one(1L, q.prec());
    BigFloat dist = abs(q - one);
    bool on = dist <= tol;
    Region reg;
    if (q > one && az > one)
        reg = outer;
    else
        reg = inner;
    if (q > one && !on && abs(az - BigFloat(1L, az.prec())) <= tol) on = true;
    return {reg, dist, on};
}

}  // namespace

RegionLabel classify_E(const BigComplex& z, const BigFloat& tol) {
    if (z.is_zero())  // pole of phi; |phi| -> infinity with |z| < 1
        return {Region::E2, BigFloat::pos_inf(z.prec()), false};
    return classify_quotient(abs(phi(z)), abs(z), Region::E1, Region::E2, tol);
}

RegionLabel classify_E(const BigComplex& z) { return classify_E(z, boundary_tol(z.prec())); }

RegionLabel classify_F(const BigComplex& z, const BigFloat& tol) {
    if (z.is_zero()) return {Region::F2, BigFloat::pos_inf(z.prec()), false};
    mpfr_prec_t p = z.prec();
    BigComplex one(BigFloat(1L, p), BigFloat(p));
    BigFloat q = abs((z * z - one) / (z * BigFloat(2L, p)));
    return classify_quotient(q, abs(z), Region::F1, Region::F2, tol);
}

RegionLabel classify_F(const BigComplex& z) { return classify_F(z, boundary_tol(z.prec())); }

RegionLabel classify_level_interval(const BigComplex& z, const BigComplex& lambda,
                                    const BigFloat& tol) {
    BigFloat tz = abs(tau_interval(z));
    BigFloat tl = abs(tau_interval(lambda));
    BigFloat dist = abs(tz - tl);
    Region reg = tz < tl ? Region::InsideLevel : Region::OutsideLevel;
    return {reg, dist, dist <= tol};
}

CurveSamples gamma_samples(unsigned N, mpfr_prec_t prec) {
    if (N < 2) throw std::invalid_argument("gamma_samples: N must be >= 2");
    mpfr_prec_t wp = prec + 32;  // guard bits; results rounded back to prec
    CurveSamples cs;
    cs.name = "gamma";
    cs.points.reserve(N);
    cs.parameter.reserve(N);
    BigFloat two_pi = BigFloat::pi(wp) * 2L;
    for (unsigned j = 0; j < N; ++j) {
        BigFloat theta = two_pi * static_cast<long>(j) / static_cast<long>(N);
        // z^2 + (2 - 4 e^{i theta}) z + 1 = 0; the two roots multiply to 1.
        BigComplex b = BigComplex(BigFloat(2L, wp), BigFloat(wp)) -
                       BigComplex::from_polar(BigFloat(4L, wp), theta);
        BigComplex s = sqrt(b * b - BigComplex(BigFloat(4L, wp), BigFloat(wp)));
        BigComplex r1 = (-b + s) / BigFloat(2L, wp);
        BigComplex r2 = (-b - s) / BigFloat(2L, wp);
        BigComplex z = abs(r1) >= abs(r2) ? r1 : r2;
        cs.points.push_back(z.round_to(prec));
        cs.parameter.push_back(theta.round_to(prec));
    }
    return cs;
}

bool cardioid_contains(const BigComplex& z, const BigComplex& lambda, const BigFloat& r) {
    if (!(r > 0.0)) throw std::invalid_argument("cardioid_contains: r must be positive");
    mpfr_prec_t p = z.prec() < lambda.prec() ? z.prec() : lambda.prec();
    BigFloat slack = BigFloat(1L, p) + BigFloat(1e-12, p);
    if (lambda.is_zero())  // F_r(w) = 2 r w
        return abs(z) <= r * 2L * slack;
    // -conj(lambda) w^2 + 2 r w - z = 0; discriminant b^2 - 4 a (-z)
    BigComplex a = -conj(lambda);
    BigComplex b(r * 2L, BigFloat(p));
    BigComplex s = sqrt(b * b + a * z * BigFloat(4L, p));
    BigComplex w1 = (-b + s) / (a * BigFloat(2L, p));
    BigComplex w2 = (-b - s) / (a * BigFloat(2L, p));
    return min(abs(w1), abs(w2)) <= slack;
}

CurveSamples cardioid_boundary(const BigComplex& lambda, const BigFloat& r, unsigned N) {
    if (N < 3) throw std::invalid_argument("cardioid_boundary: N must be >= 3");
    if (!(r > 0.0)) throw std::invalid_argument("cardioid_boundary: r must be positive");
    mpfr_prec_t p = lambda.prec() < r.prec() ? lambda.prec() : r.prec();
    CurveSamples cs;
    cs.name = "cardioid";
    BigFloat two_pi = BigFloat::pi(p) * 2L;
    BigComplex lbar = conj(lambda);
    for (unsigned j = 0; j < N; ++j) {
        BigFloat theta = two_pi * static_cast<long>(j) / static_cast<long>(N);
        BigComplex w = BigComplex::from_polar(BigFloat(1L, p), theta);
        cs.points.push_back(w * (r * 2L) - lbar * (w * w));
        cs.parameter.push_back(theta);
    }
    return cs;
}

BigFloat disc_bound(unsigned m, const BigComplex& lambda, const BigFloat& r) {
    if (m < 1) throw std::invalid_argument("disc_bound: m must be >= 1");
    if (!(r > 0.0)) throw std::invalid_argument("disc_bound: r must be positive");
    BigFloat al = abs(lambda);
    BigFloat p2(1L, r.prec());
    mpfr_mul_2ui(p2.raw(), p2.raw(), m, MPFR_RNDN);
    return p2 * (al + r) - al;
}

namespace {

/// sqrt(z^2 - 1) on the branch with |z + s| > 1; throws on the cut.
BigComplex sqrt_branch_interval(const BigComplex& z) {
    mpfr_prec_t p = z.prec();
    BigFloat tol = boundary_tol(p);
    if (abs(z.imag()) <= tol && abs(z.real()) <= BigFloat(1L, p) + tol)
        throw OnArcError("tau: z on the arc [-1,1]");
    BigComplex one(BigFloat(1L, p), BigFloat(p));
    BigComplex s = sqrt(z * z - one);
    if (abs(z + s) < BigFloat(1L, p)) s = -s;
    return s;
}

}  // namespace

BigComplex tau_interval(const BigComplex& z) {
    BigComplex s = sqrt_branch_interval(z);
    return z + s;
}

BigComplex psi_interval(const BigComplex& z) { return inverse(sqrt_branch_interval(z)); }

CurveSamples level_curve_interval(const BigComplex& lambda, unsigned N) {
    if (N < 3) throw std::invalid_argument("level_curve_interval: N must be >= 3");
    mpfr_prec_t p = lambda.prec();
    mpfr_prec_t wp = p + 32;
    BigFloat R = abs(tau_interval(lambda.round_to(wp)));
    CurveSamples cs;
    cs.name = "level";
    BigFloat two_pi = BigFloat::pi(wp) * 2L;
    BigComplex half(BigFloat(mpq_class(1, 2), wp), BigFloat(wp));
    for (unsigned j = 0; j < N; ++j) {
        BigFloat theta = two_pi * static_cast<long>(j) / static_cast<long>(N);
        BigComplex u = BigComplex::from_polar(R, theta);
        cs.points.push_back(((u + inverse(u)) * half).round_to(p));
        cs.parameter.push_back(theta.round_to(p));
    }
    return cs;
}

}  // namespace ipoly
