#include "ipoly/asympt.hpp"

#include "ipoly/families.hpp"

#include <cmath>
#include <stdexcept>

namespace ipoly {

namespace {

BigComplex cplx(long re, long im, mpfr_prec_t p) { return {BigFloat(re, p), BigFloat(im, p)}; }

BigFloat sqrt_pi_n(unsigned n, mpfr_prec_t p) {
    return sqrt(BigFloat::pi(p) * static_cast<long>(n));
}

void require_region(const RegionLabel& lab, Region want, const char* what) {
    if (lab.on_boundary) throw std::domain_error(std::string(what) + ": z on a region boundary");
    if (lab.region != want) throw std::domain_error(std::string(what) + ": z outside the model region");
}

}  // namespace

RatPoly model_actual(const AsymptoticModel& model, unsigned n) {
    using F = AsymptoticModel::Family;
    switch (model.family) {
        case F::Qnn: return bcd(n, n);
        case F::Qnn1: return bcd(n, n + 1);
        case F::UltraEven: return iterated_integral(ultra_monic(2 * n, model.alpha), 2 * n);
        case F::UltraOdd: return iterated_integral(ultra_monic(2 * n + 1, model.alpha), 2 * n + 1);
        case F::FixedM: return bcd(n, model.m);
    }
    throw std::logic_error("model_actual: bad family");
}

BigComplex model_value(const AsymptoticModel& model, unsigned n, const BigComplex& z) {
    using F = AsymptoticModel::Family;
    const mpfr_prec_t p = z.prec();
    const BigComplex one = cplx(1, 0, p);
    switch (model.family) {
        case F::Qnn:
        case F::Qnn1: {
            bool next = model.family == F::Qnn1;
            if ((z - one).is_zero()) throw PoleError("model_value: z = 1");
            RegionLabel lab = classify_E(z, boundary_tol(p));
            if (lab.region == Region::E1) {
                require_region(lab, Region::E1, "model_value");
                if (z.is_zero()) throw PoleError("model_value: z = 0");
                // (z+1)^{2n}/z^n, or (z+1)^{2n+1}/z^{n+1}
                BigComplex num = pow_ui(z + one, 2 * n + (next ? 1 : 0));
                return num / pow_ui(z, n + (next ? 1 : 0));
            }
            require_region(lab, Region::E2, "model_value");
            BigFloat fours(1L, p);
            mpfr_mul_2ui(fours.raw(), fours.raw(), 2 * n + (next ? 1 : 0), MPFR_RNDN);
            return BigComplex(fours, BigFloat(p)) / ((one - z) * sqrt_pi_n(n, p));
        }
        case F::UltraEven:
        case F::UltraOdd: {
            bool odd = model.family == F::UltraOdd;
            unsigned alpha = model.alpha;
            unsigned e = 2 * n + (odd ? 1 : 0);  // exponent base count
            if (alpha > e) throw std::invalid_argument("model_value: alpha exceeds 2n");
            RegionLabel lab = classify_F(z, boundary_tol(p));
            BigComplex z2 = z * z;
            if (lab.region == Region::F1) {
                require_region(lab, Region::F1, "model_value");
                // (z^2-1)^{e-alpha} z^{2 alpha}
                return pow_ui(z2 - one, e - alpha) * pow_ui(z, 2 * alpha);
            }
            require_region(lab, Region::F2, "model_value");
            BigComplex den = one + z2;
            if (den.is_zero()) throw PoleError("model_value: z = +-i");
            // (-1)^n 2^{e-alpha} z^{2n} / (sqrt(pi n) (1+z^2))   [even]
            // (-1)^n 2^{e-alpha} z^{2n+2} / (sqrt(pi n) (1+z^2)) [odd]
            BigFloat p2(1L, p);
            mpfr_mul_2ui(p2.raw(), p2.raw(), e - alpha, MPFR_RNDN);
            BigComplex num = pow_ui(z, odd ? 2 * n + 2 : 2 * n) * p2;
            BigComplex v = num / (den * sqrt_pi_n(n, p));
            return (n % 2) ? -v : v;
        }
        case F::FixedM: {
            unsigned m = model.m;
            if (m < 1) throw std::invalid_argument("model_value: FixedM needs m >= 1");
            BigFloat d = abs(z + one);
            BigFloat tol = boundary_tol(p);
            if (abs(d - BigFloat(1L, p)) <= tol)
                throw std::domain_error("model_value: z on |z+1| = 1");
            if (z.is_zero()) throw PoleError("model_value: z = 0");
            // The two branches of the fixed-m limit. The exact expansion
            // Q_{n,m} = z^{-m}((1+z)^{n+m} - sum_{k<m} binom(n+m,k) z^k)
            // makes the dominant term (z+1)^{n+m}/z^m outside |z+1| = 1 and
            // -binom(n+m, m-1)/z  (~ -n^{m-1}/((m-1)! z)) inside.
            if (d > BigFloat(1L, p)) return pow_ui(z + one, n + m) / pow_ui(z, m);
            return -inverse(z) * BigFloat(binomial_z(n + m, m - 1), p);
        }
    }
    throw std::logic_error("model_value: bad family");
}

BigFloat ratio_error(const AsymptoticModel& model, unsigned n, const BigComplex& z) {
    BigComplex actual = model_actual(model, n)(z);
    BigComplex mv = model_value(model, n, z);
    if (mv.is_zero()) throw PoleError("ratio_error: model value is zero");
    return abs(actual / mv - cplx(1, 0, z.prec()));
}

BigFloat nth_root(const RatPoly& p, const BigComplex& z) {
    if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("nth_root: need degree >= 1");
    BigComplex v = p(z);
    if (v.is_zero()) throw std::domain_error("nth_root: p(z) = 0");
    return exp(log(abs(v)) / static_cast<long>(p.degree()));
}

EmpiricalMeasure counting_measure(const RootSet& rs) { return {rs.roots}; }

BigFloat log_potential(const EmpiricalMeasure& mu, const BigComplex& z) {
    if (mu.points.empty()) throw std::invalid_argument("log_potential: empty measure");
    BigFloat acc(z.prec());
    for (const auto& x : mu.points) {
        BigComplex d = z - x;
        if (d.is_zero()) throw std::domain_error("log_potential: z is a support point");
        acc += log(abs(d));
    }
    return acc / static_cast<long>(mu.points.size());
}

double equidist_discrepancy(const RootSet& rs, unsigned bins) {
    if (bins < 2) throw std::invalid_argument("equidist_discrepancy: bins must be >= 2");
    if (rs.roots.empty()) throw std::invalid_argument("equidist_discrepancy: no roots");
    std::vector<std::size_t> count(bins, 0);
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (const auto& z : rs.roots) {
        double a = arg(phi(z)).to_double();  // (-pi, pi]
        double frac = a / two_pi;
        frac -= std::floor(frac);  // [0, 1)
        auto b = static_cast<std::size_t>(frac * bins);
        if (b >= bins) b = bins - 1;
        ++count[b];
    }
    double n = static_cast<double>(rs.roots.size());
    double worst = 0.0;
    for (unsigned b = 0; b < bins; ++b)
        worst = std::max(worst, std::fabs(static_cast<double>(count[b]) / n - 1.0 / bins));
    return worst;
}

BigComplex integral_ratio_on_arc(unsigned n, unsigned m, const BigComplex& z, const GaussRat& lambda) {
    if (!lambda.is_real() || abs(mpq_class(lambda.real())) > 1)
        throw std::invalid_argument("integral_ratio_on_arc: lambda must be real in [-1,1]");
    RatPoly phi_n = chebyshev_monic(n);
    RatPoly integ = iterated_integral(phi_n, m, lambda);
    BigComplex den = integ(z);
    if (den.is_zero()) throw std::domain_error("integral_ratio_on_arc: zero of the integral at z");
    return phi_n(z) / den;
}

BigComplex integral_ratio_off_arc(unsigned n, unsigned m, const GaussRat& lambda, const BigComplex& z) {
    const mpfr_prec_t p = z.prec();
    BigComplex lam = lambda.to_complex(p);
    RegionLabel lab = classify_level_interval(z, lam, boundary_tol(p));
    if (lab.on_boundary)
        throw std::domain_error("integral_ratio_off_arc: z within tolerance of the level curve");
    RatPoly phi_n = chebyshev_monic(n);
    RatPoly integ = iterated_integral(phi_n, m, lambda);
    BigComplex den = integ(z);
    if (den.is_zero()) throw std::domain_error("integral_ratio_off_arc: zero of the integral at z");
    BigComplex ratio = phi_n(z) / den;
    if (lab.region == Region::InsideLevel)
        return ratio * pow_ui(BigFloat(static_cast<long>(n), p), m - 1);
    return ratio;
}

BigFloat markov_check(const BigComplex& z, unsigned nodes) {
    if (nodes < 1) throw std::invalid_argument("markov_check: nodes must be >= 1");
    const mpfr_prec_t p = z.prec();
    BigFloat pi = BigFloat::pi(p);
    BigComplex acc(p);
    for (unsigned k = 1; k <= nodes; ++k) {
        // Chebyshev-Gauss nodes cos((2k-1) pi / (2 nodes)), equal weights.
        BigFloat theta = pi * static_cast<long>(2 * k - 1) / static_cast<long>(2 * nodes);
        BigComplex xk(cos(theta), BigFloat(p));
        acc += inverse(z - xk);
    }
    acc = acc / BigFloat(static_cast<long>(nodes), p);
    return abs(acc - psi_interval(z));
}

BigFloat path_integral_nthroot(unsigned n, const BigComplex& z1, const BigComplex& z2) {
    if (n < 1) throw std::invalid_argument("path_integral_nthroot: n must be >= 1");
    // The integrand is entire, so the exact antiderivative evaluated at the
    // endpoints is the path integral along any route.
    RatPoly F = chebyshev_monic(n).antiderivative(GaussRat(0));
    BigComplex val = F(z2) - F(z1);
    if (val.is_zero()) throw std::domain_error("path_integral_nthroot: zero integral");
    return exp(log(abs(val)) / static_cast<long>(n));
}

std::vector<BigComplex> convergence_grid_E1(mpfr_prec_t prec) {
    auto c = [&](double re, double im) { return BigComplex(re, im, prec); };
    return {c(2, 0),  c(3, 1), c(-7, 0),   c(0, 4),    c(1.5, 0),
            c(2, -2), c(6, 0), c(0, 10),   c(-10, 3),  c(2, 0.5)};
}

std::vector<BigComplex> convergence_grid_E2(mpfr_prec_t prec) {
    auto c = [&](double re, double im) { return BigComplex(re, im, prec); };
    return {c(0.2, 0),       c(-0.3, 0), c(0, 0.5), c(-1, 0),  c(0.5, 0),
            c(-2, 0),        c(-0.5, 0.5), c(0.3, 0.2), c(-4, 0), c(0, 0.8)};
}

}  // namespace ipoly
