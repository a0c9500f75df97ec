#include "ipoly/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ipoly {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_double(std::uint64_t h) {  // [0, 1)
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Initial guesses from the upper convex hull of (k, log2|a_k|): each hull
/// edge of horizontal span c contributes c points on the circle of radius
/// 2^{-slope}, with deterministic seed-driven perturbations.
std::vector<BigComplex> initial_guesses(const std::vector<BigComplex>& coef, mpfr_prec_t prec,
                                        std::uint64_t seed) {
    const std::size_t n = coef.size() - 1;
    std::vector<std::pair<double, double>> pts;  // (k, log2|a_k|)
    for (std::size_t k = 0; k <= n; ++k) {
        BigFloat m = abs(coef[k]);
        if (!m.is_zero()) pts.emplace_back(static_cast<double>(k), log2_approx(m));
    }
    std::vector<std::pair<double, double>> hull;  // upper hull, increasing k
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            double cross = (b.first - a.first) * (q.second - a.second) -
                           (q.first - a.first) * (b.second - a.second);
            if (cross >= 0) hull.pop_back();  // b below or on chord a-q
            else break;
        }
        hull.push_back(q);
    }

    std::vector<BigComplex> z;
    z.reserve(n);
    BigFloat two_pi = BigFloat::pi(prec) * 2L;
    std::size_t idx = 0;
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        double span = hull[e + 1].first - hull[e].first;
        double slope = (hull[e + 1].second - hull[e].second) / span;
        auto cnt = static_cast<std::size_t>(span + 0.5);
        double lg_r = -slope;  // |roots| on this edge ~ 2^{-slope}
        // clamp to double range in the exponent only; mpfr holds the value
        BigFloat radius = exp(BigFloat(lg_r * 0.69314718055994530942, prec));
        for (std::size_t j = 0; j < cnt; ++j, ++idx) {
            double jit = unit_double(splitmix64(seed ^ (0x51ed270b9768f4b3ULL + idx)));
            double frac = (static_cast<double>(j) + 0.5) / static_cast<double>(cnt) +
                          0.2078795763 * static_cast<double>(e + 1) + 0.002 * (jit - 0.5);
            BigFloat theta = two_pi * BigFloat(frac, prec);
            z.push_back(BigComplex::from_polar(radius, theta));
        }
    }
    while (z.size() < n)  // degenerate hulls; keep the count exact
        z.push_back(BigComplex(BigFloat(1L, prec), BigFloat(0.5, prec)));
    return z;
}

/// p(x) and p'(x) by one Horner pass.
void horner2(const std::vector<BigComplex>& coef, const BigComplex& x, BigComplex& pv,
             BigComplex& dv) {
    mpfr_prec_t p = x.prec();
    pv = BigComplex(p);
    dv = BigComplex(p);
    for (std::size_t k = coef.size(); k-- > 0;) {
        dv = dv * x + pv;
        pv = pv * x + coef[k];
    }
}

/// Backward-error scale s(|z|) = sum_k |a_k| |z|^k. A root with
/// |p(z)| <= tol * s(|z|) is an exact root of a polynomial whose
/// coefficients are each perturbed by at most tol relatively.
BigFloat residual_scale(const std::vector<BigFloat>& absc, const BigFloat& az) {
    BigFloat s(az.prec());
    for (std::size_t k = absc.size(); k-- > 0;) s = s * az + absc[k];
    return s;
}

}  // namespace

BigFloat exact_residual(const RatPoly& p, const BigComplex& z, mpfr_prec_t prec) {
    mpfr_prec_t wp = 2 * prec;
    BigComplex zz = z.round_to(wp);
    BigFloat pabs = abs(p(zz));
    std::vector<BigFloat> absc;
    absc.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) absc.push_back(abs(c.to_complex(wp)));
    return pabs / residual_scale(absc, abs(zz));
}

RootSet roots(const RatPoly& p, const RootOptions& opt) {
    if (p.is_zero()) throw std::invalid_argument("roots: zero polynomial");
    const int deg_i = p.degree();
    if (deg_i < 1) throw std::invalid_argument("roots: degree must be >= 1");
    const auto deg = static_cast<unsigned long>(deg_i);
    const mpfr_prec_t prec =
        opt.prec > 0 ? opt.prec : std::max<mpfr_prec_t>(128, 4 * static_cast<mpfr_prec_t>(deg));

    // Deflate exact zero roots at the origin.
    std::size_t k0 = 0;
    while (k0 < p.coeffs().size() && p.coeffs()[k0].is_zero()) ++k0;
    std::vector<GaussRat> body(p.coeffs().begin() + static_cast<long>(k0), p.coeffs().end());
    RatPoly q{std::vector<GaussRat>(body)};
    const auto dq = static_cast<std::size_t>(q.degree());

    RootSet rs;
    rs.degree = static_cast<unsigned>(deg);

    std::vector<BigComplex> coef;
    coef.reserve(dq + 1);
    for (const auto& c : q.coeffs()) coef.push_back(c.to_complex(prec));
    std::vector<BigFloat> absc;
    absc.reserve(coef.size());
    for (const auto& c : coef) absc.push_back(abs(c));

    std::vector<BigComplex> z;
    std::vector<BigFloat> res;
    unsigned iters = 0;
    bool all_ok = false;

    if (dq >= 1) {
        z = initial_guesses(coef, prec, opt.seed);
        std::vector<char> settled(dq, 0);
        res.assign(dq, BigFloat(prec));
        BigFloat stop_scale(1L, prec);
        mpfr_div_2ui(stop_scale.raw(), stop_scale.raw(), static_cast<unsigned long>(prec - 6),
                     MPFR_RNDN);

        // Up to three rounds: iterate, certify against the exact
        // coefficients, and if a few iterates are stranded (the Newton
        // polygon can badly overestimate extreme root moduli when zeros
        // cluster on a curve), restart just those near certified roots.
        std::vector<BigComplex> nz(dq, BigComplex(prec));
        for (unsigned attempt = 0; attempt < 3 && !all_ok; ++attempt) {
            int polish = -1;
            for (unsigned sweep = 0; sweep < opt.max_iter; ++sweep, ++iters) {
                bool every_res_ok = true;
                bool any_moved = false;
                for (std::size_t i = 0; i < dq; ++i) {
                    if (settled[i]) {
                        nz[i] = z[i];
                        continue;
                    }
                    BigComplex pv(prec), dv(prec);
                    horner2(coef, z[i], pv, dv);
                    res[i] = abs(pv) / residual_scale(absc, abs(z[i]));
                    if (!(res[i] <= opt.tol)) every_res_ok = false;
                    if (pv.is_zero()) {
                        nz[i] = z[i];
                        settled[i] = 1;
                        continue;
                    }
                    BigComplex sum(prec);
                    bool collide = false;
                    for (std::size_t j = 0; j < dq; ++j) {
                        if (j == i) continue;
                        BigComplex d = z[i] - z[j];
                        if (d.is_zero()) {
                            collide = true;
                            break;
                        }
                        sum += inverse(d);
                    }
                    if (collide) {  // nudge off the collision deterministically
                        BigFloat eps(1L, prec);
                        mpfr_div_2ui(eps.raw(), eps.raw(), static_cast<unsigned long>(prec / 2),
                                     MPFR_RNDN);
                        nz[i] = z[i] + BigComplex(eps, eps * static_cast<long>(i + 1));
                        any_moved = true;
                        continue;
                    }
                    BigComplex w;
                    if (dv.is_zero()) {
                        w = BigComplex(BigFloat(1L, prec), BigFloat(prec));
                    } else {
                        BigComplex newton = pv / dv;
                        BigComplex den =
                            BigComplex(BigFloat(1L, prec), BigFloat(prec)) - newton * sum;
                        w = den.is_zero() ? newton : newton / den;
                        // trust region: never jump past twice the current radius
                        BigFloat cap = abs(z[i]) + BigFloat(1L, prec);
                        BigFloat aw = abs(w);
                        if (aw > cap) w = w * (cap / aw);
                    }
                    nz[i] = z[i] - w;
                    BigFloat step = abs(w);
                    if (step <= abs(z[i]) * stop_scale + stop_scale) settled[i] = 1;
                    else any_moved = true;
                }
                std::swap(z, nz);
                if (every_res_ok && polish < 0) polish = 2;  // a couple of polish sweeps
                if (polish >= 0 && polish-- == 0) break;
                if (!any_moved && polish < 0) break;  // stalled at full precision
            }

            // Certify against the exact coefficients at twice the precision.
            all_ok = true;
            std::vector<std::size_t> good, bad;
            for (std::size_t i = 0; i < dq; ++i) {
                res[i] = exact_residual(q, z[i], prec);
                if (res[i] <= opt.tol) good.push_back(i);
                else {
                    bad.push_back(i);
                    all_ok = false;
                }
            }
            if (all_ok || good.empty() || attempt + 1 == 3) break;
            // Rebase stranded iterates near certified roots; the Aberth
            // repulsion then steers them into the unoccupied zeros.
            BigFloat two_pi = BigFloat::pi(prec) * 2L;
            for (std::size_t j = 0; j < bad.size(); ++j) {
                std::size_t anchor = good[(7 * j + attempt) % good.size()];
                double jit = unit_double(
                    splitmix64(opt.seed ^ (0xc6a4a7935bd1e995ULL + j + 131 * attempt)));
                BigFloat theta = two_pi * BigFloat(jit, prec);
                BigComplex dir = BigComplex::from_polar(BigFloat(0.05, prec), theta);
                BigComplex one(BigFloat(1L, prec), BigFloat(prec));
                z[bad[j]] = z[anchor] * (one + dir);
                settled[bad[j]] = 0;
            }
        }
    } else {
        all_ok = true;
    }

    for (std::size_t t = 0; t < k0; ++t) {
        z.push_back(BigComplex(prec));
        res.push_back(BigFloat(prec));
    }

    // Canonical order: lexicographic by (re, im).
    std::vector<std::size_t> order(z.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (z[a].real() != z[b].real()) return z[a].real() < z[b].real();
        return z[a].imag() < z[b].imag();
    });
    rs.roots.reserve(z.size());
    rs.residuals.reserve(z.size());
    for (std::size_t i : order) {
        rs.roots.push_back(z[i]);
        rs.residuals.push_back(res[i]);
    }
    rs.converged = all_ok;
    rs.iterations = iters;
    return rs;
}

RootSet strip_origin(const RootSet& rs, double tol) {
    RootSet out;
    out.converged = rs.converged;
    out.iterations = rs.iterations;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (abs(rs.roots[i]) <= tol) continue;
        out.roots.push_back(rs.roots[i]);
        out.residuals.push_back(rs.residuals[i]);
    }
    out.degree = static_cast<unsigned>(out.roots.size());
    return out;
}

}  // namespace ipoly
