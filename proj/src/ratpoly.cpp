#include "ipoly/ratpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipoly {

namespace {
const GaussRat kZero{};
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::monomial(std::size_t k, GaussRat a) {
    std::vector<GaussRat> c(k + 1);
    c[k] = std::move(a);
    return RatPoly(std::move(c));
}

const GaussRat& RatPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : kZero; }

const GaussRat& RatPoly::leading() const {
    if (c_.empty()) throw std::domain_error("RatPoly: zero polynomial has no leading coefficient");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<GaussRat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<GaussRat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const GaussRat& s) {
    if (s.is_zero()) return {};
    RatPoly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

GaussRat RatPoly::operator()(const GaussRat& z) const {
    GaussRat acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
}

BigComplex RatPoly::operator()(const BigComplex& z) const {
    mpfr_prec_t p = z.prec();
    BigComplex acc(p);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k].to_complex(p);
    return acc;
}

RatPoly RatPoly::derivative(unsigned j) const {
    RatPoly r = *this;
    for (unsigned t = 0; t < j; ++t) {
        if (r.c_.size() <= 1) return {};
        std::vector<GaussRat> d(r.c_.size() - 1);
        for (std::size_t k = 1; k < r.c_.size(); ++k) d[k - 1] = r.c_[k] * GaussRat(static_cast<long>(k));
        r.c_ = std::move(d);
    }
    r.normalize();
    return r;
}

RatPoly RatPoly::antiderivative(const GaussRat& lambda) const {
    std::vector<GaussRat> c(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k)
        c[k + 1] = c_[k] / GaussRat(static_cast<long>(k + 1));
    RatPoly r(std::move(c));
    r.c_[0] = -(r(lambda));  // constant term so that r(lambda) == 0
    r.normalize();
    return r;
}

RatPoly RatPoly::shifted(const GaussRat& lambda) const {
    // Horner-style Taylor shift: repeated synthetic division by (z - (-lambda)).
    if (c_.empty() || lambda.is_zero()) return *this;
    std::vector<GaussRat> q = c_;
    std::size_t n = q.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = n - 1; k + 1 > i; --k) q[k] += q[k + 1] * lambda;
    return RatPoly(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
    os << "[";
    for (std::size_t k = 0; k < p.c_.size(); ++k) {
        if (k) os << ", ";
        os << p.c_[k].str();
    }
    return os << "]";
}

RatPoly iterated_antiderivative(const RatPoly& p, unsigned m, const GaussRat& lambda) {
    RatPoly r = p;
    for (unsigned t = 0; t < m; ++t) r = r.antiderivative(lambda);
    return r;
}

RatPoly iterated_integral_general(const RatPoly& p, unsigned m, const GaussRat& lambda) {
    if (p.is_zero()) throw std::invalid_argument("iterated_integral: zero polynomial");
    if (m == 0) return p;
    unsigned long n = static_cast<unsigned long>(p.degree());
    return iterated_antiderivative(p, m, lambda) * GaussRat(mpq_class(rising_product(n, m)));
}

RatPoly iterated_integral(const RatPoly& p, unsigned m, const GaussRat& lambda) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("iterated_integral: input must be monic");
    return iterated_integral_general(p, m, lambda);
}

BigComplex iterated_integral_value(const RatPoly& p, unsigned m, const BigComplex& lambda,
                                   const BigComplex& z) {
    if (p.is_zero()) throw std::invalid_argument("iterated_integral_value: zero polynomial");
    const mpfr_prec_t prec = lambda.prec() < z.prec() ? lambda.prec() : z.prec();
    std::vector<BigComplex> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(a.to_complex(prec));
    auto horner = [&](const std::vector<BigComplex>& v, const BigComplex& x) {
        BigComplex acc(prec);
        for (std::size_t k = v.size(); k-- > 0;) acc = acc * x + v[k];
        return acc;
    };
    for (unsigned t = 0; t < m; ++t) {
        std::vector<BigComplex> next(c.size() + 1, BigComplex(prec));
        for (std::size_t k = 0; k < c.size(); ++k)
            next[k + 1] = c[k] / BigFloat(static_cast<long>(k + 1), prec);
        next[0] = -horner(next, lambda);
        c = std::move(next);
    }
    BigFloat scale(rising_product(static_cast<unsigned long>(p.degree()), m), prec);
    return horner(c, z) * scale;
}

std::vector<GaussRat> binomial_coords(const RatPoly& p) {
    if (p.is_zero()) return {};
    unsigned long n = static_cast<unsigned long>(p.degree());
    std::vector<GaussRat> a(n + 1);
    for (unsigned long k = 0; k <= n; ++k)
        a[k] = p.coeff(k) / GaussRat(mpq_class(binomial_z(n, k)));
    return a;
}

RatPoly from_binomial_coords(const std::vector<GaussRat>& a) {
    if (a.empty()) return {};
    unsigned long n = static_cast<unsigned long>(a.size() - 1);
    std::vector<GaussRat> c(a.size());
    for (unsigned long k = 0; k <= n; ++k) c[k] = a[k] * GaussRat(mpq_class(binomial_z(n, k)));
    return RatPoly(std::move(c));
}

RatPoly taylor_polynomial(const RatPoly& p, const GaussRat& lambda, unsigned d) {
    if (p.is_zero()) return {};
    if (static_cast<int>(d) >= p.degree()) return p;
    RatPoly q = p.shifted(lambda);  // q(u) = p(u + lambda)
    std::vector<GaussRat> t(q.coeffs().begin(), q.coeffs().begin() + d + 1);
    return RatPoly(std::move(t)).shifted(-lambda);
}

}  // namespace ipoly
