#pragma once

/**
 * @file bigcomplex.hpp
 * @brief Arbitrary-precision complex numbers built from two BigFloat
 *        components. Same min-precision rule as BigFloat.
 */

#include "ipoly/bigfloat.hpp"

#include <stdexcept>
#include <utility>

namespace ipoly {

class BigComplex {
public:
    BigComplex() : re_(), im_() {}
    explicit BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(BigFloat re) : re_(std::move(re)), im_(re_.prec()) {}
    BigComplex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

    static BigComplex from_polar(const BigFloat& r, const BigFloat& theta) {
        return {r * cos(theta), r * sin(theta)};
    }

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec() < im_.prec() ? re_.prec() : im_.prec(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    BigComplex round_to(mpfr_prec_t prec) const { return {re_.round_to(prec), im_.round_to(prec)}; }

    BigComplex operator-() const { return {-re_, -im_}; }
    friend BigComplex conj(const BigComplex& z) { return {z.re_, -z.im_}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
        return {a.re_ * s, a.im_ * s};
    }
    friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return a * s; }
    friend BigComplex operator/(const BigComplex& a, const BigFloat& s) {
        return {a.re_ / s, a.im_ / s};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat den = b.re_ * b.re_ + b.im_ * b.im_;
        if (den.is_zero()) throw std::domain_error("BigComplex: division by zero");
        return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
    }

    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

    friend BigFloat abs(const BigComplex& z) { return hypot(z.re_, z.im_); }
    friend BigFloat arg(const BigComplex& z) { return atan2(z.im_, z.re_); }

    /// Principal square root (Re >= 0; positive imaginary axis for negative reals).
    friend BigComplex sqrt(const BigComplex& z) {
        mpfr_prec_t p = z.prec();
        if (z.is_zero()) return BigComplex(p);
        if (z.im_.is_zero()) {
            if (z.re_.sign() >= 0) return {sqrt(z.re_), BigFloat(p)};
            return {BigFloat(p), sqrt(-z.re_)};
        }
        BigFloat r = abs(z);
        if (z.re_.sign() >= 0) {
            BigFloat u = sqrt((r + z.re_) / 2L);
            return {u, z.im_ / (u * 2L)};
        }
        BigFloat t = sqrt((r - z.re_) / 2L);
        BigFloat u = abs(z.im_) / (t * 2L);
        return z.im_.sign() >= 0 ? BigComplex{u, t} : BigComplex{u, -t};
    }

    /// Principal logarithm.
    friend BigComplex log(const BigComplex& z) {
        if (z.is_zero()) throw std::domain_error("BigComplex: log of zero");
        return {log(abs(z)), arg(z)};
    }

    friend BigComplex pow_ui(const BigComplex& z, unsigned long e) {
        BigComplex acc(BigFloat(1L, z.prec()), BigFloat(z.prec()));
        BigComplex base = z;
        while (e > 0) {
            if (e & 1UL) acc *= base;
            e >>= 1UL;
            if (e > 0) base *= base;
        }
        return acc;
    }

    friend BigComplex inverse(const BigComplex& z) {
        return BigComplex(BigFloat(1L, z.prec()), BigFloat(z.prec())) / z;
    }

private:
    BigFloat re_, im_;
};

}  // namespace ipoly
