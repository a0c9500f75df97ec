#pragma once

/**
 * @file rational.hpp
 * @brief Exact Gaussian-rational scalars and exact integer helpers
 *        (binomials, factorials, rising products).
 *
 * GaussRat is the coefficient type for every exact polynomial in the
 * library. Arithmetic is closed under +,-,*,/ with nonzero divisor and
 * never rounds.
 */

#include "ipoly/bigcomplex.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace ipoly {

inline mpz_class binomial_z(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return r;  // 0
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class factorial_z(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// (n+1)(n+2)...(n+m) = (n+m)!/n! as an exact product.
inline mpz_class rising_product(unsigned long n, unsigned long m) {
    mpz_class r = 1;
    for (unsigned long t = 1; t <= m; ++t) r *= mpz_class(n + t);
    return r;
}

/// 1*3*5*...*(2n+1)
inline mpz_class odd_double_factorial(unsigned long n) {
    mpz_class r = 1;
    for (unsigned long t = 0; t <= n; ++t) r *= mpz_class(2 * t + 1);
    return r;
}

class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long v) : re_(v), im_(0) {}
    GaussRat(const mpz_class& v) : re_(v), im_(0) {}
    GaussRat(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussRat(long num, long den) : re_(num, den), im_(0) {
        if (den == 0) throw std::domain_error("GaussRat: zero denominator");
        re_.canonicalize();
    }

    static GaussRat i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussRat operator-() const { return raw(-re_, -im_); }
    friend GaussRat conj(const GaussRat& a) { return raw(a.re_, -a.im_); }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return raw(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return raw(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return raw(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        mpq_class den = b.re_ * b.re_ + b.im_ * b.im_;
        if (den == 0) throw std::domain_error("GaussRat: division by zero");
        return raw((a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den);
    }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    GaussRat pow(unsigned long e) const {
        GaussRat acc(1);
        GaussRat base = *this;
        while (e > 0) {
            if (e & 1UL) acc *= base;
            e >>= 1UL;
            if (e > 0) base *= base;
        }
        return acc;
    }

    /// |a|^2 = a * conj(a), an exact nonnegative rational.
    friend mpq_class norm2(const GaussRat& a) { return a.re_ * a.re_ + a.im_ * a.im_; }

    BigComplex to_complex(mpfr_prec_t prec) const {
        return {BigFloat(re_, prec), BigFloat(im_, prec)};
    }

    /// Canonical form: "n", "n/d", "re+imi", "re-imi" (imaginary part
    /// printed unsigned after the separator).
    std::string str() const {
        if (im_ == 0) return re_.get_str();
        std::string s = re_.get_str();
        if (im_ > 0)
            s += "+" + im_.get_str() + "i";
        else
            s += "-" + mpq_class(-im_).get_str() + "i";
        return s;
    }

    /// Parses the canonical form emitted by str().
    static GaussRat parse(const std::string& s);

private:
    static GaussRat raw(mpq_class re, mpq_class im) {
        GaussRat g;
        g.re_ = std::move(re);
        g.im_ = std::move(im);
        return g;
    }

    mpq_class re_, im_;
};

inline GaussRat GaussRat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("GaussRat: empty string");
    auto parse_q = [](const std::string& t) {
        mpq_class q;
        if (q.set_str(t, 10) != 0) throw std::invalid_argument("GaussRat: bad rational '" + t + "'");
        if (q.get_den() == 0) throw std::invalid_argument("GaussRat: zero denominator in '" + t + "'");
        q.canonicalize();
        return q;
    };
    if (s.back() != 'i') return GaussRat(parse_q(s));
    // split at the last '+' or '-' that is not the leading sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size() - 1; k > 0; --k) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos)
        throw std::invalid_argument("GaussRat: bad complex literal '" + s + "'");
    mpq_class re = parse_q(s.substr(0, split));
    mpq_class im = parse_q(s.substr(split + 1, s.size() - split - 2));
    if (s[split] == '-') im = -im;
    return {re, im};
}

}  // namespace ipoly
