#pragma once

/**
 * @file bigfloat.hpp
 * @brief Arbitrary-precision reals on top of MPFR with an explicit working
 *        precision in bits.
 *
 * The result of a binary operation carries min(prec(a), prec(b)) bits;
 * precision never drops below 64 bits. All rounding is to nearest.
 */

#include <mpfr.h>

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace ipoly {

class BigFloat {
public:
    static constexpr mpfr_prec_t min_prec = 64;

    BigFloat() {
        mpfr_init2(v_, min_prec);
        mpfr_set_zero(v_, 1);
    }
    explicit BigFloat(mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_zero(v_, 1);
    }
    BigFloat(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigFloat(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigFloat(const mpz_class& x, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const mpq_class& x, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, min_prec);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_string(const std::string& s, mpfr_prec_t prec) {
        BigFloat r(clamp(prec));
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(clamp(prec));
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat pos_inf(mpfr_prec_t prec) {
        BigFloat r(clamp(prec));
        mpfr_set_inf(r.v_, 1);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    /// Same value rounded to a (possibly lower) precision.
    BigFloat round_to(mpfr_prec_t prec) const {
        BigFloat r(clamp(prec));
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Decimal string with enough digits for bit-exact round trip.
    std::string str() const {
        if (is_nan()) return "nan";
        if (is_inf()) return sign() > 0 ? "inf" : "-inf";
        long digits = static_cast<long>(static_cast<double>(prec()) * 0.30103) + 3;
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits), v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, long b) {
        BigFloat r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, long b) {
        BigFloat r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, long b) {
        BigFloat r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, long b) {
        BigFloat r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow_ui(const BigFloat& a, unsigned long e) {
        BigFloat r(a.prec());
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(join(y, x));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

    /// Cheap log2 of |x| as a double; -inf for zero. Robust for values far
    /// outside double range.
    friend double log2_approx(const BigFloat& a) {
        if (a.is_zero()) return -std::numeric_limits<double>::infinity();
        long e = 0;
        double m = mpfr_get_d_2exp(&e, a.v_, MPFR_RNDN);
        return std::log2(std::fabs(m)) + static_cast<double>(e);
    }

private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < min_prec ? min_prec : p; }
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return a.prec() < b.prec() ? a.prec() : b.prec();
    }

    mpfr_t v_;
};

}  // namespace ipoly
