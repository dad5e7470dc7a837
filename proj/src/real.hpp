#pragma once

// Thin value-semantic wrapper over an MPFR float. Every value carries its own
// precision; binary operations produce a result at the larger of the two.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <utility>

namespace asp::detail {

class Real {
public:
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    [[nodiscard]] int sign() const { return mpfr_sgn(v_); }

    mpfr_ptr raw() { return v_; }
    [[nodiscard]] mpfr_srcptr raw() const { return v_; }

    /// Exact binomial coefficient C(n, k), rounded once into the target precision.
    static Real binomial(unsigned long n, unsigned long k, mpfr_prec_t bits) {
        mpz_t z;
        mpz_init(z);
        mpz_bin_uiui(z, n, k);
        Real r(bits);
        mpfr_set_z(r.v_, z, MPFR_RNDN);
        mpz_clear(z);
        return r;
    }

    Real& operator+=(const Real& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real& operator+=(double x) { mpfr_add_d(v_, v_, x, MPFR_RNDN); return *this; }

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend Real operator*(Real a, long k) { return a *= k; }
    friend Real operator/(Real a, long k) { return a /= k; }
    friend Real operator-(Real a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

    friend Real exp(Real a) { mpfr_exp(a.v_, a.v_, MPFR_RNDN); return a; }
    friend Real log(Real a) { mpfr_log(a.v_, a.v_, MPFR_RNDN); return a; }
    friend Real sqrt(Real a) { mpfr_sqrt(a.v_, a.v_, MPFR_RNDN); return a; }
    friend Real pow(Real a, unsigned long k) { mpfr_pow_ui(a.v_, a.v_, k, MPFR_RNDN); return a; }
    /// log Gamma(a) for a > 0.
    friend Real lgamma(Real a) { mpfr_lngamma(a.v_, a.v_, MPFR_RNDN); return a; }

private:
    void widen(const Real& o) {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    }

    mpfr_t v_;
};

}  // namespace asp::detail
