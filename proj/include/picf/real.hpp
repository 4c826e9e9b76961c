#pragma once

#include <mpfr.h>

#include <string>

#include "picf/int_util.hpp"

namespace picf {

// Small RAII wrapper around mpfr_t. Precision is explicit everywhere;
// binary operations carry the larger operand precision.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
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

    static Real of(const Int& n, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of(long n, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    friend Real operator+(const Real& x, const Real& y) { return binop(mpfr_add, x, y); }
    friend Real operator-(const Real& x, const Real& y) { return binop(mpfr_sub, x, y); }
    friend Real operator*(const Real& x, const Real& y) { return binop(mpfr_mul, x, y); }
    friend Real operator/(const Real& x, const Real& y) { return binop(mpfr_div, x, y); }

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real abs() const {
        Real r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real cos() const {
        Real r(prec());
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real sqrt() const {
        Real r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }

    // |x| compared against 10^exp10 (e.g. exp10 = -10 for 1e-10).
    bool abs_less_than_pow10(long exp10) const {
        Real bound(prec());
        mpfr_set_si(bound.v_, 10, MPFR_RNDN);
        mpfr_pow_si(bound.v_, bound.v_, exp10, MPFR_RNDN);
        return mpfr_cmpabs(v_, bound.v_) < 0;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(BinFn fn, const Real& x, const Real& y) {
        Real r(std::max(x.prec(), y.prec()));
        fn(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

}  // namespace picf
