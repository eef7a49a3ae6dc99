// Test-only multiprecision oracle backed by MPFR (128-bit by default).
// Kept independent of the interval implementation it checks.

#ifndef VOLCERT_TESTS_ORACLE_HPP
#define VOLCERT_TESTS_ORACLE_HPP

#include <mpfr.h>

#include <string>

#include "volcert/interval.hpp"

namespace oracle {

inline constexpr mpfr_prec_t kPrec = 128;

class Mp {
public:
    Mp() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    explicit Mp(double d) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit Mp(const char* decimal) {
        mpfr_init2(v_, kPrec);
        mpfr_set_str(v_, decimal, 10, MPFR_RNDN);
    }
    Mp(const Mp& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Mp& operator=(const Mp& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Mp() { mpfr_clear(v_); }

    static Mp pi() { Mp r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

    friend Mp operator+(const Mp& a, const Mp& b) { Mp r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Mp operator-(const Mp& a, const Mp& b) { Mp r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Mp operator*(const Mp& a, const Mp& b) { Mp r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Mp operator/(const Mp& a, const Mp& b) { Mp r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Mp operator-(const Mp& a) { Mp r; mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

    Mp sqrt() const { Mp r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    Mp exp() const { Mp r; mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    Mp log() const { Mp r; mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
    Mp cosh() const { Mp r; mpfr_cosh(r.v_, v_, MPFR_RNDN); return r; }
    Mp sinh() const { Mp r; mpfr_sinh(r.v_, v_, MPFR_RNDN); return r; }
    Mp tanh() const { Mp r; mpfr_tanh(r.v_, v_, MPFR_RNDN); return r; }
    Mp acosh() const { Mp r; mpfr_acosh(r.v_, v_, MPFR_RNDN); return r; }
    Mp cos() const { Mp r; mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int cmp_d(double d) const { return mpfr_cmp_d(v_, d); }
    bool operator<(const Mp& o) const { return mpfr_cmp(v_, o.v_) < 0; }

    std::string str(int digits = 25) const;

private:
    mpfr_t v_;
};

// Whether the interval encloses the oracle value.
inline bool enclosed(const volcert::Interval& iv, const Mp& x) {
    return x.cmp_d(iv.lo()) >= 0 && x.cmp_d(iv.hi()) <= 0;
}

// cosh R = sqrt(1 + 1/(2c - 2)) at 128-bit.
Mp cosh_R(const Mp& c);

// The full muffin-plus-collar volume bound at a point, evaluated entirely
// in MPFR: an independent route used for soundness spot checks.
Mp km_volume_bound(const Mp& c);

// V(l1) = pi [l1 + 2 sinh l1 + cosh R (acosh((4c+1)/3) - l1 - sinh l1)].
Mp v_combined(const Mp& c);

}  // namespace oracle

#endif
