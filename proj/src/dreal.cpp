#include "dom/dreal.hpp"

#include <cstdio>
#include <vector>

namespace dom {

DReal DReal::from_ui(unsigned long v) {
    DReal r;
    mpfr_set_ui(r.v_, v, MPFR_RNDN);
    return r;
}

DReal DReal::from_rat(const Rat& q, mpfr_rnd_t rnd) {
    DReal r;
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
}

DReal DReal::one_plus_ln(unsigned long k, mpfr_rnd_t rnd) {
    DReal r;
    mpfr_set_ui(r.v_, k, MPFR_RNDN);  // exact
    mpfr_log(r.v_, r.v_, rnd);
    mpfr_add_ui(r.v_, r.v_, 1, rnd);
    return r;
}

DReal DReal::mul_rat(const Rat& q, mpfr_rnd_t rnd) const {
    DReal r;
    mpfr_mul_q(r.v_, v_, q.get_mpq_t(), rnd);
    return r;
}

DReal DReal::div(const DReal& d, mpfr_rnd_t rnd) const {
    DReal r;
    mpfr_div(r.v_, v_, d.v_, rnd);
    return r;
}

Rat DReal::to_rat() const {
    if (mpfr_zero_p(v_)) return Rat(0);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
    Rat r(mant);
    if (e >= 0) {
        mpz_class shifted = mant << static_cast<unsigned long>(e);
        r = Rat(shifted);
    } else {
        mpz_class den(1);
        den <<= static_cast<unsigned long>(-e);
        r = Rat(mant, den);
        r.canonicalize();
    }
    return r;
}

std::string DReal::str(int significant_digits) const {
    char fmt[16], buf[128];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", significant_digits);
    mpfr_snprintf(buf, sizeof(buf), fmt, v_);
    return buf;
}

}  // namespace dom
