#ifndef DOM_DREAL_HPP
#define DOM_DREAL_HPP

#include <mpfr.h>

#include <string>

#include "dom/rational.hpp"

namespace dom {

// 256-bit real with per-operation directed rounding. Logarithms are
// irrational, so every inequality against them is decided on the sound
// side: a rounded-down right-hand side certifies "<=", a rounded-up one
// certifies ">=". Comparisons against rationals are exact (mpfr_cmp_q).
class DReal {
public:
    static constexpr mpfr_prec_t kPrec = 256;

    DReal() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    DReal(const DReal& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    DReal& operator=(const DReal& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~DReal() { mpfr_clear(v_); }

    static DReal from_ui(unsigned long v);
    static DReal from_rat(const Rat& q, mpfr_rnd_t rnd);

    // 1 + ln(k) with the requested rounding; exact for k = 1.
    static DReal one_plus_ln(unsigned long k, mpfr_rnd_t rnd);

    DReal mul_rat(const Rat& q, mpfr_rnd_t rnd) const;
    DReal div(const DReal& d, mpfr_rnd_t rnd) const;

    // sign of (this - q), computed exactly
    int cmp(const Rat& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }
    int cmp_ui(unsigned long u) const { return mpfr_cmp_ui(v_, u); }
    int cmp(const DReal& o) const { return mpfr_cmp(v_, o.v_); }

    // Every finite MPFR value is a dyadic rational; this conversion is exact.
    Rat to_rat() const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int significant_digits = 6) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

}  // namespace dom

#endif
