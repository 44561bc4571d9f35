#include <cmath>
#include <vector>

#include <mpfr.h>

#include "fig8/errors.hpp"
#include "fig8/figure_eight.hpp"

namespace fig8 {

namespace {

// Accept the double-precision sum when it lost less than this many nats
// to cancellation (about two decimal digits).
constexpr double kDoubleCancellationBudget = 4.6;
constexpr int kGuardBits = 64;
constexpr int kMaxEscalations = 4;

// log(1 - e^w)
struct DoublePass {
    LogComplex value;
    double max_log = 0.0;
};

DoublePass double_pass(int n, cplx xi) {
    DoublePass out;
    LogSum sum;
    cplx log_term{0.0, 0.0};
    sum.add(LogComplex::one());
    const cplx step = xi / double(n);
    for (int k = 1; k < n; ++k) {
        const cplx f1 = -expm1c(double(n - k) * step);
        const cplx f2 = -expm1c(double(n + k) * step);
        // Every later term carries the same vanishing factor.
        if (f1 == cplx{0.0, 0.0} || f2 == cplx{0.0, 0.0}) break;
        log_term += -xi + principal_log(f1) + principal_log(f2);
        sum.add_exponent(log_term);
    }
    out.value = sum.total();
    out.max_log = sum.max_log();
    return out;
}

// Minimal RAII complex number over MPFR at a fixed precision.
class MpComplex {
public:
    explicit MpComplex(mpfr_prec_t prec) {
        mpfr_init2(re_, prec);
        mpfr_init2(im_, prec);
        mpfr_set_zero(re_, 1);
        mpfr_set_zero(im_, 1);
    }
    MpComplex(const MpComplex&) = delete;
    MpComplex& operator=(const MpComplex&) = delete;
    ~MpComplex() {
        mpfr_clear(re_);
        mpfr_clear(im_);
    }

    void set(double re, double im) {
        mpfr_set_d(re_, re, MPFR_RNDN);
        mpfr_set_d(im_, im, MPFR_RNDN);
    }
    void set(const MpComplex& o) {
        mpfr_set(re_, o.re_, MPFR_RNDN);
        mpfr_set(im_, o.im_, MPFR_RNDN);
    }

    // this *= o, using scratch registers t1, t2.
    void mul(const MpComplex& o, mpfr_t t1, mpfr_t t2) {
        mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
        mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
        mpfr_sub(t1, t1, t2, MPFR_RNDN);
        mpfr_mul(t2, re_, o.im_, MPFR_RNDN);
        mpfr_fma(im_, im_, o.re_, t2, MPFR_RNDN);
        mpfr_set(re_, t1, MPFR_RNDN);
    }
    void add(const MpComplex& o) {
        mpfr_add(re_, re_, o.re_, MPFR_RNDN);
        mpfr_add(im_, im_, o.im_, MPFR_RNDN);
    }
    // this = exp(m * w) for integer m.
    void set_exp_scaled(const MpComplex& w, long m, mpfr_t t1, mpfr_t t2) {
        mpfr_mul_si(t1, w.re_, m, MPFR_RNDN);
        mpfr_mul_si(t2, w.im_, m, MPFR_RNDN);
        mpfr_sin_cos(im_, re_, t2, MPFR_RNDN);
        mpfr_exp(t1, t1, MPFR_RNDN);
        mpfr_mul(re_, re_, t1, MPFR_RNDN);
        mpfr_mul(im_, im_, t1, MPFR_RNDN);
    }
    void one_minus() {
        mpfr_ui_sub(re_, 1, re_, MPFR_RNDN);
        mpfr_neg(im_, im_, MPFR_RNDN);
    }
    void div_si(long d) {
        mpfr_div_si(re_, re_, d, MPFR_RNDN);
        mpfr_div_si(im_, im_, d, MPFR_RNDN);
    }
    bool is_zero() const { return mpfr_zero_p(re_) && mpfr_zero_p(im_); }

    // log|z| and arg z, rounded to double.
    LogComplex to_log_complex(mpfr_t t1, mpfr_t t2) const {
        if (is_zero()) return LogComplex::zero();
        mpfr_hypot(t1, re_, im_, MPFR_RNDN);
        mpfr_log(t1, t1, MPFR_RNDN);
        mpfr_atan2(t2, im_, re_, MPFR_RNDN);
        return {mpfr_get_d(t1, MPFR_RNDN), wrap_angle(mpfr_get_d(t2, MPFR_RNDN))};
    }
    double log_abs(mpfr_t t1) const {
        mpfr_hypot(t1, re_, im_, MPFR_RNDN);
        mpfr_log(t1, t1, MPFR_RNDN);
        return mpfr_get_d(t1, MPFR_RNDN);
    }

private:
    mpfr_t re_, im_;
};

struct MpResult {
    LogComplex value;
    double max_log = 0.0;
};

MpResult mp_pass(int n, cplx xi, mpfr_prec_t prec) {
    mpfr_t t1, t2;
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);
    MpComplex step(prec), exp_minus_xi(prec), term(prec), sum(prec), f1(prec), f2(prec);
    step.set(xi.real(), xi.imag());
    step.div_si(n);
    MpComplex minus_xi(prec);
    minus_xi.set(-xi.real(), -xi.imag());
    exp_minus_xi.set_exp_scaled(minus_xi, 1, t1, t2);
    term.set(1.0, 0.0);
    sum.set(1.0, 0.0);
    double max_log = 0.0;
    for (int k = 1; k < n; ++k) {
        f1.set_exp_scaled(step, n - k, t1, t2);
        f1.one_minus();
        f2.set_exp_scaled(step, n + k, t1, t2);
        f2.one_minus();
        term.mul(exp_minus_xi, t1, t2);
        term.mul(f1, t1, t2);
        term.mul(f2, t1, t2);
        if (term.is_zero()) break;
        max_log = std::max(max_log, term.log_abs(t1));
        sum.add(term);
    }
    MpResult out{sum.to_log_complex(t1, t2), max_log};
    mpfr_clear(t1);
    mpfr_clear(t2);
    return out;
}

}  // namespace

JonesEvaluation colored_jones_detail(int n, cplx xi) {
    if (n < 1) throw DomainError("colored_jones: N must be positive");
    JonesEvaluation ev;
    if (n == 1) {
        ev.value = LogComplex::one();
        return ev;
    }
    const DoublePass dp = double_pass(n, xi);
    const double lost = dp.value.is_zero() ? INFINITY : dp.max_log - dp.value.log_mag;
    if (lost <= kDoubleCancellationBudget) {
        ev.value = dp.value;
        ev.cancellation_nats = lost;
        return ev;
    }
    // Extended precision: enough bits to absorb the spread of term sizes,
    // then re-checked against the cancellation actually observed.
    mpfr_prec_t prec = 53 + kGuardBits + mpfr_prec_t(std::ceil(std::max(dp.max_log, 0.0) / std::log(2.0)));
    for (int attempt = 0; attempt <= kMaxEscalations; ++attempt) {
        const MpResult r = mp_pass(n, xi, prec);
        const double lost_mp = r.value.is_zero() ? INFINITY : r.max_log - r.value.log_mag;
        const double needed = 53 + kGuardBits / 2 + lost_mp / std::log(2.0);
        if (std::isfinite(lost_mp) && needed <= double(prec)) {
            ev.value = r.value;
            ev.precision_bits = int(prec);
            ev.cancellation_nats = lost_mp;
            return ev;
        }
        prec = std::isfinite(needed) ? mpfr_prec_t(std::ceil(needed)) + 2 * kGuardBits : 2 * prec;
    }
    throw NumericalFailure("colored_jones: cancellation exceeds escalated precision");
}

LogComplex colored_jones(int n, cplx xi) { return colored_jones_detail(n, xi).value; }

}  // namespace fig8
