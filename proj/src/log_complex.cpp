#include "fig8/log_complex.hpp"

#include <algorithm>

namespace fig8 {

double wrap_angle(double theta) {
    if (theta > -kPi && theta <= kPi) return theta;
    double r = std::remainder(theta, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

LogComplex LogComplex::from_complex(cplx z) {
    if (z == cplx{0.0, 0.0}) return zero();
    return {std::log(std::abs(z)), std::arg(cplx{z.real(), z.imag() == 0.0 ? 0.0 : z.imag()})};
}

LogComplex LogComplex::from_exponent(cplx w) { return {w.real(), wrap_angle(w.imag())}; }

cplx LogComplex::to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    return std::polar(std::exp(log_mag), arg);
}

LogComplex LogComplex::operator*(const LogComplex& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return {log_mag + o.log_mag, wrap_angle(arg + o.arg)};
}

LogComplex LogComplex::operator/(const LogComplex& o) const {
    if (is_zero()) return zero();
    return {log_mag - o.log_mag, wrap_angle(arg - o.arg)};
}

double LogSum::max_log() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms_) m = std::max(m, t.log_mag);
    return m;
}

LogComplex LogSum::total() const {
    const double m = max_log();
    if (std::isinf(m)) return LogComplex::zero();
    cplx s{0.0, 0.0};
    for (const auto& t : terms_) {
        if (t.is_zero()) continue;
        s += std::polar(std::exp(t.log_mag - m), t.arg);
    }
    LogComplex r = LogComplex::from_complex(s);
    if (r.is_zero()) return r;
    r.log_mag += m;
    return r;
}

}  // namespace fig8
