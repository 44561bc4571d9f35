#include "fig8/special_functions.hpp"

#include <array>
#include <cmath>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "fig8/errors.hpp"

namespace fig8 {

namespace {

// std::log / std::sqrt honour the sign of a zero imaginary part; the
// conventions here put the negative axis on the upper side.
cplx strip_negative_zero(cplx z) {
    if (z.imag() == 0.0) return {z.real(), 0.0};
    return z;
}

constexpr double kPi2over6 = kPi * kPi / 6.0;

cplx dilog_series(cplx z) {
    cplx sum{0.0, 0.0};
    cplx zn = z;
    for (int n = 1; n <= 200; ++n) {
        cplx term = zn / double(n * n);
        sum += term;
        if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(sum))) break;
        zn *= z;
    }
    return sum;
}

// Li2(z) = sum_n B_n u^{n+1}/(n+1)!, u = -log(1-z), |u| < 2 pi.
cplx dilog_bernoulli(cplx z) {
    static const auto coeff = [] {
        std::array<double, 20> c{};
        for (int k = 1; k <= 20; ++k)
            c[k - 1] = boost::math::bernoulli_b2n<double>(k) /
                       boost::math::factorial<double>(2 * k + 1);
        return c;
    }();
    const cplx u = -std::log(1.0 - z);
    const cplx u2 = u * u;
    cplx sum = u - 0.25 * u2;
    cplx up = u;
    for (double ck : coeff) {
        up *= u2;
        cplx term = ck * up;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// |z| <= 1 and Re z <= 1/2.
cplx dilog_core(cplx z) {
    if (std::abs(z) <= 0.5) return dilog_series(z);
    return dilog_bernoulli(z);
}

// |z| <= 1, z != 1.
cplx dilog_unit_disk(cplx z) {
    if (z.real() <= 0.5) return dilog_core(z);
    // Reflection: Li2(z) + Li2(1-z) = pi^2/6 - log z log(1-z).
    return kPi2over6 - std::log(z) * std::log(1.0 - z) - dilog_core(1.0 - z);
}

}  // namespace

cplx principal_log(cplx z) {
    if (z == cplx{0.0, 0.0}) throw DomainError("principal_log: log 0 is undefined");
    return std::log(strip_negative_zero(z));
}

cplx principal_sqrt(cplx z) { return std::sqrt(strip_negative_zero(z)); }

cplx dilog(cplx z) {
    z = strip_negative_zero(z);
    if (z == cplx{0.0, 0.0}) return {0.0, 0.0};
    if (z == cplx{1.0, 0.0}) return {kPi2over6, 0.0};
    if (z.imag() == 0.0 && z.real() > 1.0) {
        const double x = z.real();
        const double lx = std::log(x);
        const double re = 2.0 * kPi2over6 - 0.5 * lx * lx - dilog_unit_disk(cplx{1.0 / x, 0.0}).real();
        return {re, -kPi * lx};
    }
    if (std::abs(z) <= 1.0) return dilog_unit_disk(z);
    // Inversion: Li2(z) + Li2(1/z) = -pi^2/6 - log^2(-z)/2, z off [0, inf).
    const cplx lm = std::log(-z);
    return -kPi2over6 - 0.5 * lm * lm - dilog_unit_disk(1.0 / z);
}

cplx expm1c(cplx w) {
    const double x = w.real(), y = w.imag();
    const double em1 = std::expm1(x);
    const double s = std::sin(0.5 * y);
    // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
    const double re = em1 * std::cos(y) - 2.0 * s * s;
    const double im = std::exp(x) * std::sin(y);
    return {re, im};
}

static void require_l_domain(cplx z, const char* who) {
    if (z.imag() == 0.0 && (z.real() <= 0.0 || z.real() >= 1.0))
        throw DomainError(std::string(who) + ": argument on (-inf,0] or [1,inf)");
}

cplx l1(cplx z) {
    require_l_domain(z, "l1");
    const cplx tpi = 2.0 * kPi * kI;
    if (z.imag() >= 0.0) return principal_log(-expm1c(tpi * z));
    return tpi * z - kPi * kI + principal_log(-expm1c(-tpi * z));
}

cplx l2(cplx z) {
    require_l_domain(z, "l2");
    const cplx tpi = 2.0 * kPi * kI;
    if (z.imag() >= 0.0) return dilog(std::exp(tpi * z));
    const double p2 = kPi * kPi;
    return 2.0 * p2 * z * z - 2.0 * p2 * z + p2 / 3.0 - dilog(std::exp(-tpi * z));
}

double l2_derivative_check(cplx z, double h) {
    if (!(h >= 1e-8 && h <= 1e-4)) throw DomainError("l2_derivative_check: h outside [1e-8, 1e-4]");
    const cplx d = (l2(z + h) - l2(z - h)) / (2.0 * h);
    return std::abs(d + 2.0 * kPi * kI * l1(z));
}

}  // namespace fig8
