#include "fig8/quantum_dilog.hpp"

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "fig8/errors.hpp"

namespace fig8 {

namespace {

constexpr double kShrink = 1e-9;
using Rule = boost::math::quadrature::gauss<double, 20>;

// Gauss-Legendre on [lo, hi] split into `panels` equal pieces.
template <class Fn>
cplx panel_sum(Fn&& fn, double lo, double hi, long panels) {
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    const double h = (hi - lo) / double(panels);
    cplx total{0.0, 0.0};
    for (long p = 0; p < panels; ++p) {
        const double mid = lo + (double(p) + 0.5) * h;
        const double half = 0.5 * h;
        // Positive abscissas only; a centre node exists for odd orders.
        std::size_t j0 = 0;
        cplx s{0.0, 0.0};
        if (x[0] == 0.0) {
            s = w[0] * fn(mid);
            j0 = 1;
        }
        for (std::size_t j = j0; j < x.size(); ++j)
            s += w[j] * (fn(mid + half * x[j]) + fn(mid - half * x[j]));
        total += half * s;
    }
    return total;
}

// Integrand e^{(2z-1)t} / (t^power sinh t sinh(g t)), g = gamma/N.
struct Kernel {
    cplx z;
    cplx g;
    int power;  // 1 for T_N, 0 for T_N'

    // Real t >= 1, written with decaying exponentials only.
    cplx right(double t) const {
        const cplx num = 4.0 * std::exp((2.0 * z - 2.0 - g) * t);
        const cplx den = (-std::expm1(-2.0 * t)) * (-expm1c(-2.0 * g * t));
        return power == 1 ? num / (den * t) : num / den;
    }
    // Value at t = -u, u >= 1.
    cplx left(double u) const {
        const cplx num = 4.0 * std::exp((-2.0 * z - g) * u);
        const cplx den = (-std::expm1(-2.0 * u)) * (-expm1c(-2.0 * g * u));
        // t sinh t sinh(g t) is odd in t for power 1, even for power 0.
        return power == 1 ? -num / (den * u) : num / den;
    }
    // On the semicircle t = e^{is}, including dt/ds = i t.
    cplx arc(double s) const {
        const cplx t = std::polar(1.0, s);
        cplx val = std::exp((2.0 * z - 1.0) * t) / (std::sinh(t) * std::sinh(g * t));
        if (power == 1) val /= t;
        return val * kI * t;
    }
};

// Smallest T >= 1 with tail bound below `target`; the integrand is bounded by
// 4 e^{-delta t} / (t (1-e^{-2}) (1-e^{-2 Re(g) t})).
double tail_length(double delta, double re_g, double target, int power) {
    auto bound = [&](double t) {
        const double lead = 4.0 / ((1.0 - std::exp(-2.0)) * (-std::expm1(-2.0 * re_g * t)));
        return lead * std::exp(-delta * t) / (delta * (power == 1 ? t : 1.0));
    };
    double hi = 2.0;
    while (bound(hi) > target) {
        hi *= 2.0;
        if (hi > 1e8) throw NumericalFailure("t_n: tail does not decay fast enough to truncate");
    }
    double lo = 1.0;
    if (bound(lo) <= target) return lo;
    for (int it = 0; it < 60 && hi - lo > 0.5; ++it) {
        const double mid = 0.5 * (lo + hi);
        (bound(mid) > target ? lo : hi) = mid;
    }
    return std::ceil(hi);
}

cplx integrate_path(const Kernel& k, const PotentialContext& ctx, const QuadratureSpec& quad, double prefactor) {
    if (!(quad.tol > 0.0) || quad.max_panels < 8 || quad.tail_safety < 1.0)
        throw DomainError("QuadratureSpec: need tol > 0, max_panels >= 8, tail_safety >= 1");
    const double re_g = k.g.real();
    const double delta_right = 2.0 - 2.0 * k.z.real() + re_g;
    const double delta_left = 2.0 * k.z.real() + re_g;
    if (!(delta_right > 0.0 && delta_left > 0.0))
        throw DomainError("t_n: argument outside the validity strip");
    const double target = quad.tol / (quad.tail_safety * prefactor);
    const double t_right = tail_length(delta_right, re_g, target, k.power);
    const double t_left = tail_length(delta_left, re_g, target, k.power);
    (void)ctx;

    long m_right = std::max(1L, long(std::ceil(t_right - 1.0)));
    long m_left = std::max(1L, long(std::ceil(t_left - 1.0)));
    long m_arc = 16;
    auto total = [&] {
        cplx s{0.0, 0.0};
        if (t_right > 1.0) s += panel_sum([&](double t) { return k.right(t); }, 1.0, t_right, m_right);
        if (t_left > 1.0) s += panel_sum([&](double u) { return k.left(u); }, 1.0, t_left, m_left);
        // The path runs from -1 to 1 over the arc, i.e. s from pi down to 0.
        s -= panel_sum([&](double a) { return k.arc(a); }, 0.0, kPi, m_arc);
        return prefactor * s;
    };
    cplx prev = total();
    while (true) {
        m_right *= 2;
        m_left *= 2;
        m_arc *= 2;
        if (m_right + m_left + m_arc > quad.max_panels)
            throw NumericalFailure("t_n: quadrature did not converge within max_panels");
        const cplx cur = total();
        if (std::abs(cur - prev) < quad.tol) return cur;
        prev = cur;
    }
}

bool in_strip_raw(cplx z, const PotentialContext& ctx, double shrink) {
    const double h = ctx.gamma.real() / (2.0 * ctx.n);
    return z.real() > -h + shrink && z.real() < 1.0 + h - shrink;
}

}  // namespace

PotentialContext make_context(const CuspParameter& cp, int n) {
    if (n < 1) throw DomainError("make_context: N must be positive");
    PotentialContext ctx{cp, cp.xi / (2.0 * kPi * kI), n};
    if (!(ctx.gamma.real() > 0.0)) throw DomainError("make_context: Re gamma = Im xi/(2 pi) must be positive");
    return ctx;
}

bool in_validity_strip(cplx z, const PotentialContext& ctx) { return in_strip_raw(z, ctx, 0.0); }

bool in_sigma_domain(cplx z, const PotentialContext& ctx) {
    const double h = ctx.gamma.real() / (2.0 * ctx.n);
    const double e = kShrink;
    if (!(z.real() > -1.0 + h + e && z.real() < 2.0 - h - e)) return false;
    // Excluded triangles, enlarged by the shrink margin.
    const bool left_tri = z.imag() >= -e && z.real() <= e && (z / ctx.gamma).imag() <= e;
    const bool right_tri = z.imag() <= e && z.real() >= 1.0 - e && ((z - 1.0) / ctx.gamma).imag() >= -e;
    return !left_tri && !right_tri;
}

bool in_theta_domain(cplx z, const PotentialContext& ctx) {
    const cplx xi = ctx.cp.xi;
    const double a = ctx.cp.a, b = ctx.cp.b, e = kShrink;
    const cplx xz = xi * z;
    const double lim = 2.0 * kPi + (1.0 - 1.0 / (2.0 * ctx.n)) * b;
    if (!(std::abs(xz.imag()) < lim - e)) return false;
    const double h = 2.0 * kPi * a / std::norm(xi);
    const bool up_plus = xz.real() >= a - e && xz.imag() < lim + e && z.imag() >= -e;
    const bool down_minus = xz.real() <= a + e && xz.imag() > -lim - e && z.imag() <= -h + e;
    const bool down_plus = xz.real() <= -a + e && xz.imag() > -lim - e && z.imag() <= e;
    const bool up_minus = xz.real() >= -a - e && xz.imag() < lim + e && z.imag() >= h - e;
    return !(up_plus || down_minus || down_plus || up_minus);
}

cplx t_n(cplx z, const PotentialContext& ctx, const QuadratureSpec& quad, bool allow_extended) {
    const cplx g = ctx.gamma / double(ctx.n);
    if (in_strip_raw(z, ctx, kShrink)) return integrate_path(Kernel{z, g, 1}, ctx, quad, 0.25);
    if (!allow_extended || !in_sigma_domain(z, ctx))
        throw DomainError("t_n: argument outside the validity strip");
    // exp(T_N(w - g/2)) / exp(T_N(w + g/2)) = 1 - e^{2 pi i w}; step by g
    // toward the strip, accumulating the logs.
    const double h = ctx.gamma.real() / (2.0 * ctx.n);
    const double centre = 0.5;
    const double dir = z.real() < centre ? 1.0 : -1.0;
    cplx w = z;
    cplx acc{0.0, 0.0};
    const long max_steps = long(4.0 / (2.0 * h)) + 4;
    for (long s = 0; s < max_steps && !in_strip_raw(w, ctx, 2.0 * kShrink + 0.5 * h); ++s) {
        const cplx mid = w + dir * 0.5 * g;
        const cplx f = -expm1c(2.0 * kPi * kI * mid);
        if (f == cplx{0.0, 0.0}) throw DomainError("t_n: extension path meets a zero of 1 - e^{2 pi i z}");
        acc += dir * principal_log(f);
        w += dir * g;
    }
    if (!in_strip_raw(w, ctx, kShrink)) throw NumericalFailure("t_n: extension did not reach the strip");
    return integrate_path(Kernel{w, g, 1}, ctx, quad, 0.25) + acc;
}

cplx t_n_prime(cplx z, const PotentialContext& ctx, const QuadratureSpec& quad) {
    if (!in_strip_raw(z, ctx, kShrink)) throw DomainError("t_n_prime: argument outside the validity strip");
    return integrate_path(Kernel{z, ctx.gamma / double(ctx.n), 0}, ctx, quad, 0.5);
}

cplx f_n(cplx z, const PotentialContext& ctx, const QuadratureSpec& quad) {
    if (!in_theta_domain(z, ctx)) throw DomainError("f_n: argument outside Theta");
    const cplx g = ctx.gamma;
    const double n = ctx.n;
    const cplx xi = ctx.cp.xi;
    return (t_n(g * (1.0 - z), ctx, quad, true) - t_n(g * (1.0 + z), ctx, quad, true)) / n - xi * z +
           2.0 * kPi * kI * z;
}

cplx big_f(cplx z, const CuspParameter& cp) {
    const cplx xi = cp.xi;
    const cplx g = xi / (2.0 * kPi * kI);
    return (l2(g * (1.0 - z)) - l2(g * (1.0 + z))) / xi - xi * z + 2.0 * kPi * kI * z;
}

cplx big_f_dilog_form(cplx z, const CuspParameter& cp) {
    const cplx xi = cp.xi, xz = xi * z;
    if (!(std::abs(xz.real()) < cp.a)) throw DomainError("big_f_dilog_form: needs |Re(xi z)| < a");
    return (dilog(std::exp(-xi - xz)) - dilog(std::exp(-xi + xz))) / xi + xz;
}

cplx big_f_prime(cplx z, const CuspParameter& cp) {
    const cplx xi = cp.xi;
    cplx xz = xi * z;
    if (std::abs(xz.real()) < cp.a) {
        const cplx arg = 2.0 * std::cosh(xi) - 2.0 * std::cosh(xz);
        if (arg == cplx{0.0, 0.0}) throw DomainError("big_f_prime: log of zero");
        return principal_log(arg);
    }
    // F is odd, so F' is even.
    if (xz.real() < 0.0) xz = -xz;
    const cplx u1 = -expm1c(-xi - xz), u2 = -expm1c(xi - xz);
    if (u1 == cplx{0.0, 0.0} || u2 == cplx{0.0, 0.0}) throw DomainError("big_f_prime: log of zero");
    return principal_log(u1) + principal_log(u2) + xz + kPi * kI;
}

cplx big_g(cplx zz, const CuspParameter& cp) { return big_f(zz / cp.xi, cp); }

cplx big_g_prime(cplx zz, const CuspParameter& cp) { return big_f_prime(zz / cp.xi, cp) / cp.xi; }

LogComplex jones_via_potential(int n, const CuspParameter& cp, const QuadratureSpec& quad) {
    const PotentialContext ctx = make_context(cp, n);
    if (!cp.inside_xi) throw DomainError("jones_via_potential: xi must lie in Xi");
    LogSum sum;
    for (int k = 0; k < n; ++k) {
        const cplx z = double(2 * k + 1) / double(2 * n);
        sum.add_exponent(double(n) * f_n(z, ctx, quad));
    }
    return sum.total() / LogComplex::from_complex(2.0 * std::sinh(cp.xi / 2.0));
}

}  // namespace fig8
