#include "fig8/region_atlas.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/tools/polynomial.hpp>
#include <boost/math/tools/rational.hpp>
#include <boost/math/tools/roots.hpp>

#include "fig8/errors.hpp"

namespace fig8 {

std::string to_string(RegionLabel label) {
    switch (label) {
        case RegionLabel::GammaPlus: return "GammaPlus";
        case RegionLabel::GammaZero: return "GammaZero";
        case RegionLabel::GammaMinus: return "GammaMinus";
        case RegionLabel::GammaTildePlus: return "GammaTildePlus";
        case RegionLabel::GammaTildeZero: return "GammaTildeZero";
        case RegionLabel::GammaTildeMinus: return "GammaTildeMinus";
        case RegionLabel::OmegaCapXi: return "OmegaCapXi";
        case RegionLabel::OmegaBoundary: return "OmegaBoundary";
        case RegionLabel::OutsideXi: return "OutsideXi";
    }
    return "OutsideXi";
}

bool is_conjectural(RegionLabel label) {
    return label == RegionLabel::GammaTildePlus || label == RegionLabel::GammaTildeZero ||
           label == RegionLabel::GammaTildeMinus;
}

Classification classify(cplx xi, double zero_tol) {
    const CuspParameter cp = make_cusp(xi);
    Classification out{RegionLabel::OutsideXi, {}};
    auto& d = out.diagnostics;
    d.in_xi = cp.inside_xi;
    d.cosh_a_minus_cos_b = std::cosh(cp.a) - std::cos(cp.b);
    d.tech_condition = cp.a * std::tanh(cp.c()) - cp.b * std::tan(cp.d());
    if (xi != cplx{0.0, 0.0}) d.re_s_over_xi = (action_s(cp) / xi).real();
    if (!cp.inside_xi) return out;

    if (std::abs(d.cosh_a_minus_cos_b - 0.5) <= zero_tol) {
        out.label = RegionLabel::OmegaBoundary;
    } else if (d.cosh_a_minus_cos_b < 0.5) {
        out.label = RegionLabel::OmegaCapXi;
    } else {
        const bool gamma = d.tech_condition >= 0.0;
        const double r = d.re_s_over_xi;
        if (std::abs(r) < zero_tol)
            out.label = gamma ? RegionLabel::GammaZero : RegionLabel::GammaTildeZero;
        else if (r > 0.0)
            out.label = gamma ? RegionLabel::GammaPlus : RegionLabel::GammaTildePlus;
        else
            out.label = gamma ? RegionLabel::GammaMinus : RegionLabel::GammaTildeMinus;
    }
    return out;
}

HvSigns hv_membership(cplx z, const CuspParameter& cp, double tol) {
    const cplx xz = cp.xi * z;
    if (!(xz.imag() > -kPi && xz.imag() <= kPi)) throw DomainError("hv_membership: need -pi < Im(xi z) <= pi");
    const cplx w = std::cosh(xz) - std::cosh(cp.xi);
    auto sgn = [tol](double v) { return std::abs(v) <= tol ? 0 : (v > 0 ? 1 : -1); };
    return {sgn(std::abs(w) - 0.5), sgn(w.imag())};
}

double chi(double y, double beta) { return std::asinh(beta / std::sin(y)); }

std::vector<cplx> chi_curve(const CuspParameter& cp, int samples) {
    if (samples < 2) throw DomainError("chi_curve: need at least two samples");
    const double b = cp.b, d = cp.d();
    if (!(b < d) || !cp.inside_xi) throw DomainError("chi_curve: xi must lie in Xi (b < d)");
    std::vector<cplx> pts;
    pts.reserve(samples);
    for (int j = 0; j < samples; ++j) {
        const double t = j == samples - 1 ? d : b + (d - b) * double(j) / double(samples - 1);
        pts.emplace_back(chi(t, cp.beta), t);
    }
    return pts;
}

double phi_landscape(double alpha, double beta, double x, double y) {
    const double u = alpha - std::cosh(x) * std::cos(y);
    const double v = beta - std::sinh(x) * std::sin(y);
    return u * u + v * v;
}

std::pair<double, double> phi_landscape_gradient(double alpha, double beta, double x, double y) {
    const double sx = std::sinh(x), cx = std::cosh(x), sy = std::sin(y), cy = std::cos(y);
    return {2.0 * (sx * cx - beta * cx * sy - alpha * sx * cy),
            2.0 * (-sy * cy - beta * sx * cy + alpha * cx * sy)};
}

PhiCriticalPoints phi_critical_points(double alpha, double beta) {
    const double r = alpha * alpha + beta * beta - 1.0;
    const double root = std::sqrt(r * r + 4.0 * beta * beta);
    const double x = std::asinh(std::sqrt(0.5 * (r + root)));
    const double y = std::asin(std::sqrt(std::max(0.0, 0.5 * (-r + root))));
    PhiCriticalPoints out;
    out.origin = {0.0, 0.0, phi_landscape(alpha, beta, 0.0, 0.0)};
    out.plus = {x, y, phi_landscape(alpha, beta, x, y)};
    out.minus = {-x, -y, phi_landscape(alpha, beta, -x, -y)};
    return out;
}

double curvature_lambda(double alpha, double beta, double s) {
    const double A = alpha + 0.5 * std::cos(s);
    const double B = beta + 0.5 * std::sin(s);
    const double r2 = A * A + B * B;
    return alpha * A * (r2 - 1.0) + beta * B * (r2 + 1.0) - A * A + B * B + 1.0;
}

double gamma_zero_trace(double b, std::pair<double, double> bracket, double tol) {
    auto f = [b](double a) {
        const cplx xi{a, b};
        return (action_s(make_cusp(xi)) / xi).real();
    };
    auto [lo, hi] = bracket;
    const double flo = f(lo), fhi = f(hi);
    if (!(flo * fhi <= 0.0)) throw BracketError("gamma_zero_trace: Re(S/xi) has no sign change on the bracket");
    auto stop = [tol](double l, double h) { return std::abs(h - l) <= tol; };
    const auto r = boost::math::tools::bisect(f, lo, hi, stop);
    return 0.5 * (r.first + r.second);
}

namespace {

cplx s_prime(cplx xi) { return ds_dxi(make_cusp(xi)); }

cplx s_second(cplx xi) {
    const CuspParameter cp = make_cusp(xi);
    return (std::cosh(xi) + std::cosh(cp.phi)) / std::sinh(cp.phi);
}

}  // namespace

double q_of_b(double b) {
    const double k = kappa();
    const cplx s = action_s(make_cusp({k, b}));
    return k * s.real() + b * s.imag();
}

double q_prime(double b) {
    const double k = kappa();
    const cplx xi{k, b};
    const cplx sp = kI * s_prime(xi);  // d/db S(kappa + bi)
    return k * sp.real() + action_s(make_cusp(xi)).imag() + b * sp.imag();
}

double q_second(double b) {
    const double k = kappa();
    const cplx xi{k, b};
    const cplx spp = s_second(xi);
    return -k * spp.real() + 2.0 * s_prime(xi).real() - b * spp.imag();
}

namespace {

// Coefficients in ascending degree.
using Poly = std::vector<double>;

double eval(const Poly& p, double x) { return boost::math::tools::evaluate_polynomial(p.data(), x, p.size()); }

double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
    auto stop = [](double l, double h) { return std::abs(h - l) <= 1e-14; };
    const auto r = boost::math::tools::bisect(f, lo, hi, stop);
    return 0.5 * (r.first + r.second);
}

std::vector<double> scan_real_roots(const Poly& p, double lo, double hi, double step) {
    std::vector<double> roots;
    auto f = [&p](double x) { return eval(p, x); };
    double x0 = lo, f0 = f(x0);
    const long steps = long(std::llround((hi - lo) / step));
    for (long j = 1; j <= steps; ++j) {
        const double x1 = lo + double(j) * step, f1 = f(x1);
        if (f0 == 0.0) roots.push_back(x0);
        else if (f0 * f1 < 0.0) roots.push_back(bisect_root(f, x0, x1));
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

OracleItem value_item(std::string name, double computed, double reference, double tol) {
    return {std::move(name), computed, reference, tol, std::abs(computed - reference) <= tol};
}

// Minimum of sign * f over a uniform open-interval sample; the item passes if positive.
OracleItem sign_item(std::string name, const std::function<double(double)>& f, double lo, double hi, int sign) {
    constexpr int kSamples = 20000;
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 1; j < kSamples; ++j) {
        const double x = lo + (hi - lo) * double(j) / double(kSamples);
        worst = std::min(worst, sign * f(x));
    }
    return {std::move(name), worst, std::numeric_limits<double>::quiet_NaN(), 0.0, worst > 0.0};
}

}  // namespace

std::vector<OracleItem> appendix_numeric_oracles() {
    std::vector<OracleItem> items;

    const Poly deg7{513, 504, -1704, -1494, 4443, 7310, 3780, 648};
    const auto roots = scan_real_roots(deg7, -5.0, 5.0, 1e-3);
    const std::array<double, 3> reference_roots{-2.44837, -1.66468, -1.26834};
    for (std::size_t j = 0; j < reference_roots.size(); ++j) {
        const double got = j < roots.size() ? roots[j] : std::numeric_limits<double>::quiet_NaN();
        items.push_back(value_item("deg7_root_" + std::to_string(j + 1), got, reference_roots[j], 1e-4));
    }
    items.push_back({"deg7_real_root_count", double(roots.size()), 3.0, 0.0, roots.size() == 3});

    const double k = kappa();
    const double c16 = 16.0 * k * k / (kPi * kPi);
    auto k1 = [c16](double b) { return std::sin(b) + b * std::cos(b) - c16; };
    auto k2 = [](double b) { return 2.0 * std::cos(b) - b * std::sin(b); };
    const double b0 = bisect_root(k2, 0.5, kPi / 2);
    items.push_back(value_item("k_argmax_b0", b0, 1.07687, 1e-4));
    items.push_back(value_item("k_prime_at_b0", k1(b0), -0.110587, 1e-4));

    items.push_back(value_item("Q_second_at_0.1", q_second(0.1), -1.84946, 1e-4));
    items.push_back(value_item("Q_second_at_pi/3", q_second(kPi / 3), 3.28977, 1e-4));
    items.push_back(value_item("Q_second_root_b0", bisect_root(q_second, 0.1, kPi / 3), 0.208854, 1e-4));
    items.push_back(value_item("Q_prime_root_b1", bisect_root(q_prime, 0.3, kPi / 3), 0.648548, 1e-4));
    items.push_back(value_item("Q_prime_at_pi/3", q_prime(kPi / 3), 1.28288, 1e-4));
    items.push_back(value_item("Q_at_pi/3", q_of_b(kPi / 3), -0.0762858, 1e-5));

    const double tmax = 1.0 / std::sqrt(3.0);
    auto even = [](Poly c) {  // polynomial in t^2
        return [c](double t) { return eval(c, t * t); };
    };
    items.push_back(sign_item("p1_positive", even({5, -9, -2}), 0.0, tmax, 1));
    items.push_back(sign_item("p2_positive", even({35, -52, 21}), 0.0, tmax, 1));
    items.push_back(sign_item("p3_positive", even({10, 70, 43, -9}), 0.0, tmax, 1));
    items.push_back(sign_item("p4_positive", even({95, 422, 98, -117}), 0.0, tmax, 1));
    items.push_back(sign_item("p5_positive", even({140, 650, 263, -108, 27}), 0.0, tmax, 1));
    items.push_back(sign_item("p6_positive", even({50, 115, -197, 107, -63}), 0.0, tmax, 1));
    items.push_back(sign_item("p7_positive", even({100, 1015, 3467, 532, -821, 351}), 0.0, tmax, 1));
    items.push_back(sign_item(
        "p8_positive",
        [](double t) {
            const double t2 = t * t;
            return std::sqrt((9 * t2 + 5) * (t2 * t2 + t2 + 4)) - 3 * t2 * t + 11 * t;
        },
        0.0, tmax, 1));
    items.push_back(sign_item("q1_positive", even({2500, 7375, -19100, -36108, 1658, -5935, -1042, -2052}), 0.0, tmax, 1));
    items.push_back(sign_item("q2_positive", even({1625, -1495, -6783, 919, 82, 684}), 0.0, tmax, 1));

    auto poly = [](Poly c) { return [c](double x) { return eval(c, x); }; };
    items.push_back(sign_item("upsilon1_negative", poly({-720, -1008, -63, 408, 174, 24, 1}), -1.0, 1.0, -1));
    items.push_back(sign_item("upsilon2_positive", poly({246, 548, 401, 104, 9}), -1.0, 1.0, 1));
    items.push_back(sign_item("upsilon3_negative", poly({-128, -100, -21, 24, 9}), -1.0, 1.0, -1));
    items.push_back(sign_item("upsilon4_positive", poly({65, 40, 28, 16, 3}), -1.0, 1.0, 1));
    items.push_back(sign_item("upsilon5_negative", poly({-94, -100, -123, -64, -8, 4, 1}), -1.0, 1.0, -1));
    return items;
}

}  // namespace fig8
