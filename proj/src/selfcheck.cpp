#include "fig8/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "fig8/asymptotics.hpp"
#include "fig8/errors.hpp"
#include "fig8/quantum_dilog.hpp"
#include "fig8/region_atlas.hpp"
#include "fig8/topology.hpp"

namespace fig8 {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(7);
    os << v;
    return os.str();
}

bool within(double v, double target, double tol) { return std::abs(v - target) <= tol; }
bool in_range(double v, double lo, double hi) { return v >= lo && v <= hi; }

// Uniform sample of Xi restricted to a < a_max, kept away from b = 0, pi/2.
cplx random_xi(std::mt19937_64& rng, double a_max = 2.5) {
    std::uniform_real_distribution<double> ua(0.05, a_max), ub(0.05, kPi / 2 - 0.05);
    for (;;) {
        const cplx xi{ua(rng), ub(rng)};
        if (std::cosh(xi.real()) * std::cos(xi.imag()) > 0.55) return xi;
    }
}

CheckResult guarded(int id, const std::string& name, const std::function<CheckResult()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {id, name, false, std::string("exception: ") + e.what()};
    }
}

CheckResult c01_kappa() {
    const double k = kappa();
    return {1, "kappa = arcosh(3/2)", within(k, 0.962424, 1e-5), "kappa=" + fmt(k)};
}

CheckResult c02_triple() {
    const auto cls = classify({1.0, 0.5});
    const auto& d = cls.diagnostics;
    const bool ok = within(d.tech_condition, 0.0661743, 1e-5) && within(d.cosh_a_minus_cos_b, 0.665498, 1e-5) &&
                    within(d.re_s_over_xi, -0.166996, 1e-5);
    return {2, "diagnostic triple at xi=1+0.5i", ok,
            "tech=" + fmt(d.tech_condition) + " cosh_a-cos_b=" + fmt(d.cosh_a_minus_cos_b) +
                " Re(S/xi)=" + fmt(d.re_s_over_xi)};
}

CheckResult c03_gamma_minus_rate() {
    const cplx xi{1.0, 0.5};
    const cplx limit = 1.0 / alexander(std::exp(xi));
    std::vector<double> err;
    for (int n : {100, 200, 400}) err.push_back(std::abs(colored_jones(n, xi).to_complex() - limit));
    const double r1 = err[1] / err[0], r2 = err[2] / err[1];
    const bool ok = in_range(r1, 0.18, 0.32) && in_range(r2, 0.18, 0.32);
    return {3, "Gamma- rate O(N^-2) at xi=1+0.5i", ok,
            "errors=" + fmt(err[0]) + "," + fmt(err[1]) + "," + fmt(err[2]) + " ratios=" + fmt(r1) + "," + fmt(r2)};
}

CheckResult c04_gamma_plus_rate() {
    const CuspParameter cp = make_cusp({1.5, 0.5});
    std::vector<double> err;
    double phase = 0;
    for (int n : {200, 400}) {
        const LogComplex q = colored_jones(n, cp.xi) / predict(cp, n).leading;
        err.push_back(std::abs(q.to_complex() - 1.0));
        phase = std::abs(q.arg);
    }
    const double ratio = err[1] / err[0];
    const bool ok = in_range(ratio, 0.35, 0.65) && err[1] < 0.1 && phase < 0.05;
    return {4, "Gamma+ rate O(N^-1) at xi=1.5+0.5i", ok,
            "rel_err=" + fmt(err[0]) + "," + fmt(err[1]) + " ratio=" + fmt(ratio) + " phase400=" + fmt(phase)};
}

CheckResult c05_gamma_zero() {
    const double a0 = gamma_zero_trace(0.5, {1.0, 1.2}, 1e-13);
    const CuspParameter cp = make_cusp({a0, 0.5});
    std::vector<double> res;
    for (int n : {200, 800}) {
        const AsymptoticPrediction p = predict(cp, n, 1e-9);
        res.push_back(std::abs(colored_jones(n, cp.xi).to_complex() - p.leading.to_complex()));
    }
    const double ratio = res[1] / res[0];
    const bool ok = within(a0, 1.0943, 1e-3) && in_range(ratio, 0.4, 0.6);
    return {5, "Gamma0 locus and O(N^-1/2) two-term residual", ok,
            "a*=" + fmt(a0) + " residuals=" + fmt(res[0]) + "," + fmt(res[1]) + " ratio=" + fmt(ratio)};
}

CheckResult c06_omega_rate() {
    const ConvergenceReport rep = convergence_study(make_cusp({0.3, 0.3}), {50, 100, 200});
    const bool ok = in_range(rep.fitted_order, -2.4, -1.6) && rep.regime == RegionLabel::OmegaCapXi;
    return {6, "Omega rate at xi=0.3+0.3i", ok,
            "fitted_order=" + fmt(rep.fitted_order) + " regime=" + to_string(rep.regime)};
}

CheckResult c07_quantum_dilog() {
    const CuspParameter cp = make_cusp({1.0, 0.5});
    // Functional equation at z = j gamma / N.
    const int n = 15;
    const PotentialContext ctx = make_context(cp, n);
    const cplx g = ctx.gamma / double(n);
    double fe = 0;
    for (int j = 1; j < 2 * n; ++j) {
        const cplx lhs = std::exp(t_n((j - 0.5) * g, ctx) - t_n((j + 0.5) * g, ctx));
        fe = std::max(fe, std::abs(lhs - (1.0 - std::exp(double(j) * cp.xi / double(n)))));
    }
    // Convergence of T_N to (N/xi) L2.
    double worst_ratio_dev = 0, ratio_seen = 0;
    for (cplx z : {cplx{0.4, 0.1}, cplx{0.2, -0.1}, cplx{0.7, 0.05}, cplx{0.5, 0.0}, cplx{0.3, 0.3}}) {
        double e[2];
        int idx = 0;
        for (int m : {50, 100}) {
            const PotentialContext c = make_context(cp, m);
            e[idx++] = std::abs(t_n(z, c) - double(m) / cp.xi * l2(z));
        }
        const double r = e[1] / e[0];
        if (std::abs(r - 0.5) >= worst_ratio_dev) {
            worst_ratio_dev = std::abs(r - 0.5);
            ratio_seen = r;
        }
    }
    // Cross-route agreement.
    double worst_rel = 0;
    for (cplx xi : {cplx{1.0, 0.5}, cplx{0.8, 0.4}, cplx{1.5, 0.5}, cplx{0.5, 0.3}, cplx{2.0, 1.0}}) {
        const CuspParameter c = make_cusp(xi);
        for (int m = 1; m <= 12; ++m) {
            const cplx q = (jones_via_potential(m, c) / colored_jones(m, xi)).to_complex();
            worst_rel = std::max(worst_rel, std::abs(q - 1.0));
        }
    }
    const bool ok = fe < 1e-7 && worst_ratio_dev <= 0.1 && worst_rel < 1e-6;
    return {7, "quantum dilogarithm identities", ok,
            "functional_eq_max=" + fmt(fe) + " worst_halving_ratio=" + fmt(ratio_seen) +
                " potential_vs_direct_max_rel=" + fmt(worst_rel)};
}

CheckResult c08_saddle() {
    std::mt19937_64 rng(8);
    double worst_fp = 0, worst_h = 0;
    for (int i = 0; i < 20; ++i) {
        const SaddleReport r = saddle_check(make_cusp(random_xi(rng)));
        worst_fp = std::max(worst_fp, std::abs(r.f_prime_at_sigma));
        worst_h = std::max(worst_h, std::abs(r.fd_second_derivative - r.hessian));
    }
    return {8, "saddle identities at 20 random xi", worst_fp < 1e-10 && worst_h < 1e-6,
            "max|F'(sigma)|=" + fmt(worst_fp) + " max|FD F''-closed|=" + fmt(worst_h)};
}

CheckResult c09_topology() {
    std::mt19937_64 rng(9);
    double rel = 0, ell = 0;
    for (int i = 0; i < 1000; ++i) {
        const cplx xi = random_xi(rng);
        for (int s : {1, -1}) rel = std::max(rel, check_relation(riley_rep(xi, s)));
        ell = std::max(ell, std::abs(longitude_eigenvalue(xi) + std::exp(-v_of(xi) / 2.0)));
    }
    const double k = kappa();
    const cplx cs = cs_invariant(make_cusp(k));
    const double cs_err = std::abs(cs - cplx{0.0, -k * kPi / 2});
    const double v_err = std::abs(v_of(k) - cplx{0.0, -2.0 * kPi});
    double lower = 0, top = 0;
    for (cplx xi : {cplx{1.0, 0.5}, cplx{1.5, 0.5}, cplx{0.8, 0.4}, cplx{2.0, 1.0}}) {
        for (int s : {1, -1}) {
            const Matrix2C m = longitude_matrix(riley_rep(xi, s));
            lower = std::max(lower, std::abs(m.m21));
            const double best = std::min(std::abs(m.m12 - longitude_top_right(xi, 1)),
                                         std::abs(m.m12 - longitude_top_right(xi, -1)));
            top = std::max(top, best);
        }
    }
    const bool ok = rel < 1e-10 && ell < 1e-10 && cs_err < 1e-12 && v_err < 1e-12 && lower < 1e-10 && top < 1e-9;
    return {9, "representation, longitude and Chern-Simons checks", ok,
            "relation=" + fmt(rel) + " ell_vs_v=" + fmt(ell) + " cs_kappa_err=" + fmt(cs_err) +
                " v_kappa_err=" + fmt(v_err) + " m21=" + fmt(lower) + " top_right=" + fmt(top)};
}

CheckResult c10_volume() {
    const cplx s0 = action_s(make_cusp(0.0));
    const bool ok = within(std::abs(s0), 2.029883, 1e-5) && std::abs(s0.real()) < 1e-12 && s0.imag() < 0.0;
    return {10, "S(0) = -Vol i", ok, "S(0)=" + fmt(s0.real()) + (s0.imag() < 0 ? "" : "+") + fmt(s0.imag()) + "i"};
}

CheckResult c11_constants() {
    const auto items = appendix_numeric_oracles();
    bool ok = true;
    std::string failed;
    for (const auto& it : items) {
        if (it.pass) continue;
        ok = false;
        failed += " " + it.name + "(computed=" + fmt(it.computed) +
                  (std::isnan(it.reference) ? "" : " reference=" + fmt(it.reference)) + ")";
    }
    return {11, "auxiliary-function constants", ok,
            std::to_string(items.size()) + " items" + (ok ? ", all within tolerance" : "; failing:" + failed)};
}

CheckResult c12_curvature() {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ua(0.5, 6.0), ub(0.0, 6.0), us(0.0, 2.0 * kPi);
    int taken = 0, bad = 0;
    double worst = INFINITY;
    while (taken < 100000) {
        const double al = ua(rng), be = ub(rng), s = us(rng);
        if (!(al > 0.5 && be > 0.0) || (al - 1) * (al - 1) + be * be < 0.25) continue;
        const double A = al + 0.5 * std::cos(s), B = be + 0.5 * std::sin(s);
        if (std::hypot(A - 1.0, B) <= 1e-6) continue;
        ++taken;
        const double lam = curvature_lambda(al, be, s);
        worst = std::min(worst, lam);
        if (!(lam > 0.0)) ++bad;
    }
    // A = 1, B = 0 with s = -pi/2: alpha = 1, beta = 1/2.
    const double singular = curvature_lambda(1.0, 0.5, -kPi / 2);
    const bool ok = bad == 0 && std::abs(singular) < 1e-10;
    return {12, "curvature positivity", ok,
            "samples=100000 nonpositive=" + std::to_string(bad) + " min=" + fmt(worst) +
                " lambda_at_(1,0)=" + fmt(singular)};
}

CheckResult c13_kappa_trend() {
    const double k = kappa();
    double err[2];
    int idx = 0;
    for (int n : {500, 2000}) {
        const LogComplex p = known_case_predict(5, {}, n);
        err[idx++] = std::abs((colored_jones(n, k) / p).to_complex() - 1.0);
    }
    return {13, "case xi=kappa trend", err[1] < err[0], "rel_err500=" + fmt(err[0]) + " rel_err2000=" + fmt(err[1])};
}

CheckResult s_jones_symmetries() {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> un(2, 50);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        const cplx xi = random_xi(rng);
        const int n = un(rng);
        const cplx j = colored_jones(n, xi).to_complex();
        const double scale = std::abs(j);
        worst = std::max(worst, std::abs(colored_jones(n, std::conj(xi)).to_complex() - std::conj(j)) / scale);
        worst = std::max(worst, std::abs(colored_jones(n, -xi).to_complex() - j) / scale);
    }
    return {101, "conjugation and amphichirality", worst < 1e-10, "max_rel=" + fmt(worst)};
}

CheckResult s_dilog_identities() {
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0;
    for (int i = 0; i < 2000; ++i) {
        const cplx z{u(rng), u(rng)};
        if (std::abs(z.imag()) < 1e-3) continue;
        const cplx refl = dilog(z) + dilog(1.0 - z) - kPi * kPi / 6 + std::log(z) * std::log(1.0 - z);
        const cplx inv = dilog(z) + dilog(1.0 / z) + kPi * kPi / 6 + 0.5 * std::pow(std::log(-z), 2);
        worst = std::max({worst, std::abs(refl), std::abs(inv)});
    }
    return {102, "dilogarithm reflection and inversion", worst < 1e-12, "max_residual=" + fmt(worst)};
}

CheckResult s_partition() {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> ua(1e-3, 3.0), ub(1e-3, kPi / 2 - 1e-3);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const double a = ua(rng), b = ub(rng);
        const Classification c = classify({a, b});
        const bool inside = std::cosh(a) * std::cos(b) > 0.5;
        const bool outside_label = c.label == RegionLabel::OutsideXi;
        if (inside == outside_label) ++bad;
        const bool omega = std::cosh(a) - std::cos(b) < 0.5;
        if (inside && omega && c.label != RegionLabel::OmegaCapXi && c.label != RegionLabel::OmegaBoundary) ++bad;
        if (inside && omega && !(c.diagnostics.re_s_over_xi < 0)) ++bad;
    }
    return {103, "region partition", bad == 0, "inconsistent=" + std::to_string(bad)};
}

CheckResult s_sign_claims() {
    int signs = 0, bad = 0;
    for (const auto& it : appendix_numeric_oracles()) {
        if (!std::isnan(it.reference)) continue;
        ++signs;
        bad += !it.pass;
    }
    return {104, "auxiliary polynomial sign claims", bad == 0 && signs > 0,
            std::to_string(signs) + " claims, " + std::to_string(bad) + " violated"};
}

}  // namespace

std::vector<CheckResult> run_acceptance() {
    const std::vector<std::pair<std::string, std::function<CheckResult()>>> checks{
        {"kappa", c01_kappa},           {"triple", c02_triple},  {"gamma_minus", c03_gamma_minus_rate},
        {"gamma_plus", c04_gamma_plus_rate}, {"gamma_zero", c05_gamma_zero}, {"omega", c06_omega_rate},
        {"quantum_dilog", c07_quantum_dilog}, {"saddle", c08_saddle},   {"topology", c09_topology},
        {"volume", c10_volume},         {"constants", c11_constants},     {"curvature", c12_curvature},
        {"kappa_trend", c13_kappa_trend},
    };
    std::vector<CheckResult> out;
    int id = 1;
    for (const auto& [name, fn] : checks) out.push_back(guarded(id++, name, fn));
    return out;
}

std::vector<CheckResult> run_selftest(bool quick) {
    std::vector<CheckResult> out;
    auto add = [&](int id, const std::string& name, const std::function<CheckResult()>& fn) {
        out.push_back(guarded(id, name, fn));
    };
    add(1, "kappa", c01_kappa);
    add(2, "triple", c02_triple);
    add(3, "gamma_minus", c03_gamma_minus_rate);
    add(4, "gamma_plus", c04_gamma_plus_rate);
    add(5, "gamma_zero", c05_gamma_zero);
    add(6, "omega", c06_omega_rate);
    if (!quick) add(7, "quantum_dilog", c07_quantum_dilog);
    add(8, "saddle", c08_saddle);
    add(9, "topology", c09_topology);
    add(10, "volume", c10_volume);
    if (!quick) add(12, "curvature", c12_curvature);
    add(13, "kappa_trend", c13_kappa_trend);
    add(101, "jones_symmetries", s_jones_symmetries);
    add(102, "dilog_identities", s_dilog_identities);
    add(103, "partition", s_partition);
    add(104, "sign_claims", s_sign_claims);
    return out;
}

}  // namespace fig8
