#include "fig8/asymptotics.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "fig8/errors.hpp"
#include "fig8/parallel.hpp"

namespace fig8 {

namespace {

bool is_gamma_region(RegionLabel l) {
    return l == RegionLabel::GammaPlus || l == RegionLabel::GammaZero || l == RegionLabel::GammaMinus;
}

enum class Shape { Exponential, TwoTerm, Constant };

Shape shape_of(RegionLabel l) {
    switch (l) {
        case RegionLabel::GammaPlus:
        case RegionLabel::GammaTildePlus: return Shape::Exponential;
        case RegionLabel::GammaZero:
        case RegionLabel::GammaTildeZero: return Shape::TwoTerm;
        default: return Shape::Constant;
    }
}

// sqrt(2 pi N) e^{N S/xi} / (2 sinh(xi/2) sqrt(xi w)) as a LogComplex.
LogComplex saddle_term(const CuspParameter& cp, cplx s_over_xi, int n, cplx* prefactor) {
    const cplx amp = std::sqrt(2.0 * kPi * n) / (2.0 * std::sinh(cp.xi / 2.0) * principal_sqrt(cp.xi * cp.radical));
    if (prefactor) *prefactor = amp;
    return LogComplex::from_complex(amp) * LogComplex::from_exponent(double(n) * s_over_xi);
}

}  // namespace

AsymptoticPrediction predict(const CuspParameter& cp, int n, double zero_tol) {
    if (n < 1) throw DomainError("predict: N must be positive");
    if (cp.torsion_pole || cp.phi == cplx{0.0, 0.0})
        throw DegenerateSaddleError("predict: degenerate saddle at this xi; use known_case_predict");
    const Classification cls = classify(cp.xi, zero_tol);
    if (cls.label == RegionLabel::OutsideXi) throw DomainError("predict: xi lies outside Xi");

    AsymptoticPrediction p;
    p.regime = cls.label;
    p.conjectural = is_conjectural(cls.label);
    p.growth_rate = action_s(cp) / cp.xi;
    p.torsion_factor = torsion(cp.xi);
    p.alexander_limit = 1.0 / alexander(std::exp(cp.xi));
    const LogComplex alex = LogComplex::from_complex(p.alexander_limit);
    const LogComplex saddle = saddle_term(cp, p.growth_rate, n, &p.prefactor);
    switch (shape_of(cls.label)) {
        case Shape::Exponential: p.leading = saddle; break;
        case Shape::TwoTerm: {
            LogSum s;
            s.add(saddle);
            s.add(alex);
            p.leading = s.total();
            break;
        }
        case Shape::Constant: p.leading = alex; break;
    }
    return p;
}

LogComplex known_case_predict(int case_id, const KnownCaseParams& prm, int n) {
    if (n < 1) throw DomainError("known_case_predict: N must be positive");
    const double k = kappa();
    const double dn = n;
    auto root_pi_t_n = [&](cplx xi, cplx t) {
        return principal_sqrt(t) * principal_sqrt(dn / xi);
    };
    auto cusp_real = [](double u) { return make_cusp(cplx{u, 0.0}); };
    switch (case_id) {
        case 1:
        case 3: {
            if (prm.p < 1) throw DomainError("known_case_predict: p must be a positive integer");
            const bool small = case_id == 1;
            if (small ? !(prm.u > 0.0 && prm.u < k) : !(prm.u > k))
                throw DomainError("known_case_predict: u outside the case hypothesis");
            const cplx xi{prm.u, 2.0 * kPi * prm.p};
            const CuspParameter cu = cusp_real(prm.u);
            const cplx s = small ? action_s_plus(cu) : action_s_minus(cu);
            const cplx root = small ? principal_sqrt(cplx{-kPi, 0.0}) : cplx{std::sqrt(kPi), 0.0};
            const cplx amp = root / (2.0 * std::sinh(prm.u / 2.0)) * root_pi_t_n(xi, torsion(xi));
            const LogComplex jp = colored_jones(prm.p, 4.0 * kPi * kPi * dn * prm.p / xi);
            return jp * LogComplex::from_complex(amp) * LogComplex::from_exponent(s / xi * dn);
        }
        case 2: {
            if (prm.p < 1) throw DomainError("known_case_predict: p must be a positive integer");
            const cplx xi{k, 2.0 * kPi * prm.p};
            const cplx s = action_s_minus(cusp_real(k));
            const double g13 = boost::math::tgamma(1.0 / 3.0);
            const cplx amp = g13 * std::exp(kI * kPi / 6.0) / std::cbrt(std::sqrt(3.0)) *
                             std::exp((2.0 / 3.0) * principal_log(dn / xi));
            const LogComplex jp = colored_jones(prm.p, 4.0 * kPi * kPi * dn * prm.p / xi);
            return jp * LogComplex::from_complex(amp) * LogComplex::from_exponent(s / xi * dn);
        }
        case 4: {
            const double a = prm.xi.real(), b = prm.xi.imag();
            if (!(std::cosh(a) - std::cos(b) < 0.5 && std::abs(b) < kPi / 3))
                throw DomainError("known_case_predict: case 4 needs xi in Omega");
            return LogComplex::from_complex(1.0 / alexander(std::exp(prm.xi)));
        }
        case 5: {
            const double g13 = boost::math::tgamma(1.0 / 3.0);
            return LogComplex::from_complex(g13 / std::pow(3.0, 2.0 / 3.0) * std::pow(dn / k, 2.0 / 3.0));
        }
        case 6: {
            const double x = prm.xi.real();
            if (!(prm.xi.imag() == 0.0 && x > k)) throw DomainError("known_case_predict: case 6 needs real xi > kappa");
            const CuspParameter cp = cusp_real(x);
            const cplx amp = std::sqrt(kPi) / (2.0 * std::sinh(x / 2.0)) * root_pi_t_n(x, torsion(x));
            return LogComplex::from_complex(amp) * LogComplex::from_exponent(action_s(cp) / x * dn);
        }
        case 7: {
            const cplx tpi = 2.0 * kPi * kI;
            const cplx s = action_s_plus(make_cusp(0.0));
            const cplx amp = -2.0 * std::pow(kPi, 1.5) * principal_sqrt(torsion(0.0)) *
                             std::exp(1.5 * principal_log(dn / tpi));
            return LogComplex::from_complex(amp) * LogComplex::from_exponent(dn / tpi * s);
        }
        case 8: {
            const cplx u = prm.u_complex;
            if (u.real() == 0.0) throw DomainError("known_case_predict: case 8 needs u off the imaginary axis");
            const cplx xi = 2.0 * kPi * kI + u;
            return LogComplex::from_exponent(action_s_plus(make_cusp(u)) / xi * dn);
        }
        default: throw DomainError("known_case_predict: case id must be 1..8");
    }
}

double fit_order(const std::vector<int>& n_values, const std::vector<double>& errors) {
    if (n_values.size() != errors.size() || n_values.size() < 2)
        throw DomainError("fit_order: need matching lists with at least two entries");
    const std::size_t m = n_values.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::log(double(n_values[i])), y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ConvergenceReport convergence_study(const CuspParameter& cp, const std::vector<int>& n_values, StudyRoute route,
                                    double zero_tol, const QuadratureSpec& quad) {
    if (n_values.size() < 3) throw DomainError("convergence_study: need at least three N values");
    for (std::size_t i = 1; i < n_values.size(); ++i)
        if (n_values[i] <= n_values[i - 1]) throw DomainError("convergence_study: N values must ascend");

    ConvergenceReport rep;
    const std::size_t m = n_values.size();
    rep.n_values = n_values;
    rep.exact.resize(m);
    rep.predicted.resize(m);
    rep.errors.resize(m);
    std::vector<AsymptoticPrediction> preds(m);
    parallel_for(m, [&](std::size_t i) {
        const int n = n_values[i];
        preds[i] = predict(cp, n, zero_tol);
        rep.exact[i] = route == StudyRoute::Direct ? colored_jones(n, cp.xi) : jones_via_potential(n, cp, quad);
    });
    rep.regime = preds[0].regime;
    rep.conjectural = preds[0].conjectural;
    for (std::size_t i = 0; i < m; ++i) {
        rep.predicted[i] = preds[i].leading;
        if (shape_of(rep.regime) == Shape::Exponential) {
            rep.errors[i] = std::abs((rep.exact[i] / rep.predicted[i]).to_complex() - 1.0);
        } else {
            rep.errors[i] = std::abs(rep.exact[i].to_complex() - rep.predicted[i].to_complex());
        }
    }
    rep.fitted_order = fit_order(rep.n_values, rep.errors);
    return rep;
}

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

// Nodes and weights of the composite rule on [lo, hi] with `panels` pieces.
void composite_nodes(double lo, double hi, long panels, std::vector<double>& x, std::vector<double>& w) {
    x.clear();
    w.clear();
    const auto& ax = Rule::abscissa();
    const auto& aw = Rule::weights();
    const double h = (hi - lo) / double(panels);
    for (long p = 0; p < panels; ++p) {
        const double mid = lo + (double(p) + 0.5) * h, half = 0.5 * h;
        for (std::size_t j = 0; j < ax.size(); ++j) {
            if (ax[j] == 0.0) {
                x.push_back(mid);
                w.push_back(half * aw[j]);
                continue;
            }
            x.push_back(mid - half * ax[j]);
            w.push_back(half * aw[j]);
            x.push_back(mid + half * ax[j]);
            w.push_back(half * aw[j]);
        }
    }
}

}  // namespace

SumIntegralResult sum_vs_integral_check(const CuspParameter& cp, int n, double delta1, const QuadratureSpec& quad,
                                        double delta0) {
    if (n < 2 || n > 200) throw DomainError("sum_vs_integral_check: N must lie in [2, 200]");
    if (!(delta1 > 0.0 && delta1 < 0.1)) throw DomainError("sum_vs_integral_check: delta1 must lie in (0, 0.1)");
    if (!(delta0 > 0.0 && delta0 < 0.5)) throw DomainError("sum_vs_integral_check: delta0 must lie in (0, 0.5)");
    const Classification cls = classify(cp.xi);
    if (!is_gamma_region(cls.label)) throw DomainError("sum_vs_integral_check: xi must lie in Gamma");

    const bool positive = cls.label == RegionLabel::GammaPlus;
    const double lo = positive ? 0.0 : -delta0;
    const double hi = 1.0 - delta1;
    // Both endpoints must sit strictly below the reference level, else the
    // endpoint terms do not decay.
    const double level = positive ? big_f(cp.sigma, cp).real() : 0.0;
    if (!(big_f(lo, cp).real() < level && big_f(hi, cp).real() < level))
        throw DomainError("sum_vs_integral_check: Re F at an endpoint is not below the reference level; adjust delta");

    const PotentialContext ctx = make_context(cp, n);
    const double dn = n;
    const cplx shift = positive ? dn * f_n(cp.sigma, ctx, quad) : cplx{0.0, 0.0};
    auto integrand = [&](double x) { return std::exp(dn * f_n(cplx{x, 0.0}, ctx, quad) - shift); };

    // Midpoints (2k+1)/(2N) inside [lo, hi].
    const long kmin = long(std::ceil((lo * 2.0 * n - 1.0) / 2.0));
    const long kmax = long(std::floor((hi * 2.0 * n - 1.0) / 2.0));
    std::vector<cplx> terms(std::size_t(kmax - kmin + 1));
    parallel_for(terms.size(), [&](std::size_t i) {
        terms[i] = integrand(double(2 * (kmin + long(i)) + 1) / (2.0 * n));
    });
    cplx sum{0.0, 0.0};
    double scale = 0.0;
    for (const cplx& t : terms) {
        sum += t;
        scale = std::max(scale, std::abs(t));
    }
    sum /= dn;

    // Composite Gauss-Legendre, doubling the panel count until stable.
    long panels = std::max(4L, long(n) / 8);
    std::vector<double> x, w;
    cplx prev{NAN, NAN};
    for (;;) {
        composite_nodes(lo, hi, panels, x, w);
        std::vector<cplx> vals(x.size());
        parallel_for(x.size(), [&](std::size_t i) { vals[i] = integrand(x[i]); });
        cplx integral{0.0, 0.0};
        for (std::size_t i = 0; i < x.size(); ++i) integral += w[i] * vals[i];
        if (std::abs(integral - prev) <= quad.tol * std::max(1.0, scale)) {
            SumIntegralResult r;
            r.residual = std::abs(sum - integral);
            r.scale = std::exp(colored_jones(n, cp.xi).log_mag);
            r.normalized = positive;
            return r;
        }
        prev = integral;
        panels *= 2;
        if (panels > quad.max_panels) throw NumericalFailure("sum_vs_integral_check: integral did not converge");
    }
}

SaddleReport saddle_check(const CuspParameter& cp, double h) {
    SaddleReport r;
    r.hessian = saddle_hessian(cp);
    const cplx s = cp.sigma;
    r.f_prime_at_sigma = big_f_prime(s, cp);
    // Five-point stencil; the three-point one leaves O(h^2) errors above 1e-6 for a > 2.
    r.fd_second_derivative = (-big_f(s + 2.0 * h, cp) + 16.0 * big_f(s + h, cp) - 30.0 * big_f(s, cp) +
                              16.0 * big_f(s - h, cp) - big_f(s - 2.0 * h, cp)) /
                             (12.0 * h * h);
    r.pass = std::abs(r.f_prime_at_sigma) < 1e-10 && std::abs(r.fd_second_derivative - r.hessian) < 1e-6;
    return r;
}

}  // namespace fig8
