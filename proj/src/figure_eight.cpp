#include "fig8/figure_eight.hpp"

#include <cmath>

#include "fig8/errors.hpp"

namespace fig8 {

namespace {
constexpr double kPoleTol = 1e-12;

cplx radical_product(cplx ch) { return (2.0 * ch - 3.0) * (2.0 * ch + 1.0); }
}  // namespace

double kappa() { return std::acosh(1.5); }

bool in_xi(cplx xi) {
    const double a = xi.real(), b = xi.imag();
    return a > 0.0 && b > 0.0 && b < kPi / 2 && std::cosh(a) * std::cos(b) > 0.5;
}

cplx phi_of(cplx z) {
    const cplx ch = std::cosh(z);
    return principal_log(ch - 0.5 + 0.5 * principal_sqrt(radical_product(ch)));
}

CuspParameter make_cusp(cplx xi) {
    CuspParameter cp;
    cp.xi = xi;
    cp.a = xi.real();
    cp.b = xi.imag();
    cp.alpha = std::cosh(cp.a) * std::cos(cp.b);
    cp.beta = std::sinh(cp.a) * std::sin(cp.b);
    const cplx ch = std::cosh(xi);
    cp.torsion_pole = std::abs(2.0 * ch - 3.0) < kPoleTol || std::abs(2.0 * ch + 1.0) < kPoleTol;
    // Snap the radical at the branch points so that phi(kappa) = 0 exactly.
    cp.radical = cp.torsion_pole ? cplx{0.0, 0.0} : principal_sqrt(radical_product(ch));
    cp.phi = principal_log(ch - 0.5 + 0.5 * cp.radical);
    if (std::abs(cp.phi) < 1e-15) cp.phi = {0.0, 0.0};
    cp.sigma = xi == cplx{0.0, 0.0} ? cplx{0.0, 0.0} : cp.phi / xi;
    cp.inside_xi = in_xi(xi);
    return cp;
}

cplx alexander(cplx t) {
    if (t == cplx{0.0, 0.0}) throw DomainError("alexander: t = 0");
    return -t + 3.0 - 1.0 / t;
}

cplx action_s(const CuspParameter& cp) {
    return dilog(std::exp(-cp.xi - cp.phi)) - dilog(std::exp(-cp.xi + cp.phi)) + cp.xi * cp.phi;
}

cplx action_s_minus(const CuspParameter& cp) { return action_s(cp) + 2.0 * cp.xi * kPi * kI; }

cplx action_s_plus(const CuspParameter& cp) { return -action_s(cp) + 2.0 * cp.xi * kPi * kI; }

cplx ds_dxi(const CuspParameter& cp) { return principal_log(2.0 * std::cosh(cp.xi + cp.phi) - 2.0); }

cplx torsion(cplx xi) {
    const cplx ch = std::cosh(xi);
    if (std::abs(2.0 * ch - 3.0) < kPoleTol || std::abs(2.0 * ch + 1.0) < kPoleTol)
        throw PoleError("torsion: (2cosh xi + 1)(2cosh xi - 3) vanishes");
    return 2.0 / principal_sqrt((2.0 * ch + 1.0) * (2.0 * ch - 3.0));
}

cplx v_of(cplx xi) { return 2.0 * ds_dxi(make_cusp(xi)) - 2.0 * kPi * kI; }
cplx v_plus(cplx xi) { return -v_of(xi); }
cplx v_minus(cplx xi) { return v_of(xi) + 4.0 * kPi * kI; }

cplx longitude_eigenvalue(cplx xi) {
    const cplx ch = std::cosh(xi);
    return std::cosh(2.0 * xi) - ch - 1.0 - std::sinh(xi) * principal_sqrt(radical_product(ch));
}

cplx saddle_hessian(const CuspParameter& cp) {
    if (cp.phi == cplx{0.0, 0.0} || cp.torsion_pole)
        throw DegenerateSaddleError("saddle_hessian: phi(xi) = 0, the saddle is degenerate");
    return -cp.xi * cp.radical;
}

}  // namespace fig8
