#include "fig8/topology.hpp"

#include <algorithm>
#include <cmath>

#include "fig8/errors.hpp"

namespace fig8 {

Matrix2C Matrix2C::operator*(const Matrix2C& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21,
            m21 * o.m12 + m22 * o.m22};
}

double max_abs_diff(const Matrix2C& a, const Matrix2C& b) {
    return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12), std::abs(a.m21 - b.m21),
                     std::abs(a.m22 - b.m22)});
}

cplx riley_d(cplx xi, int sign) {
    const cplx ch = std::cosh(xi);
    return 0.5 * (-2.0 * ch + 3.0 + double(sign) * principal_sqrt((2.0 * ch - 3.0) * (2.0 * ch + 1.0)));
}

RileyRep riley_rep(cplx xi, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("riley_rep: sign must be +1 or -1");
    const cplx e = std::exp(xi / 2.0), ei = std::exp(-xi / 2.0);
    const cplx d = riley_d(xi, sign);
    return {xi, sign, {e, 1.0, 0.0, ei}, {e, 0.0, d, ei}, d};
}

Matrix2C evaluate_word(const RileyRep& rep, const char* word) {
    Matrix2C m = Matrix2C::identity();
    for (const char* p = word; *p; ++p) {
        switch (*p) {
            case 'x': m = m * rep.rho_x; break;
            case 'X': m = m * rep.rho_x.adjugate(); break;
            case 'y': m = m * rep.rho_y; break;
            case 'Y': m = m * rep.rho_y.adjugate(); break;
            default: throw DomainError("evaluate_word: letters must be x, X, y, Y");
        }
    }
    return m;
}

double check_relation(const RileyRep& rep) {
    const Matrix2C lhs = evaluate_word(rep, "xYXyx");
    const Matrix2C rhs = evaluate_word(rep, "yxYXy");
    return std::min(max_abs_diff(lhs, rhs), max_abs_diff(lhs, -rhs));
}

Matrix2C longitude_matrix(const RileyRep& rep) { return evaluate_word(rep, "xYxyXXyxYX"); }

cplx longitude_top_right(cplx xi, int upper_sign) {
    const cplx ch = std::cosh(xi);
    return -double(upper_sign) * 2.0 * std::cosh(xi / 2.0) * principal_sqrt((2.0 * ch - 3.0) * (2.0 * ch + 1.0));
}

cplx cs_unreduced(const CuspParameter& cp) {
    return action_s(cp) - cp.xi * kPi * kI - 0.25 * cp.xi * v_of(cp.xi);
}

cplx cs_invariant(const CuspParameter& cp) {
    const bool real_ray = cp.b == 0.0 && cp.a >= kappa() - 1e-15;
    if (!cp.inside_xi && !real_ray) throw DomainError("cs_invariant: xi must lie in Xi or on [kappa, inf)");
    const cplx cs = cs_unreduced(cp);
    const double p2 = kPi * kPi;
    double re = cs.real() - p2 * std::round(cs.real() / p2);
    if (re <= -0.5 * p2) re += p2;
    return {re, cs.imag()};
}

}  // namespace fig8
