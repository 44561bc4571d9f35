#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fig8/figure_eight.hpp"

namespace fig8 {

enum class RegionLabel {
    GammaPlus,
    GammaZero,
    GammaMinus,
    GammaTildePlus,
    GammaTildeZero,
    GammaTildeMinus,
    OmegaCapXi,
    OmegaBoundary,
    OutsideXi,
};

std::string to_string(RegionLabel label);
// Gamma-tilde labels: the asymptotic formula there is conjectural.
bool is_conjectural(RegionLabel label);

struct RegionDiagnostics {
    bool in_xi = false;
    double cosh_a_minus_cos_b = 0;
    double tech_condition = 0;  // a tanh c - b tan d
    double re_s_over_xi = 0;
};

struct Classification {
    RegionLabel label;
    RegionDiagnostics diagnostics;
};

Classification classify(cplx xi, double zero_tol = 1e-9);

struct HvSigns {
    int h_sign;  // sign(|cosh(xi z) - cosh xi| - 1/2)
    int v_sign;  // sign(Im(cosh(xi z) - cosh xi))
};

// Requires -pi < Im(xi z) <= pi. |values| <= tol count as zero.
HvSigns hv_membership(cplx z, const CuspParameter& cp, double tol = 1e-12);

// chi(t) + t i for t uniform on [b, d], chi(Y) = arsinh(beta / sin Y).
std::vector<cplx> chi_curve(const CuspParameter& cp, int samples);
double chi(double y, double beta);

// Phi(X, Y) = (alpha - cosh X cos Y)^2 + (beta - sinh X sin Y)^2
double phi_landscape(double alpha, double beta, double x, double y);
std::pair<double, double> phi_landscape_gradient(double alpha, double beta, double x, double y);

struct CriticalPoint {
    double x, y, value;
};

struct PhiCriticalPoints {
    CriticalPoint origin, plus, minus;
};

PhiCriticalPoints phi_critical_points(double alpha, double beta);

// alpha A(A^2+B^2-1) + beta B(A^2+B^2+1) - A^2 + B^2 + 1,
// A = alpha + cos(s)/2, B = beta + sin(s)/2.
double curvature_lambda(double alpha, double beta, double s);

// Bisection root of a -> Re(S(a+bi)/(a+bi)) inside the bracket.
double gamma_zero_trace(double b, std::pair<double, double> bracket, double tol = 1e-12);

struct OracleItem {
    std::string name;
    double computed;
    double reference;  // NaN for sign checks
    double tol;
    bool pass;
};

// Reference constants for Q, k and the degree-7 polynomial, recomputed, plus the sign
// claims for the auxiliary polynomials.
std::vector<OracleItem> appendix_numeric_oracles();

// Q(b) = kappa Re S(kappa+bi) + b Im S(kappa+bi) and its b-derivatives.
double q_of_b(double b);
double q_prime(double b);
double q_second(double b);

}  // namespace fig8
