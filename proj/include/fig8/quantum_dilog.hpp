#pragma once

#include "fig8/figure_eight.hpp"
#include "fig8/log_complex.hpp"

namespace fig8 {

struct QuadratureSpec {
    double tol = 1e-10;          // absolute
    long max_panels = 1L << 20;  // across all pieces of the path
    double tail_safety = 10.0;   // >= 1
};

struct PotentialContext {
    CuspParameter cp;
    cplx gamma;  // xi / (2 pi i)
    int n = 1;
};

// Throws DomainError unless Re gamma > 0 and n >= 1.
PotentialContext make_context(const CuspParameter& cp, int n);

// -Re gamma/2N < Re z < 1 + Re gamma/2N, where the defining integral converges.
bool in_validity_strip(cplx z, const PotentialContext& ctx);
// The extended region Sigma (strip of width 3 minus two triangles), shrunk by 1e-9.
bool in_sigma_domain(cplx z, const PotentialContext& ctx);
// The region Theta on which f_N is defined, shrunk by 1e-9.
bool in_theta_domain(cplx z, const PotentialContext& ctx);

// T_N(z) = 1/4 int_R e^{(2z-1)t} / (t sinh t sinh(gamma t/N)) dt, R the real
// axis detouring over the upper unit semicircle. With allow_extended, points
// of Sigma outside the strip are reached through the functional equation;
// such values are determined modulo 2 pi i.
cplx t_n(cplx z, const PotentialContext& ctx, const QuadratureSpec& quad = {},
         bool allow_extended = false);
// T_N'(z) = 1/2 int_R e^{(2z-1)t} / (sinh t sinh(gamma t/N)) dt.
cplx t_n_prime(cplx z, const PotentialContext& ctx, const QuadratureSpec& quad = {});

// f_N(z) = T_N(gamma(1-z))/N - T_N(gamma(1+z))/N - xi z + 2 pi i z.
cplx f_n(cplx z, const PotentialContext& ctx, const QuadratureSpec& quad = {});

// F(z) = L2(gamma(1-z))/xi - L2(gamma(1+z))/xi - xi z + 2 pi i z.
cplx big_f(cplx z, const CuspParameter& cp);
// Li2 form, valid when |Re(xi z)| < a.
cplx big_f_dilog_form(cplx z, const CuspParameter& cp);
// Piecewise closed form of F' by the size of Re(xi z).
cplx big_f_prime(cplx z, const CuspParameter& cp);

// G(Z) = F(Z/xi).
cplx big_g(cplx zz, const CuspParameter& cp);
cplx big_g_prime(cplx zz, const CuspParameter& cp);

// J_N = 1/(2 sinh(xi/2)) sum_{k<N} exp(N f_N((2k+1)/(2N))).
LogComplex jones_via_potential(int n, const CuspParameter& cp, const QuadratureSpec& quad = {});

}  // namespace fig8
