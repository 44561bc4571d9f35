#pragma once

#include "fig8/log_complex.hpp"
#include "fig8/special_functions.hpp"

namespace fig8 {

// kappa = arcosh(3/2), the real point where phi vanishes.
double kappa();

// Xi = {a > 0, 0 < b < pi/2, cosh a cos b > 1/2}.
bool in_xi(cplx xi);

struct CuspParameter {
    cplx xi;
    double a = 0, b = 0;
    double alpha = 0;  // cosh a cos b
    double beta = 0;   // sinh a sin b
    cplx phi;          // cosh phi = cosh xi - 1/2
    cplx sigma;        // phi / xi, zero when xi = 0
    cplx radical;      // principal sqrt((2 cosh xi - 3)(2 cosh xi + 1))
    bool torsion_pole = false;  // cosh xi in {3/2, -1/2}
    bool inside_xi = false;

    double c() const { return phi.real(); }
    double d() const { return phi.imag(); }
};

// Never throws. Flags describe the special loci; phi is still computed.
CuspParameter make_cusp(cplx xi);

// phi(z) = log(cosh z - 1/2 + sqrt((2cosh z - 3)(2cosh z + 1))/2).
cplx phi_of(cplx z);

struct JonesEvaluation {
    LogComplex value;
    int precision_bits = 53;       // 53 when the double pass sufficed
    double cancellation_nats = 0;  // largest term log minus log|J_N|
};

// J_N(e^{xi/N}) via the cyclotomic sum, k ascending.
LogComplex colored_jones(int n, cplx xi);
JonesEvaluation colored_jones_detail(int n, cplx xi);

// Normalized Alexander polynomial -t + 3 - 1/t.
cplx alexander(cplx t);

// S = Li2(e^{-xi-phi}) - Li2(e^{-xi+phi}) + xi phi.
cplx action_s(const CuspParameter& cp);
cplx action_s_minus(const CuspParameter& cp);  // S + 2 xi pi i
cplx action_s_plus(const CuspParameter& cp);   // -S + 2 xi pi i

// dS/dxi = log(2 cosh(xi + phi) - 2).
cplx ds_dxi(const CuspParameter& cp);

// 2 / sqrt((2cosh xi + 1)(2cosh xi - 3)); throws PoleError at the zeros.
cplx torsion(cplx xi);

// v = 2 dS/dxi - 2 pi i,  v+ = -v,  v- = v + 4 pi i.
cplx v_of(cplx xi);
cplx v_plus(cplx xi);
cplx v_minus(cplx xi);

// cosh 2xi - cosh xi - 1 - sinh xi sqrt((2cosh xi - 3)(2cosh xi + 1)).
cplx longitude_eigenvalue(cplx xi);

// F''(sigma) = -xi w, w^2 = (2cosh xi + 1)(2cosh xi - 3), arg w in [0, pi/2).
cplx saddle_hessian(const CuspParameter& cp);

}  // namespace fig8
