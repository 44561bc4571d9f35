#pragma once

#include <string>
#include <vector>

#include "fig8/figure_eight.hpp"
#include "fig8/quantum_dilog.hpp"
#include "fig8/region_atlas.hpp"

namespace fig8 {

struct AsymptoticPrediction {
    RegionLabel regime;
    LogComplex leading;
    cplx growth_rate;     // S(xi)/xi
    cplx torsion_factor;  // T(xi)
    // sqrt(pi)/(2 sinh(xi/2)) T^{1/2} (N/xi)^{1/2}, with the branch fixed as
    // sqrt(2 pi N) / (2 sinh(xi/2) sqrt(xi w)), w = sqrt((2cosh xi+1)(2cosh xi-3)).
    cplx prefactor;
    cplx alexander_limit;  // 1/Delta(e^xi)
    bool conjectural = false;
};

// Leading-order prediction for J_N(e^{xi/N}) by regime. Throws
// DegenerateSaddleError at kappa-type points (use known_case_predict) and
// DomainError outside Xi.
AsymptoticPrediction predict(const CuspParameter& cp, int n, double zero_tol = 1e-9);

struct KnownCaseParams {
    int p = 1;         // cases 1-3
    double u = 0;      // cases 1, 3: real shift
    cplx xi;           // cases 4, 6
    cplx u_complex;    // case 8
};

// Classical asymptotic formulas, cases 1..8. Case 8 returns exp(N S+(u)/xi),
// the growth rate only.
LogComplex known_case_predict(int case_id, const KnownCaseParams& params, int n);

enum class StudyRoute { Direct, Potential };

struct ConvergenceReport {
    RegionLabel regime;
    bool conjectural = false;
    std::vector<int> n_values;
    std::vector<LogComplex> exact;
    std::vector<LogComplex> predicted;
    std::vector<double> errors;
    double fitted_order = 0;
};

// Gamma-minus / Omega: err = |J_N - 1/Delta|; Gamma-plus: |J_N/pred - 1|;
// Gamma-zero: |J_N - pred| with the two-term prediction.
ConvergenceReport convergence_study(const CuspParameter& cp, const std::vector<int>& n_values,
                                    StudyRoute route = StudyRoute::Direct, double zero_tol = 1e-9,
                                    const QuadratureSpec& quad = {});

// Least-squares slope of log(err) against log(N).
double fit_order(const std::vector<int>& n_values, const std::vector<double>& errors);

struct SumIntegralResult {
    double residual;
    double scale;  // |J_N| for comparison
    bool normalized;  // true when divided by |e^{N f_N(sigma)}|
};

// Midpoint sum (1/N) sum exp(N f_N((2k+1)/2N)) against the integral of
// exp(N f_N) over the same real segment: [0, 1-delta1] when Re F(sigma) > 0
// (normalized by e^{N f_N(sigma)}), otherwise [-delta0, 1-delta1].
// DomainError when Re F at an endpoint is not below Re F(sigma), resp. 0.
SumIntegralResult sum_vs_integral_check(const CuspParameter& cp, int n, double delta1,
                                        const QuadratureSpec& quad = {}, double delta0 = 0.05);

struct SaddleReport {
    cplx f_prime_at_sigma;
    cplx fd_second_derivative;
    cplx hessian;  // closed form
    bool pass = false;
};

SaddleReport saddle_check(const CuspParameter& cp, double h = 5e-4);

}  // namespace fig8
