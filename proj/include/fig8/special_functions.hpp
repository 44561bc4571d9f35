#pragma once

#include <complex>
#include <numbers>

namespace fig8 {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

// Branch cuts: log and sqrt on (-inf, 0); Li2 on (1, inf).
// On the negative axis log x = log|x| + pi i and sqrt x = i sqrt|x|.
// On (1, inf) Li2 takes Im Li2(x) = -pi log x.

cplx principal_log(cplx z);
cplx principal_sqrt(cplx z);

// Li2(z) = -int_0^z log(1-t)/t dt.
cplx dilog(cplx z);

// e^w - 1 without cancellation for small |w|.
cplx expm1c(cplx w);

// Holomorphic continuations of log(1 - e^{2 pi i z}) and Li2(e^{2 pi i z}),
// defined off (-inf, 0] and [1, inf).
cplx l1(cplx z);
cplx l2(cplx z);

// |(l2(z+h) - l2(z-h))/(2h) + 2 pi i l1(z)|
double l2_derivative_check(cplx z, double h);

}  // namespace fig8
