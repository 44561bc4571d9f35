#pragma once

#include "fig8/figure_eight.hpp"

namespace fig8 {

struct Matrix2C {
    cplx m11, m12, m21, m22;

    static Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
    Matrix2C operator*(const Matrix2C& o) const;
    Matrix2C operator-() const { return {-m11, -m12, -m21, -m22}; }
    cplx det() const { return m11 * m22 - m12 * m21; }
    cplx trace() const { return m11 + m22; }
    // Adjugate; equals the inverse for determinant one.
    Matrix2C adjugate() const { return {m22, -m12, -m21, m11}; }
};

double max_abs_diff(const Matrix2C& a, const Matrix2C& b);

struct RileyRep {
    cplx xi;
    int sign;  // +1 or -1
    Matrix2C rho_x;
    Matrix2C rho_y;
    cplx d_val;
};

// d(xi) = (3 - 2cosh xi +- sqrt((2cosh xi - 3)(2cosh xi + 1)))/2
cplx riley_d(cplx xi, int sign);

// rho(x) = [[e^{xi/2}, 1], [0, e^{-xi/2}]],  rho(y) = [[e^{xi/2}, 0], [d, e^{-xi/2}]]
RileyRep riley_rep(cplx xi, int sign);

// Image of a word in x, y; uppercase letters are inverses ("xYXyx").
Matrix2C evaluate_word(const RileyRep& rep, const char* word);

// min over eps = +-1 of |rho(x y^-1 x^-1 y x) - eps rho(y x y^-1 x^-1 y)|_max
double check_relation(const RileyRep& rep);

// Image of the preferred longitude x y^-1 x y x^-2 y x y^-1 x^-1.
Matrix2C longitude_matrix(const RileyRep& rep);

// Closed-form top-right entry -+2 cosh(xi/2) sqrt((2cosh xi - 3)(2cosh xi + 1)),
// with the upper sign for `upper_sign` = +1.
cplx longitude_top_right(cplx xi, int upper_sign);

// S - xi pi i - xi v / 4 before reduction.
cplx cs_unreduced(const CuspParameter& cp);

// Real part reduced into (-pi^2/2, pi^2/2]. Defined on Xi and on real xi >= kappa.
cplx cs_invariant(const CuspParameter& cp);

}  // namespace fig8
