#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "fig8/special_functions.hpp"

namespace fig8 {

// z = exp(log_mag + i arg), arg in (-pi, pi]. Exact zero has log_mag = -inf.
struct LogComplex {
    double log_mag = -std::numeric_limits<double>::infinity();
    double arg = 0.0;

    static LogComplex zero() { return {}; }
    static LogComplex one() { return {0.0, 0.0}; }
    static LogComplex from_complex(cplx z);
    // exp(w) without forming it.
    static LogComplex from_exponent(cplx w);

    bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }
    // Overflows to inf once log_mag > ~709.
    cplx to_complex() const;
    // log(z) with the stored argument as imaginary part.
    cplx log() const { return {log_mag, arg}; }

    LogComplex operator*(const LogComplex& o) const;
    LogComplex operator/(const LogComplex& o) const;
};

double wrap_angle(double theta);

// Sum of exp-scale terms: factor out the largest log_mag, add the
// remainders in plain complex arithmetic, re-log.
class LogSum {
public:
    void add(const LogComplex& term) { terms_.push_back(term); }
    void add_exponent(cplx w) { terms_.push_back(LogComplex::from_exponent(w)); }
    LogComplex total() const;
    // Largest log_mag among the terms; -inf when empty.
    double max_log() const;
    std::size_t size() const { return terms_.size(); }

private:
    std::vector<LogComplex> terms_;
};

}  // namespace fig8
