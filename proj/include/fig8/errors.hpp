#pragma once

#include <stdexcept>
#include <string>

namespace fig8 {

// Argument outside the region where a formula is defined.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// cosh(xi) hits 3/2 or -1/2, where the torsion radical vanishes.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& what) : DomainError(what) {}
};

// phi(xi) = 0, so the saddle is not quadratic.
class DegenerateSaddleError : public DomainError {
public:
    explicit DegenerateSaddleError(const std::string& what) : DomainError(what) {}
};

class BracketError : public DomainError {
public:
    explicit BracketError(const std::string& what) : DomainError(what) {}
};

// Quadrature or precision escalation did not converge.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fig8
