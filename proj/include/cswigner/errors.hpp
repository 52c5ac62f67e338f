#pragma once

#include <stdexcept>
#include <string>

namespace cswigner {

// Raised when an evaluation that must be real carries an imaginary part
// above tolerance.  This always indicates a bug in the operator chain or
// a severely ill-conditioned input, never a physical result.
class NumericResidueError : public std::runtime_error {
public:
    NumericResidueError(const std::string& what, double residue)
        : std::runtime_error(what), residue_(residue) {}
    double residue() const { return residue_; }

private:
    double residue_;
};

// Adaptive quadrature exhausted its subdivision depth with the error
// estimate still above 10x the requested tolerance.
class NoConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation requested at a point where the formula is singular
// (z ~ 0 in the radial ODE, r ~ 0 in the asymptotic form).
class SingularPointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Inverse-square coupling below the admissible bound g >= -hbar^2/(8 mu).
class CouplingOutOfRangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Negative sector root requested where it is not admissible (g != 0).
class SectorInvalidError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace cswigner
