#pragma once

#include <stdexcept>
#include <string>

namespace voidsurf {

// Constitutive coefficients violate a hard requirement (construction
// invariant, wave-propagation condition, degenerate conversion, ...).
class MaterialError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The secular determinant shows no sign change on the admissible
// speed interval; the message carries the determinant at both ends.
class NoRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical procedure could not deliver a trustworthy result
// (quadrature tolerance not reached, defective spectrum, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace voidsurf
