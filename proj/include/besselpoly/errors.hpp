#ifndef BESSELPOLY_ERRORS_HPP
#define BESSELPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace besselpoly {

// Exact division left a non-zero remainder.
class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A polynomial expected to be symmetric has inconsistent orbit coefficients.
class NotSymmetric : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two eigenvalues that must differ coincide (triangular solve impossible).
class DegenerateEigenvalue : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coefficient function was evaluated at a genuine pole.
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A moment integral diverges for the requested exponent.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operator image was expected to be a scalar multiple of its input.
class NotProportional : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A moment recurrence has a vanishing leading coefficient.
class DegenerateRecurrence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace besselpoly

#endif
