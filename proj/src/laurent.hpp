#ifndef BESSELPOLY_LAURENT_HPP
#define BESSELPOLY_LAURENT_HPP

#include "besselpoly/rational.hpp"

#include <vector>

namespace besselpoly::detail {

/// Truncated Laurent series t^val (c_0 + c_1 t + ...) in a perturbation
/// parameter t. Coefficients beyond c.size() are unknown; an empty c means
/// the value is O(t^val). Exact zeros are tracked separately so that they
/// never consume precision.
class Laurent {
public:
    static constexpr int default_precision = 16;

    Laurent() : exact_zero_(true) {}
    Laurent(const Rational& constant);
    /// c0 + c1 t.
    static Laurent affine(const Rational& c0, const Rational& c1);

    bool exact_zero() const { return exact_zero_; }

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& x, const Laurent& y);
    friend Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }
    friend Laurent operator*(const Laurent& x, const Laurent& y);
    friend Laurent operator/(const Laurent& x, const Laurent& y);

    /// Value at t = 0; PoleError if the series has a pole there or if all
    /// known coefficients cancelled without settling the sign of val.
    Rational at_zero() const;

private:
    Laurent inverse() const;
    void normalize();

    bool exact_zero_ = false;
    int val_ = 0;
    std::vector<Rational> c_;
};

} // namespace besselpoly::detail

#endif
