#ifndef BESSELPOLY_SHIFT_PRODUCT_HPP
#define BESSELPOLY_SHIFT_PRODUCT_HPP

#include "besselpoly/errors.hpp"
#include "besselpoly/rational.hpp"

namespace besselpoly::detail {

// f(x + m)/f(x) for a function with f(x + 1) = coef(x) f(x).
template <class F>
Rational shift_product(F coef, const Rational& x, int m)
{
    Rational out = 1;
    if (m >= 0) {
        for (int t = 0; t < m; ++t)
            out *= coef(Rational(x + t));
        return out;
    }
    for (int t = 1; t <= -m; ++t) {
        Rational f = coef(Rational(x - t));
        if (f == 0)
            throw PoleError("vanishing factor in a negative shift");
        out /= f;
    }
    return out;
}

} // namespace besselpoly::detail

#endif
