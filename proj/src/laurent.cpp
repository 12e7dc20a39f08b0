#include "laurent.hpp"

#include "besselpoly/errors.hpp"

#include <algorithm>

namespace besselpoly::detail {

Laurent::Laurent(const Rational& constant)
{
    if (constant == 0) {
        exact_zero_ = true;
        return;
    }
    c_.assign(default_precision, Rational(0));
    c_[0] = constant;
}

Laurent Laurent::affine(const Rational& c0, const Rational& c1)
{
    Laurent out;
    if (c0 == 0 && c1 == 0)
        return out;
    out.exact_zero_ = false;
    out.c_.assign(default_precision, Rational(0));
    if (c0 != 0) {
        out.c_[0] = c0;
        out.c_[1] = c1;
    } else {
        out.val_ = 1;
        out.c_[0] = c1;
    }
    return out;
}

void Laurent::normalize()
{
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0)
        ++lead;
    val_ += static_cast<int>(lead);
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
}

Laurent Laurent::operator-() const
{
    Laurent out = *this;
    for (auto& x : out.c_)
        x = -x;
    return out;
}

Laurent operator+(const Laurent& x, const Laurent& y)
{
    if (x.exact_zero_)
        return y;
    if (y.exact_zero_)
        return x;
    const int lo = std::min(x.val_, y.val_);
    const int hi = std::min(x.val_ + static_cast<int>(x.c_.size()), y.val_ + static_cast<int>(y.c_.size()));
    Laurent out;
    out.exact_zero_ = false;
    out.val_ = lo;
    out.c_.assign(static_cast<std::size_t>(std::max(hi - lo, 0)), Rational(0));
    for (int k = lo; k < hi; ++k) {
        auto slot = static_cast<std::size_t>(k - lo);
        if (k >= x.val_)
            out.c_[slot] += x.c_[static_cast<std::size_t>(k - x.val_)];
        if (k >= y.val_)
            out.c_[slot] += y.c_[static_cast<std::size_t>(k - y.val_)];
    }
    if (hi <= lo)
        out.val_ = hi;
    out.normalize();
    return out;
}

Laurent operator*(const Laurent& x, const Laurent& y)
{
    if (x.exact_zero_ || y.exact_zero_)
        return Laurent();
    Laurent out;
    out.exact_zero_ = false;
    out.val_ = x.val_ + y.val_;
    const std::size_t len = std::min(x.c_.size(), y.c_.size());
    out.c_.assign(len, Rational(0));
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; i + j < len; ++j)
            out.c_[i + j] += x.c_[i] * y.c_[j];
    return out;
}

Laurent Laurent::inverse() const
{
    if (exact_zero_)
        throw PoleError("division by zero");
    if (c_.empty())
        throw PoleError("division by a quantity of undetermined order");
    Laurent out;
    out.exact_zero_ = false;
    out.val_ = -val_;
    const std::size_t len = c_.size();
    out.c_.assign(len, Rational(0));
    out.c_[0] = 1 / c_[0];
    for (std::size_t k = 1; k < len; ++k) {
        Rational s = 0;
        for (std::size_t j = 1; j <= k; ++j)
            s += c_[j] * out.c_[k - j];
        out.c_[k] = -s / c_[0];
    }
    return out;
}

Laurent operator/(const Laurent& x, const Laurent& y)
{
    return x * y.inverse();
}

Rational Laurent::at_zero() const
{
    if (exact_zero_)
        return 0;
    if (val_ > 0)
        return 0;
    if (c_.empty())
        throw PoleError("cancellation exhausted the series precision");
    if (val_ < 0)
        throw PoleError("pole in the limit");
    return c_[0];
}

} // namespace besselpoly::detail
