#include "besselpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace besselpoly {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && body.front() == '-')
        body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (text.front() == '-')
        n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

Rational pow(const Rational& value, int k)
{
    if (k < 0) {
        if (value == 0)
            throw std::domain_error("negative power of zero");
        return Rational(1) / pow(value, -k);
    }
    Rational result(1);
    Rational base = value;
    while (k > 0) {
        if (k & 1)
            result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

Rational rising(const Rational& x, int m)
{
    Rational r(1);
    for (int t = 0; t < m; ++t)
        r *= x + t;
    return r;
}

Rational falling(const Rational& x, int m)
{
    Rational r(1);
    for (int t = 0; t < m; ++t)
        r *= x - t;
    return r;
}

bool is_integer(const Rational& value)
{
    return value.get_den() == 1;
}

} // namespace besselpoly
