#include "besselpoly/differential.hpp"

namespace besselpoly {

namespace {

MultiPoly univariate(const UniPoly& p, int n, int i)
{
    MultiPoly out(n);
    Exponent e(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0)
            continue;
        e[static_cast<std::size_t>(i)] = static_cast<int>(k);
        out.add_term(e, p[k]);
    }
    return out;
}

bool is_zero(const UniPoly& p)
{
    for (const auto& c : p)
        if (c != 0)
            return false;
    return true;
}

} // namespace

MultiPoly apply_direct(const SecondOrderOperator& op, const MultiPoly& f)
{
    const int n = f.nvars();
    MultiPoly out(n);
    std::vector<MultiPoly> grad;
    grad.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        grad.push_back(f.derivative(i));
    for (int i = 0; i < n; ++i) {
        const auto& g = grad[static_cast<std::size_t>(i)];
        if (!is_zero(op.A))
            out += univariate(op.A, n, i) * g.derivative(i);
        if (!is_zero(op.B))
            out += univariate(op.B, n, i) * g;
    }
    if (op.kappa != 0 && !is_zero(op.C)) {
        MultiPoly pairs(n);
        for (int i = 0; i < n; ++i) {
            MultiPoly ci = univariate(op.C, n, i) * grad[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j) {
                MultiPoly diff = ci - univariate(op.C, n, j) * grad[static_cast<std::size_t>(j)];
                if (!diff.is_zero())
                    pairs += divide_exact(diff, variable_difference(n, i, j));
            }
        }
        out += pairs * (2 * op.kappa);
    }
    return out;
}

SymPoly apply_direct(const SecondOrderOperator& op, const SymPoly& f)
{
    return collect_symmetric(apply_direct(op, expand(f)));
}

MultiPoly apply_E(int l, const MultiPoly& f)
{
    const int n = f.nvars();
    MultiPoly out(n);
    for (int i = 0; i < n; ++i) {
        MultiPoly d = f.derivative(i);
        if (l == 0) {
            out += d;
        } else {
            Exponent shift(static_cast<std::size_t>(n), 0);
            shift[static_cast<std::size_t>(i)] = l;
            out += d.shifted(shift);
        }
    }
    return out;
}

SecondOrderOperator jack_operator_D(int k, const Rational& kappa)
{
    UniPoly xk(static_cast<std::size_t>(k) + 1, Rational(0));
    xk[static_cast<std::size_t>(k)] = 1;
    return {xk, {}, xk, kappa};
}

} // namespace besselpoly
