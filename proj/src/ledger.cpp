#include "besselpoly/ledger.hpp"

#include "besselpoly/errors.hpp"
#include "besselpoly/orthogonality.hpp"
#include "besselpoly/pieri_norms.hpp"

#include <functional>
#include <optional>

namespace besselpoly {

namespace {

std::string attempt(const std::function<Rational()>& f)
{
    try {
        return to_string(f());
    } catch (const PoleError&) {
        return "pole";
    } catch (const DegenerateEigenvalue&) {
        return "degenerate";
    }
}

// First co-cover (lambda, row), |lambda| <= 3, where the literal closed form
// differs from the reference value; falls back to the first co-cover.
LedgerEntry cocover_entry(const std::string& topic, const BesselParams& p,
                          const std::function<Rational(const Partition&, int, Reading)>& closed,
                          const std::function<Rational(const Partition&, int)>& reference)
{
    std::optional<LedgerEntry> first;
    for (const auto& lambda : partitions_up_to(3, p.n))
        for (const auto& cover : co_covers(lambda, p.n, Direction::Up)) {
            LedgerEntry e{topic,
                          "lambda=" + to_string(lambda) + ", row " + std::to_string(cover.row),
                          attempt([&] { return closed(lambda, cover.row, Reading::Literal); }),
                          attempt([&] { return closed(lambda, cover.row, Reading::Corrected); }),
                          attempt([&] { return reference(lambda, cover.row); })};
            if (e.literal != e.reference)
                return e;
            if (!first)
                first = e;
        }
    if (!first)
        return {topic, "none", "", "", ""};
    first->probe += " (all readings agree up to weight 3)";
    return *first;
}

} // namespace

std::vector<LedgerEntry> discrepancy_ledger(const BesselParams& p)
{
    std::vector<LedgerEntry> out;
    const Rational& kappa = p.kappa;
    const int n = p.n;

    out.push_back(cocover_entry(
        "co-cover binomial product", p,
        [&](const Partition& l, int row, Reading r) { return binomial_cocover_closed(l, row, kappa, n, r); },
        [&](const Partition& l, int row) { return binomial_cocover(l, row, kappa); }));

    out.push_back(cocover_entry(
        "principal specialization ratio product", p,
        [&](const Partition& l, int row, Reading r) { return spec_ratio_closed(l, row, kappa, n, r); },
        [&](const Partition& l, int row) { return spec_ratio_cocover(l, row, kappa, n); }));

    {
        auto lead = [&](Reading r) {
            return attempt([&] { return rectangular_2F0(1, p, r).jack_coeffs.coeff(rectangle(1, n)); });
        };
        out.push_back({"rectangular hypergeometric constant",
                       "leading coefficient at k=1, lambda=" + to_string(rectangle(1, n)), lead(Reading::Literal),
                       lead(Reading::Corrected), "1"});
    }

    {
        std::string probe = "I(1,0) and I(0,1) at n=2";
        auto pair = [&](Reading r) {
            try {
                MomentTable2 t(2, p.a, kappa, r);
                return to_string(t.at(1, 0)) + ", " + to_string(t.at(0, 1));
            } catch (const DegenerateRecurrence&) {
                return std::string("degenerate");
            }
        };
        std::string reference = "needs a non-negative integer kappa and a < -1 - 2 kappa";
        if (is_integer(kappa) && kappa >= 0 && check_L2_condition(1, BesselParams{p.a, kappa, 2})) {
            const BesselParams two{p.a, kappa, 2};
            const SymPoly one = SymPoly::monomial(2, Partition{});
            const Rational i00 = inner_product(one, one, two);
            reference = to_string(inner_product(elementary(1, 2), one, two) / i00) + ", "
                + to_string(inner_product(elementary(2, 2), one, two) / i00);
        }
        out.push_back({"two-variable moment recurrences", probe, pair(Reading::Literal), pair(Reading::Corrected),
                       reference});
    }

    if (n >= 2) {
        auto verdict = [&](Reading r) {
            try {
                return std::string(pieri_verify(2, Partition{}, p, r).ok ? "matches" : "mismatch");
            } catch (const PoleError&) {
                return std::string("pole");
            }
        };
        out.push_back({"sign of the elementary factor in the Pieri rule", "r=2, lambda=(0)", verdict(Reading::Literal),
                       verdict(Reading::Corrected), "matches"});
    }
    return out;
}

} // namespace besselpoly
