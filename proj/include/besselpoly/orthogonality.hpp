#ifndef BESSELPOLY_ORTHOGONALITY_HPP
#define BESSELPOLY_ORTHOGONALITY_HPP

#include "besselpoly/bessel.hpp"

#include <map>
#include <utility>
#include <vector>

namespace besselpoly {

/// All values below are reduced: divided by 2^{(a-1)n} Gamma(1-a)^n.
inline constexpr const char* reduced_scale = "2^((a-1)n)*Gamma(1-a)^n";

/// a < -2(m + kappa (n - 1)) + 1.
bool check_L2_condition(int m, const BesselParams& p);

/// Reduced one-variable moment of x^p: 2^p / prod_{j<p} (-a - j).
/// Throws ConvergenceError unless p < 1 - a.
Rational moment_1d(int p, const Rational& a);

/// Reduced value of the integral of f g against the weight. kappa must be a
/// non-negative integer; any divergent monomial aborts the whole sum with
/// ConvergenceError.
Rational inner_product(const SymPoly& f, const SymPoly& g, const BesselParams& p);

struct GramMatrix {
    std::vector<Partition> basis;
    std::vector<std::vector<Rational>> entries;
};

/// Inner products of Y_lambda, |lambda| <= m. Throws ConvergenceError when
/// the degree bound fails check_L2_condition.
GramMatrix gram_matrix(int m, const BesselParams& p);

/// <D_d f, g> = <f, D_d g>.
bool symmetry_check(int d, const SymPoly& f, const SymPoly& g, const BesselParams& p);

/// Moments I(e_1^k e_2^m) of the two-variable functional, normalized by
/// I_00 = 1, for k + 2m <= max_degree. The corrected recurrences are
///   (k + m + 2 kappa + a) I_{k+1,m} = 2k I_{k-1,m+1} - 4 I_{k,m},
///   (k + 2m + 2(kappa + a)) I_{k,m+1} = -2 I_{k+1,m};
/// the literal reading has -(2 kappa + a), -2(kappa + a) and unit constants.
class MomentTable2 {
public:
    MomentTable2(int max_degree, Rational a, Rational kappa, Reading reading = Reading::Corrected);

    const Rational& a() const { return a_; }
    const Rational& kappa() const { return kappa_; }
    int max_degree() const { return max_degree_; }
    const std::map<std::pair<int, int>, Rational>& values() const { return values_; }
    /// Throws std::out_of_range beyond the filled degree.
    const Rational& at(int k, int m) const;

    /// The recurrence not used for filling holds at every filled entry.
    bool consistent() const;

private:
    Rational a_;
    Rational kappa_;
    int max_degree_;
    Reading reading_;
    std::map<std::pair<int, int>, Rational> values_;
};

/// f rewritten in the basis e_1^k e_2^m.
std::map<std::pair<int, int>, Rational> to_elementary2(const SymPoly& f);

/// The functional applied to a symmetric polynomial in two variables.
Rational functional_apply(const SymPoly& f, const MomentTable2& table);

} // namespace besselpoly

#endif
