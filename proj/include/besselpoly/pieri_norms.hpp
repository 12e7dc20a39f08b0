#ifndef BESSELPOLY_PIERI_NORMS_HPP
#define BESSELPOLY_PIERI_NORMS_HPP

#include "besselpoly/bessel.hpp"

#include <string>
#include <vector>

namespace besselpoly {

/// (kappa + z)/z.
Rational v_hat(const Rational& z, const Rational& kappa);
/// ((a - 1)/2 + z)/(2z(2z + 1)).
Rational w_hat(const Rational& z, const Rational& a);

enum class Sign { Plus, Minus };

/// Delta_sign(z + shift)/Delta_sign(z), collapsed to a finite product with
/// the difference equations of the d-functions.
Rational delta_shift_ratio(Sign sign, const std::vector<Rational>& z, const std::vector<int>& shift,
                           const BesselParams& p);

/// Delta_sign(rho + lambda)/Delta_sign(rho).
Rational delta_ratio(Sign sign, const Partition& lambda, const BesselParams& p);

/// The elementary polynomial carried by the order-r recurrence. The
/// corrected form is e_r/2^r; the literal one has the sign (-1)^{r+1}.
SymPoly E_hat_r(int r, int n, Reading reading = Reading::Corrected);

/// Index sets are 0-based. eps has one entry (+1 or -1) per element of I.
/// Both coefficients are evaluated as limits along kappa -> kappa + t,
/// z_i -> z_i + t (n - i), so removable 0/0 singularities resolve; a
/// genuine pole throws PoleError.
Rational V_coeff(const std::vector<int>& eps, const std::vector<int>& I, const std::vector<int>& J,
                 const std::vector<Rational>& z, const BesselParams& p);
Rational U_coeff(const std::vector<int>& J, int order, const std::vector<Rational>& z, const BesselParams& p);

/// Same, with an explicit perturbation direction dz for z (kappa still moves
/// with slope one).
Rational V_coeff(const std::vector<int>& eps, const std::vector<int>& I, const std::vector<int>& J,
                 const std::vector<Rational>& z, const std::vector<Rational>& dz, const BesselParams& p);
Rational U_coeff(const std::vector<int>& J, int order, const std::vector<Rational>& z,
                 const std::vector<Rational>& dz, const BesselParams& p);

struct PieriTerm {
    std::vector<int> I;   // 0-based rows
    std::vector<int> eps; // one sign per row in I
    Partition target;
    Rational coeff;
};

struct PieriExpansion {
    int r = 0;
    Partition lambda;
    std::vector<PieriTerm> terms;

    /// Coefficients summed per target partition.
    std::map<Partition, Rational, GradedPartitionLess> by_target() const;
};

/// Right-hand side of the order-r recurrence for E_r times the
/// unit-constant-term Bessel polynomial of lambda.
PieriExpansion pieri_expand(int r, const Partition& lambda, const BesselParams& p);

struct PieriReport {
    bool ok = false;
    /// Expansion of the product in the renormalized basis.
    std::map<Partition, Rational, GradedPartitionLess> computed;
    std::map<Partition, Rational, GradedPartitionLess> predicted;
    std::string mismatch;
};

/// Expands E_r times the renormalized polynomial in the renormalized basis
/// and compares with pieri_expand.
PieriReport pieri_verify(int r, const Partition& lambda, const BesselParams& p, Reading reading = Reading::Corrected);

/// N_lambda / N_(0) = (-4)^|lambda| Delta_+ ratio * Delta_- ratio.
Rational norm_ratio(const Partition& lambda, const BesselParams& p);

/// The same quotient from the rising/falling factorial product form.
Rational norm_ratio_pochhammer(const Partition& lambda, const BesselParams& p);

/// N_(0) divided by 2^{(a-1)n} Gamma(1-a)^n. kappa must be a non-negative integer.
Rational norm_constant_reduced(const BesselParams& p);

/// N_lambda divided by 2^{(a-1)n} Gamma(1-a)^n, from the closed Gamma product.
/// kappa must be a non-negative integer.
Rational norm_full_reduced(const Partition& lambda, const BesselParams& p);

} // namespace besselpoly

#endif
