#ifndef TRAINTRACK_FACTORIZATION_HPP
#define TRAINTRACK_FACTORIZATION_HPP

// The 2:2 cover (Lambda1, Lambda2) -> (x, y), the period basis built from
// products of complete elliptic integrals, and the bilinear pairings.

#include <traintrack/appell.hpp>
#include <traintrack/special.hpp>

#include <Eigen/Dense>

#include <array>
#include <string>

namespace traintrack
{

struct LambdaPair
{
    cplx lambda1;
    cplx lambda2;

    cplx sum() const { return lambda1 + lambda2; }
    LambdaPair swapped() const { return {lambda2, lambda1}; }

    /// |Lambda1^2| < 1 and |1 - Lambda2^2| < 1.
    bool in_theorem_domain() const;
    /// Lambda1 = 0 or Lambda2^2 = 1: the logarithmic periods diverge there.
    bool is_limit_point() const;
};

/// (Pi0, Pi1, Pi2, Pi3). Entries that diverge at a limit point are +inf and
/// `limit_point` is set.
struct PeriodVector
{
    std::array<cplx, 4> pi{};
    bool limit_point = false;

    cplx &operator[](std::size_t i) { return pi[i]; }
    const cplx &operator[](std::size_t i) const { return pi[i]; }
    Eigen::Vector4cd as_vector() const;
};

/// Sigma = J (x) J with J = [[0, 1], [-1, 0]]: antidiagonal (1, -1, -1, 1).
Eigen::Matrix4i intersection_matrix();

/// x = 4 L1 L2 / (L1 + L2)^2, y = -(1 - L1^2)(1 - L2^2) / (L1 + L2)^2.
ModuliPoint map_T(LambdaPair lp);

struct InvertOptions
{
    /// Follow the straight segment from (0, 0) and reject points whose
    /// principal-branch formulas jump on the way.
    bool track_branch = true;
    int tracking_steps = 64;
};

/// Closed-form inverse of map_T on the sheet through (0, 0) -> (0, 1):
///   s^2 = 2 / (b + sqrt(D)),  b = 1 - y - x/2,  D = (1 - x - y)(1 - y),
///   Lambda1 = s x / (2 (1 + sqrt(1 - x))),  Lambda2 = s (1 + sqrt(1 - x)) / 2.
LambdaPair invert_T(ModuliPoint pt, const InvertOptions &options = {});

/// g11 = (L1 + L2)^{2 beta1 + 2 beta2 - 1}, principal branch.
cplx gauge_scalar(LambdaPair lp, cplx beta1, cplx beta2);

/// Pi0 alone; finite on the whole theorem domain, including its limit points.
cplx holomorphic_period(LambdaPair lp);

/// Pi0 = (4/pi^2)  s K(L1^2) K(1 - L2^2)
/// Pi1 = (4i/pi^2) s K(1 - L1^2) K(1 - L2^2)
/// Pi2 = (4i/pi^2) s K(L1^2) K(L2^2)
/// Pi3 = -(4/pi^2) s K(1 - L1^2) K(L2^2),  s = L1 + L2.
PeriodVector period_basis(LambdaPair lp);

/// Pi^T Sigma Pi = 2 (Pi0 Pi3 - Pi1 Pi2).
cplx quadratic_relation(const PeriodVector &pv);

/// (-i)^2 Pi^dagger Sigma Pi. Throws non_real_pairing if the Hermitian form
/// has an imaginary part above 1e-12 relative to |Pi|^2.
double positivity_pairing(const PeriodVector &pv);

/// Everything computed on the way to the traintrack value.
struct TraintrackEvaluation
{
    ModuliPoint point;
    LambdaPair preimage;
    PeriodVector periods;
    double value = 0.0;          // scale * (-i)^2 Pi^dagger Sigma Pi
    double imaginary_residue = 0.0;
    std::string branch_note;
};

/// (x, y) = (z1, 1 - z2), mapped back through invert_T. The overall
/// normalization is not fixed; `scale` multiplies the raw pairing.
TraintrackEvaluation traintrack_evaluate(cplx z1, cplx z2, double scale = 1.0);
double traintrack_value(cplx z1, cplx z2, double scale = 1.0);

} // namespace traintrack

#endif
