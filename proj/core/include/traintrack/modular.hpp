#ifndef TRAINTRACK_MODULAR_HPP
#define TRAINTRACK_MODULAR_HPP

#include <traintrack/factorization.hpp>
#include <traintrack/special.hpp>

#include <vector>

namespace traintrack
{

/// A point of the upper half-plane with its nome q = exp(i pi tau).
class Tau
{
public:
    /// Throws lower_half_plane unless Im(tau) > 0.
    explicit Tau(cplx tau);

    cplx value() const noexcept { return tau_; }
    cplx nome() const noexcept { return nome_; }

    /// |Re tau| <= 1 and |tau +- 1/2| >= 1/2 (closure of the standard
    /// fundamental domain of Gamma(2)), with an optional margin.
    bool in_gamma2_fundamental_domain(double margin = 0.0) const noexcept;

private:
    cplx tau_;
    cplx nome_;
};

struct TauPair
{
    Tau tau1;
    Tau tau2;
};

struct ModularGroupElement
{
    long long a = 1;
    long long b = 0;
    long long c = 0;
    long long d = 1;

    /// Throws std::invalid_argument unless ad - bc = 1.
    void validate() const;
    bool in_gamma2() const noexcept;

    cplx act(cplx tau) const;
    cplx automorphy(cplx tau) const { return static_cast<double>(c) * tau + static_cast<double>(d); }
};

/// theta2 = sum q^{(n+1/2)^2}, theta3 = sum q^{n^2}, theta4 = sum (-1)^n q^{n^2}
/// over n in Z, with q^r read as exp(i pi tau r).
cplx theta2(const Tau &t);
cplx theta3(const Tau &t);
cplx theta4(const Tau &t);

/// lambda = theta2^4 / theta3^4.
cplx lambda_hauptmodul(const Tau &t);

/// tau1 = i K(1 - L1^2) / K(L1^2), tau2 = i K(L2^2) / K(1 - L2^2).
TauPair mirror_map(LambdaPair lp);

/// Lambda1 = theta2(tau1)^2 / theta3(tau1)^2, Lambda2 = theta4(tau2)^2 / theta3(tau2)^2.
/// Throws branch_ambiguity when either tau leaves the Gamma(2) fundamental domain.
LambdaPair inverse_mirror(const TauPair &tp);

/// theta2(tau1)^2 theta3(tau2)^2 + theta4(tau2)^2 theta3(tau1)^2.
cplx pi0_modular(const TauPair &tp);

/// Per-sample ratios Pi0(g.tau) / ((c tau + d) Pi0(tau)) with g acting in one slot.
std::vector<cplx> multiplier_ratios(const ModularGroupElement &g, int slot,
                                    const std::vector<TauPair> &samples);

struct MultiplierProbe
{
    cplx epsilon;                 // mean ratio
    double variance = 0.0;        // mean |ratio - epsilon|^2
    double modulus_error = 0.0;   // | |epsilon| - 1 |
    std::vector<cplx> ratios;
};

/// Summary of multiplier_ratios without validation.
MultiplierProbe summarize_multiplier(const ModularGroupElement &g, int slot,
                                     const std::vector<TauPair> &samples);

/// Like summarize_multiplier, but throws non_constant_ratio when the variance
/// reaches `tol` or |epsilon| differs from 1 by more than `tol`.
MultiplierProbe multiplier_probe(const ModularGroupElement &g, int slot,
                                 const std::vector<TauPair> &samples, double tol = 1e-8);

} // namespace traintrack

#endif
