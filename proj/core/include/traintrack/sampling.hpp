#ifndef TRAINTRACK_SAMPLING_HPP
#define TRAINTRACK_SAMPLING_HPP

// Reproducible sampling. Draw k (from 0) of a stream with seed s is output k of
// the reference SplitMix64 generator seeded with s, i.e. mix(s + (k + 1) G)
// with G = 0x9E3779B97F4A7C15 and mix the SplitMix64 finalizer; in terms of
// splitmix64() below, which adds G itself, that is splitmix64(s + k G).
// Uniform doubles use the top 53 bits: (bits >> 11) * 2^-53. Any
// implementation of those lines reproduces every sample in this library.

#include <traintrack/factorization.hpp>
#include <traintrack/modular.hpp>

#include <cstdint>
#include <vector>

namespace traintrack
{

std::uint64_t splitmix64(std::uint64_t x) noexcept;

class CounterRng
{
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t bits(std::uint64_t index) const noexcept;
    std::uint64_t next() noexcept { return bits(counter_++); }
    /// Uniform in [0, 1).
    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// Complex (Lambda1, Lambda2) on the sheet through (0, 1), in the theorem
/// domain, with |x| + |y| < max_rho for (x, y) = map_T. Rejection sampling:
/// Lambda1 in [-0.5, 0.5] + i[-0.3, 0.3], Lambda2 in 1 + [-0.4, 0.2] + i[-0.3, 0.3],
/// accepted when invert_T(map_T(lp)) reproduces lp to 1e-12.
std::vector<LambdaPair> sample_theorem_domain(CounterRng &rng, std::size_t count,
                                              double max_rho = 0.95);

/// Theorem-domain samples whose default Cauchy polydisk in (x, y) stays where
/// all four periods are analytic on the principal branches: on a grid of the
/// torus and the half-radius torus the preimages stay in the theorem domain,
/// Lambda1^2 keeps |arg| < 0.9 pi and
/// 1 - Lambda2^2 keeps |arg| < 0.9 pi.
std::vector<LambdaPair> sample_pde_points(CounterRng &rng, std::size_t count,
                                          double max_rho = 0.95);

/// Theorem-domain samples on the theta-quotient branch Re(Lambda1) > 0 whose
/// mirror images lie in the Gamma(2) fundamental domain (0.02 margin). The
/// mirror map only sees Lambda1^2, so this is the half where it is invertible.
std::vector<LambdaPair> sample_mirror_domain(CounterRng &rng, std::size_t count,
                                             double max_rho = 0.95);

/// Real (Lambda1, Lambda2) uniform in [lo, hi]^2.
std::vector<LambdaPair> sample_real_domain(CounterRng &rng, std::size_t count, double lo = 0.05,
                                           double hi = 0.95);

/// tau with Re in [-0.5, 0.5], Im in [im_lo, im_hi], kept at distance >= 0.55
/// from +-1/2 so that it sits inside the Gamma(2) fundamental domain.
Tau sample_tau(CounterRng &rng, double im_lo = 0.6, double im_hi = 2.0);

std::vector<TauPair> sample_tau_pairs(CounterRng &rng, std::size_t count, double im_lo = 0.6,
                                      double im_hi = 2.0);

} // namespace traintrack

#endif
