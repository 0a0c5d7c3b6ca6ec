#include <traintrack/error.hpp>
#include <traintrack/sampling.hpp>

#include <cmath>

namespace traintrack
{

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t index) const noexcept
{
    return splitmix64(seed_ + index * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::uniform() noexcept
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::vector<LambdaPair> sample_theorem_domain(CounterRng &rng, std::size_t count, double max_rho)
{
    std::vector<LambdaPair> out;
    out.reserve(count);
    while (out.size() < count) {
        const cplx l1(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3));
        const cplx l2(1.0 + rng.uniform(-0.4, 0.2), rng.uniform(-0.3, 0.3));
        const LambdaPair lp{l1, l2};
        if (!lp.in_theorem_domain() || lp.is_limit_point() || std::abs(lp.sum()) < 1e-3) {
            continue;
        }
        const ModuliPoint pt = map_T(lp);
        if (!(std::abs(pt.x) + std::abs(pt.y) < max_rho)) {
            continue;
        }
        try {
            const LambdaPair back = invert_T(pt);
            if (std::abs(back.lambda1 - l1) + std::abs(back.lambda2 - l2) > 1e-12) {
                continue;
            }
        } catch (const Error &) {
            continue;
        }
        out.push_back(lp);
    }
    return out;
}

namespace
{

bool principal_periods_analytic(ModuliPoint pt, double radius)
{
    constexpr int grid = 16;
    constexpr double max_arg = 0.9 * pi;
    for (const double r : {radius, 0.5 * radius}) {
        for (int a = 0; a < grid; ++a) {
            for (int b = 0; b < grid; ++b) {
                const ModuliPoint q{pt.x + std::polar(r, 2.0 * pi * a / grid),
                                    pt.y + std::polar(r, 2.0 * pi * b / grid)};
                LambdaPair lp;
                try {
                    lp = invert_T(q);
                } catch (const Error &) {
                    return false;
                }
                if (!lp.in_theorem_domain()) {
                    return false;
                }
                const cplx u = lp.lambda1 * lp.lambda1;
                const cplx v = 1.0 - lp.lambda2 * lp.lambda2;
                if (std::abs(std::arg(u)) >= max_arg || std::abs(std::arg(v)) >= max_arg) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

std::vector<LambdaPair> sample_pde_points(CounterRng &rng, std::size_t count, double max_rho)
{
    std::vector<LambdaPair> out;
    out.reserve(count);
    while (out.size() < count) {
        const LambdaPair lp = sample_theorem_domain(rng, 1, max_rho).front();
        const ModuliPoint pt = map_T(lp);
        const double radius = default_cauchy_radius(pt);
        if (radius < 1e-3 || !principal_periods_analytic(pt, radius)) {
            continue;
        }
        out.push_back(lp);
    }
    return out;
}

std::vector<LambdaPair> sample_mirror_domain(CounterRng &rng, std::size_t count, double max_rho)
{
    std::vector<LambdaPair> out;
    out.reserve(count);
    while (out.size() < count) {
        const LambdaPair lp = sample_theorem_domain(rng, 1, max_rho).front();
        if (!(lp.lambda1.real() > 0.0)) {
            continue;
        }
        const TauPair tp = mirror_map(lp);
        if (tp.tau1.in_gamma2_fundamental_domain(0.02) && tp.tau2.in_gamma2_fundamental_domain(0.02)) {
            out.push_back(lp);
        }
    }
    return out;
}

std::vector<LambdaPair> sample_real_domain(CounterRng &rng, std::size_t count, double lo, double hi)
{
    std::vector<LambdaPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double a = rng.uniform(lo, hi);
        const double b = rng.uniform(lo, hi);
        out.push_back({a, b});
    }
    return out;
}

Tau sample_tau(CounterRng &rng, double im_lo, double im_hi)
{
    for (;;) {
        const cplx t(rng.uniform(-0.5, 0.5), rng.uniform(im_lo, im_hi));
        if (std::abs(t - 0.5) >= 0.55 && std::abs(t + 0.5) >= 0.55) {
            return Tau(t);
        }
    }
}

std::vector<TauPair> sample_tau_pairs(CounterRng &rng, std::size_t count, double im_lo,
                                      double im_hi)
{
    std::vector<TauPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Tau a = sample_tau(rng, im_lo, im_hi);
        const Tau b = sample_tau(rng, im_lo, im_hi);
        out.push_back({a, b});
    }
    return out;
}

} // namespace traintrack
