#include <traintrack/error.hpp>
#include <traintrack/quadrature.hpp>

#include <cmath>
#include <sstream>

namespace traintrack
{

double TanhSinhRule::step(int level)
{
    return std::ldexp(1.0, -level);
}

TanhSinhNode TanhSinhRule::node(double u)
{
    // t = 1 / (1 + exp(-2s)), 1 - t = 1 / (1 + exp(2s)), s = (pi/2) sinh(u),
    // dt/du = pi cosh(u) t (1 - t).
    const double s = 0.5 * pi * std::sinh(u);
    const double e = std::exp(-2.0 * std::abs(s));
    const double small = e / (1.0 + e);
    const double large = 1.0 / (1.0 + e);
    TanhSinhNode n{};
    if (s >= 0.0) {
        n.t = large;
        n.one_minus_t = small;
    } else {
        n.t = small;
        n.one_minus_t = large;
    }
    n.weight = pi * std::cosh(u) * n.t * n.one_minus_t;
    return n;
}

std::vector<TanhSinhNode> TanhSinhRule::nodes(int level)
{
    const double h = step(level);
    const int kmax = static_cast<int>(std::floor(u_max / h));
    std::vector<TanhSinhNode> out;
    out.reserve(static_cast<std::size_t>(2 * kmax + 1));
    for (int k = -kmax; k <= kmax; ++k) {
        if (level > 0 && k % 2 == 0) {
            continue;
        }
        const TanhSinhNode n = node(k * h);
        if (n.t > 0.0 && n.one_minus_t > 0.0 && n.weight > 0.0) {
            out.push_back(n);
        }
    }
    return out;
}

QuadratureEstimate tanh_sinh_01(const std::function<cplx(double, double)> &f, double rel_tol,
                                int level_max)
{
    cplx sum = 0.0;
    cplx previous = 0.0;
    for (int level = 0; level <= level_max; ++level) {
        for (const auto &n : TanhSinhRule::nodes(level)) {
            sum += n.weight * f(n.t, n.one_minus_t);
        }
        const cplx current = TanhSinhRule::step(level) * sum;
        const double diff = std::abs(current - previous);
        if (level >= 3 && diff <= rel_tol * std::abs(current)) {
            return {current, diff, level};
        }
        previous = current;
    }
    std::ostringstream os;
    os << "tanh-sinh did not reach relative tolerance " << rel_tol << " within " << level_max
       << " levels";
    fail(ErrorKind::tolerance_not_reached, os.str());
}

std::vector<std::vector<cplx>> cauchy_taylor_2d(const std::function<cplx(cplx, cplx)> &f, cplx x0,
                                                cplx y0, double radius, int order, int nodes)
{
    if (nodes < 2 * order || order < 1 || !(radius > 0.0)) {
        throw std::invalid_argument("cauchy_taylor_2d: need radius > 0 and nodes >= 2 * order");
    }
    std::vector<cplx> roots(static_cast<std::size_t>(nodes));
    for (int a = 0; a < nodes; ++a) {
        roots[static_cast<std::size_t>(a)] = std::polar(1.0, 2.0 * pi * a / nodes);
    }
    std::vector<std::vector<cplx>> samples(static_cast<std::size_t>(nodes),
                                           std::vector<cplx>(static_cast<std::size_t>(nodes)));
    for (int a = 0; a < nodes; ++a) {
        for (int b = 0; b < nodes; ++b) {
            samples[a][b] = f(x0 + radius * roots[a], y0 + radius * roots[b]);
        }
    }
    std::vector<std::vector<cplx>> coeff(static_cast<std::size_t>(order),
                                         std::vector<cplx>(static_cast<std::size_t>(order)));
    const double norm = 1.0 / (static_cast<double>(nodes) * nodes);
    for (int j = 0; j < order; ++j) {
        for (int k = 0; k < order; ++k) {
            cplx acc = 0.0;
            for (int a = 0; a < nodes; ++a) {
                const cplx wa = std::conj(roots[static_cast<std::size_t>((j * a) % nodes)]);
                cplx row = 0.0;
                for (int b = 0; b < nodes; ++b) {
                    row += samples[a][b] * std::conj(roots[static_cast<std::size_t>((k * b) % nodes)]);
                }
                acc += wa * row;
            }
            coeff[j][k] = acc * norm / (std::pow(radius, j) * std::pow(radius, k));
        }
    }
    return coeff;
}

std::vector<cplx> cauchy_taylor_1d(const std::function<cplx(cplx)> &f, cplx z0, double radius,
                                   int order, int nodes)
{
    if (nodes < 2 * order || order < 1 || !(radius > 0.0)) {
        throw std::invalid_argument("cauchy_taylor_1d: need radius > 0 and nodes >= 2 * order");
    }
    std::vector<cplx> samples(static_cast<std::size_t>(nodes));
    for (int a = 0; a < nodes; ++a) {
        samples[a] = f(z0 + radius * std::polar(1.0, 2.0 * pi * a / nodes));
    }
    std::vector<cplx> coeff(static_cast<std::size_t>(order));
    for (int j = 0; j < order; ++j) {
        cplx acc = 0.0;
        for (int a = 0; a < nodes; ++a) {
            acc += samples[a] * std::polar(1.0, -2.0 * pi * ((j * a) % nodes) / nodes);
        }
        coeff[j] = acc / (static_cast<double>(nodes) * std::pow(radius, j));
    }
    return coeff;
}

} // namespace traintrack
