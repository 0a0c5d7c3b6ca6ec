#include <traintrack/appell.hpp>
#include <traintrack/error.hpp>
#include <traintrack/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace traintrack
{

namespace
{

bool close(cplx a, cplx b, double tol)
{
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

} // namespace

bool F2Params::is_conformal(double tol) const noexcept
{
    return close(alpha, 0.5, tol) && close(beta1, 0.5, tol) && close(beta2, 0.5, tol) &&
           close(gamma1, 1.0, tol) && close(gamma2, 1.0, tol);
}

void F2Params::validate() const
{
    if (is_nonpositive_integer(gamma1) || is_nonpositive_integer(gamma2)) {
        fail(ErrorKind::pole, "F2 lower parameters gamma1, gamma2 must not be non-positive integers");
    }
}

void QuadratureControl::validate() const
{
    if (level_max < 3 || level_max > 14) {
        throw std::invalid_argument("QuadratureControl: level_max must lie in [3, 14]");
    }
    if (!(target_tol > 0.0)) {
        throw std::invalid_argument("QuadratureControl: target_tol must be positive");
    }
}

Evaluation f2_series_eval(const F2Params &p, ModuliPoint pt, const SeriesControl &c)
{
    c.validate();
    p.validate();
    const double rho = std::abs(pt.x) + std::abs(pt.y);
    if (!(rho < 1.0)) {
        std::ostringstream os;
        os << "F2 double series requires |x| + |y| < 1; got " << rho;
        fail(ErrorKind::divergence, os.str());
    }
    const double tail = 1.0 / (1.0 - rho);

    // diag[m] holds the term with indices (m, d - m) of the current total degree d.
    std::vector<cplx> diag{1.0};
    diag.reserve(1024);
    cplx sum = 1.0;
    int small_run = 0;
    for (std::size_t d = 0; d < c.max_terms; ++d) {
        const double dd = static_cast<double>(d);
        const cplx head = diag[d] * (p.alpha + dd) * (p.beta1 + dd) / ((p.gamma1 + dd) * (dd + 1.0)) * pt.x;
        for (std::size_t m = 0; m <= d; ++m) {
            const double n = static_cast<double>(d - m);
            diag[m] *= (p.alpha + dd) * (p.beta2 + n) / ((p.gamma2 + n) * (n + 1.0)) * pt.y;
        }
        diag.push_back(head);

        cplx diag_sum = 0.0;
        double diag_abs = 0.0;
        for (const cplx &t : diag) {
            diag_sum += t;
            diag_abs += std::abs(t);
        }
        sum += diag_sum;
        const double bound = std::max(c.rel_tol * std::abs(sum), c.abs_floor);
        if (diag_abs * tail <= bound) {
            if (++small_run == 3) {
                return {sum, diag_abs * tail + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(sum)};
            }
        } else {
            small_run = 0;
        }
    }
    std::ostringstream os;
    os << "F2 double series did not converge within total degree " << c.max_terms;
    fail(ErrorKind::non_convergence, os.str());
}

cplx f2_series(const F2Params &p, ModuliPoint pt, const SeriesControl &c)
{
    return f2_series_eval(p, pt, c).value;
}

bool euler_kernel_vanishes(ModuliPoint pt, double tol)
{
    // The image of [0,1]^2 under (t1, t2) -> y t1 + x t2 is a (possibly
    // degenerate) parallelogram; the kernel vanishes iff it contains 1.
    const cplx x = pt.x;
    const cplx y = pt.y;
    const double cross = (std::conj(y) * x).imag();
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    if (std::abs(cross) > tol * scale * scale) {
        // Solve Re/Im of y t1 + x t2 = 1.
        const double t1 = x.imag() / cross;
        const double t2 = -y.imag() / cross;
        return t1 >= -tol && t1 <= 1.0 + tol && t2 >= -tol && t2 <= 1.0 + tol;
    }
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    if (ax == 0.0 && ay == 0.0) {
        return false;
    }
    const cplx u = (ay >= ax ? y / ay : x / ax);
    // 1 must lie on the real line spanned by u.
    if (std::abs((std::conj(u) * cplx(1.0)).imag()) > tol) {
        return false;
    }
    const double a = (std::conj(u) * y).real();
    const double b = (std::conj(u) * x).real();
    const double target = u.real();
    const double lo = std::min(0.0, a) + std::min(0.0, b);
    const double hi = std::max(0.0, a) + std::max(0.0, b);
    return target >= lo - tol && target <= hi + tol;
}

namespace
{

struct WeightedNode
{
    double t;
    cplx weight; // DE weight times the algebraic endpoint factors
};

std::vector<WeightedNode> weighted_nodes(int level, cplx beta, cplx gamma)
{
    std::vector<WeightedNode> out;
    const cplx left = beta - 1.0;
    const cplx right = gamma - beta - 1.0;
    for (const auto &n : TanhSinhRule::nodes(level)) {
        const cplx w = n.weight * cpow(n.t, left) * cpow(n.one_minus_t, right);
        if (std::isfinite(w.real()) && std::isfinite(w.imag())) {
            out.push_back({n.t, w});
        }
    }
    return out;
}

} // namespace

Evaluation f2_euler_integral_eval(const F2Params &p, ModuliPoint pt, const QuadratureControl &q)
{
    q.validate();
    p.validate();
    if (!(p.gamma1.real() > p.beta1.real() && p.beta1.real() > 0.0 &&
          p.gamma2.real() > p.beta2.real() && p.beta2.real() > 0.0)) {
        fail(ErrorKind::domain_violation,
             "Euler integral requires Re(gamma_i) > Re(beta_i) > 0 for i = 1, 2");
    }
    if (euler_kernel_vanishes(pt)) {
        std::ostringstream os;
        os << "kernel 1 - x t2 - y t1 vanishes on the unit square for (x, y) = (" << pt.x << ", "
           << pt.y << ")";
        fail(ErrorKind::singular_integrand, os.str());
    }

    const bool sqrt_kernel = p.alpha == cplx(0.5);
    auto kernel = [&](double t1, double t2) -> cplx {
        const cplx base = 1.0 - pt.x * t2 - pt.y * t1;
        return sqrt_kernel ? 1.0 / std::sqrt(base) : cpow(base, -p.alpha);
    };

    // t1 carries (beta2, gamma2) and t2 carries (beta1, gamma1).
    std::vector<WeightedNode> all1;
    std::vector<WeightedNode> all2;
    cplx sum = 0.0;
    cplx previous = 0.0;
    for (int level = 0; level <= q.level_max; ++level) {
        const auto new1 = weighted_nodes(level, p.beta2, p.gamma2);
        const auto new2 = weighted_nodes(level, p.beta1, p.gamma1);
        // New pairs: (new1 x old2) + (all1_after x new2).
        for (const auto &a : new1) {
            for (const auto &b : all2) {
                sum += a.weight * b.weight * kernel(a.t, b.t);
            }
        }
        all1.insert(all1.end(), new1.begin(), new1.end());
        for (const auto &a : all1) {
            for (const auto &b : new2) {
                sum += a.weight * b.weight * kernel(a.t, b.t);
            }
        }
        all2.insert(all2.end(), new2.begin(), new2.end());

        const double h = TanhSinhRule::step(level);
        const cplx current = h * h * sum;
        const double diff = std::abs(current - previous);
        if (level >= 3 && diff <= q.target_tol * std::abs(current)) {
            const cplx prefactor = gamma_fn(p.gamma1) * gamma_fn(p.gamma2) /
                                   (gamma_fn(p.beta1) * gamma_fn(p.gamma1 - p.beta1) *
                                    gamma_fn(p.beta2) * gamma_fn(p.gamma2 - p.beta2));
            return {prefactor * current, std::abs(prefactor) * diff};
        }
        previous = current;
    }
    std::ostringstream os;
    os << "Euler double integral did not reach relative tolerance " << q.target_tol << " within "
       << q.level_max << " levels";
    fail(ErrorKind::tolerance_not_reached, os.str());
}

cplx f2_euler_integral(const F2Params &p, ModuliPoint pt, const QuadratureControl &q)
{
    return f2_euler_integral_eval(p, pt, q).value;
}

double PdeResidual::max_normalized() const
{
    return std::max(std::abs(normalized_first()), std::abs(normalized_second()));
}

double f2_singular_distance(ModuliPoint pt)
{
    return std::min({std::abs(pt.x), std::abs(1.0 - pt.x), std::abs(pt.y), std::abs(1.0 - pt.y),
                     0.5 * std::abs(1.0 - pt.x - pt.y)});
}

double default_cauchy_radius(ModuliPoint pt)
{
    return 0.5 * f2_singular_distance(pt);
}

PdeResidual f2_pde_residual(const AnalyticFn2 &F, const F2Params &p, ModuliPoint pt, double radius,
                            int nodes)
{
    const double dist = f2_singular_distance(pt);
    if (!(radius > 0.0) || radius >= dist) {
        std::ostringstream os;
        os << "Cauchy radius " << radius << " reaches the singular locus (distance " << dist << ")";
        fail(ErrorKind::radius_too_large, os.str());
    }
    const auto c = cauchy_taylor_2d(F, pt.x, pt.y, radius, 3, nodes);
    const cplx f = c[0][0];
    const cplx fx = c[1][0];
    const cplx fy = c[0][1];
    const cplx fxy = c[1][1];
    const cplx fxx = 2.0 * c[2][0];
    const cplx fyy = 2.0 * c[0][2];
    const cplx x = pt.x;
    const cplx y = pt.y;

    const cplx terms1[] = {
        x * (1.0 - x) * fxx,
        -x * y * fxy,
        (p.gamma1 - (p.alpha + p.beta1 + 1.0) * x) * fx,
        -p.beta1 * y * fy,
        -p.alpha * p.beta1 * f,
    };
    const cplx terms2[] = {
        y * (1.0 - y) * fyy,
        -x * y * fxy,
        (p.gamma2 - (p.alpha + p.beta2 + 1.0) * y) * fy,
        -p.beta2 * x * fx,
        -p.alpha * p.beta2 * f,
    };
    PdeResidual r{0.0, 0.0, 0.0, 0.0};
    for (const cplx &t : terms1) {
        r.first += t;
        r.scale_first = std::max(r.scale_first, std::abs(t));
    }
    for (const cplx &t : terms2) {
        r.second += t;
        r.scale_second = std::max(r.scale_second, std::abs(t));
    }
    return r;
}

bool quadratic_criterion(const F2Params &p, double tol)
{
    return close(p.alpha, p.beta1 + p.beta2 - 0.5, tol) && close(p.gamma1, 2.0 * p.beta1, tol) &&
           close(p.gamma2, 2.0 * p.beta2, tol);
}

} // namespace traintrack
