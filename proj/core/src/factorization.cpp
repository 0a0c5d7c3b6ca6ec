#include <traintrack/error.hpp>
#include <traintrack/factorization.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace traintrack
{

namespace
{

constexpr double degenerate_eps = 1e-15;

void require_nondegenerate(LambdaPair lp, const char *where)
{
    const double scale = std::max({1.0, std::abs(lp.lambda1), std::abs(lp.lambda2)});
    if (std::abs(lp.sum()) <= degenerate_eps * scale) {
        std::ostringstream os;
        os << where << ": Lambda1 + Lambda2 = 0 at (" << lp.lambda1 << ", " << lp.lambda2 << ")";
        fail(ErrorKind::degenerate_pair, os.str());
    }
}

// Straight segment 1 -> 1 - c stays off (-inf, 0] unless c is real and >= 1.
bool segment_hits_cut(cplx c)
{
    return c.imag() == 0.0 && c.real() >= 1.0;
}

struct InverseParts
{
    cplx s2;
    cplx root_1mx;
};

InverseParts inverse_parts(cplx x, cplx y)
{
    const cplx b = 1.0 - y - 0.5 * x;
    const cplx sqrt_d = std::sqrt(1.0 - x - y) * std::sqrt(1.0 - y);
    const cplx denom = b + sqrt_d;
    if (std::abs(denom) <= degenerate_eps) {
        fail(ErrorKind::discriminant_degeneracy, "b + sqrt(D) vanishes; no finite preimage");
    }
    return {2.0 / denom, std::sqrt(1.0 - x)};
}

cplx K(cplx m)
{
    return ellint_K(EllipticModulus{m});
}

} // namespace

bool LambdaPair::in_theorem_domain() const
{
    return std::abs(lambda1 * lambda1) < 1.0 && std::abs(1.0 - lambda2 * lambda2) < 1.0;
}

bool LambdaPair::is_limit_point() const
{
    return lambda1 == cplx(0.0) || lambda2 * lambda2 == cplx(1.0);
}

Eigen::Vector4cd PeriodVector::as_vector() const
{
    return Eigen::Vector4cd(pi[0], pi[1], pi[2], pi[3]);
}

Eigen::Matrix4i intersection_matrix()
{
    Eigen::Matrix2i j;
    j << 0, 1, -1, 0;
    Eigen::Matrix4i sigma;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            sigma.block<2, 2>(2 * a, 2 * b) = j(a, b) * j;
        }
    }
    return sigma;
}

ModuliPoint map_T(LambdaPair lp)
{
    require_nondegenerate(lp, "map_T");
    const cplx s2 = lp.sum() * lp.sum();
    const cplx l1 = lp.lambda1;
    const cplx l2 = lp.lambda2;
    return {4.0 * l1 * l2 / s2, -(1.0 - l1 * l1) * (1.0 - l2 * l2) / s2};
}

LambdaPair invert_T(ModuliPoint pt, const InvertOptions &options)
{
    const cplx x = pt.x;
    const cplx y = pt.y;
    const cplx d = (1.0 - x - y) * (1.0 - y);
    if (std::abs(d) <= degenerate_eps) {
        std::ostringstream os;
        os << "discriminant (1 - x - y)(1 - y) vanishes at (" << x << ", " << y << ")";
        fail(ErrorKind::discriminant_degeneracy, os.str());
    }
    if (options.track_branch) {
        if (segment_hits_cut(x) || segment_hits_cut(y) || segment_hits_cut(x + y)) {
            std::ostringstream os;
            os << "segment from the origin to (" << x << ", " << y
               << ") crosses a square-root cut; outside the tracked neighbourhood";
            fail(ErrorKind::branch_ambiguity, os.str());
        }
        cplx prev = 1.0;
        for (int k = 1; k <= options.tracking_steps; ++k) {
            const double t = static_cast<double>(k) / options.tracking_steps;
            const cplx cur = inverse_parts(t * x, t * y).s2;
            const bool crossed = cur.real() < 0.0 && prev.real() < 0.0 &&
                                 std::signbit(cur.imag()) != std::signbit(prev.imag());
            if (crossed || cur == cplx(0.0)) {
                std::ostringstream os;
                os << "s^2 = (Lambda1 + Lambda2)^2 crosses the principal cut between the origin and ("
                   << x << ", " << y << ")";
                fail(ErrorKind::branch_ambiguity, os.str());
            }
            prev = cur;
        }
    }
    const InverseParts parts = inverse_parts(x, y);
    const cplx s = std::sqrt(parts.s2);
    const cplx one_plus_r = 1.0 + parts.root_1mx;
    return {s * x / (2.0 * one_plus_r), 0.5 * s * one_plus_r};
}

cplx gauge_scalar(LambdaPair lp, cplx beta1, cplx beta2)
{
    require_nondegenerate(lp, "gauge_scalar");
    const cplx exponent = 2.0 * beta1 + 2.0 * beta2 - 1.0;
    if (exponent == cplx(1.0)) {
        return lp.sum();
    }
    return cpow(lp.sum(), exponent);
}

namespace
{

void require_theorem_domain(LambdaPair lp)
{
    if (!lp.in_theorem_domain()) {
        std::ostringstream os;
        os << "(Lambda1, Lambda2) = (" << lp.lambda1 << ", " << lp.lambda2
           << ") violates |Lambda1^2| < 1, |1 - Lambda2^2| < 1";
        fail(ErrorKind::domain_violation, os.str());
    }
}

} // namespace

cplx holomorphic_period(LambdaPair lp)
{
    require_theorem_domain(lp);
    require_nondegenerate(lp, "holomorphic_period");
    const cplx l1s = lp.lambda1 * lp.lambda1;
    const cplx l2s = lp.lambda2 * lp.lambda2;
    return (4.0 / (pi * pi)) * lp.sum() * K(l1s) * K(1.0 - l2s);
}

PeriodVector period_basis(LambdaPair lp)
{
    require_theorem_domain(lp);
    require_nondegenerate(lp, "period_basis");
    const cplx i(0.0, 1.0);
    const cplx l1s = lp.lambda1 * lp.lambda1;
    const cplx l2s = lp.lambda2 * lp.lambda2;
    const double inf = std::numeric_limits<double>::infinity();
    const bool log1 = lp.lambda1 == cplx(0.0); // K(1 - L1^2) diverges
    const bool log2 = l2s == cplx(1.0);        // K(L2^2) diverges

    const cplx pref = (4.0 / (pi * pi)) * lp.sum();
    const cplx k1 = K(l1s);
    const cplx k2c = K(1.0 - l2s);
    PeriodVector pv;
    pv.limit_point = log1 || log2;
    pv[0] = pref * k1 * k2c;
    const cplx k1c = log1 ? cplx(inf) : K(1.0 - l1s);
    const cplx k2 = log2 ? cplx(inf) : K(l2s);
    pv[1] = log1 ? cplx(inf) : i * pref * k1c * k2c;
    pv[2] = log2 ? cplx(inf) : i * pref * k1 * k2;
    pv[3] = (log1 || log2) ? cplx(inf) : (i * i) * pref * k1c * k2;
    return pv;
}

cplx quadratic_relation(const PeriodVector &pv)
{
    const Eigen::Vector4cd v = pv.as_vector();
    const Eigen::Matrix4cd sigma = intersection_matrix().cast<cplx>();
    return v.transpose() * sigma * v;
}

double positivity_pairing(const PeriodVector &pv)
{
    if (pv.limit_point) {
        fail(ErrorKind::domain_violation, "pairing is undefined at a limit point of the period basis");
    }
    const Eigen::Vector4cd v = pv.as_vector();
    const Eigen::Matrix4cd sigma = intersection_matrix().cast<cplx>();
    const cplx h = v.adjoint() * sigma * v;
    const double scale = std::max(1e-300, v.squaredNorm());
    if (std::abs(h.imag()) > 1e-12 * scale) {
        std::ostringstream os;
        os << "Hermitian pairing has imaginary part " << h.imag() << " (scale " << scale << ")";
        fail(ErrorKind::non_real_pairing, os.str());
    }
    return -h.real();
}

TraintrackEvaluation traintrack_evaluate(cplx z1, cplx z2, double scale)
{
    TraintrackEvaluation ev;
    ev.point = {z1, 1.0 - z2};
    ev.preimage = invert_T(ev.point);
    ev.branch_note =
        "principal square roots; sheet anchored at (Lambda1, Lambda2) = (0, 1) over (x, y) = (0, 0), "
        "continued along the straight segment from the origin";
    if (ev.preimage.is_limit_point()) {
        std::ostringstream os;
        os << "(x, y) = (" << ev.point.x << ", " << ev.point.y
           << ") maps to a limit point (Lambda1, Lambda2) = (" << ev.preimage.lambda1 << ", "
           << ev.preimage.lambda2 << ") where logarithmic periods diverge";
        fail(ErrorKind::domain_violation, os.str());
    }
    ev.periods = period_basis(ev.preimage);
    const Eigen::Vector4cd v = ev.periods.as_vector();
    const cplx h = v.adjoint() * intersection_matrix().cast<cplx>() * v;
    ev.imaginary_residue = std::abs(h.imag()) / std::max(1e-300, v.squaredNorm());
    ev.value = scale * positivity_pairing(ev.periods);
    return ev;
}

double traintrack_value(cplx z1, cplx z2, double scale)
{
    return traintrack_evaluate(z1, z2, scale).value;
}

} // namespace traintrack
