#include <traintrack/error.hpp>
#include <traintrack/modular.hpp>

#include <cmath>
#include <sstream>

namespace traintrack
{

namespace
{

constexpr double theta_term_floor = 1e-17;
constexpr int theta_min_terms = 8;
constexpr int theta_max_terms = 100000;

// sum_{n >= 0} sign^n exp(i pi tau (n + shift)^2)
cplx half_theta_sum(cplx tau, double shift, double sign)
{
    const cplx ipt = cplx(0.0, pi) * tau;
    cplx sum = 0.0;
    double sgn = 1.0;
    for (int n = 0; n < theta_max_terms; ++n) {
        const double k = n + shift;
        const cplx term = sgn * std::exp(ipt * (k * k));
        sum += term;
        if (n + 1 >= theta_min_terms && std::abs(term) < theta_term_floor) {
            return sum;
        }
        sgn *= sign;
    }
    fail(ErrorKind::non_convergence, "theta series did not reach the truncation floor");
}

cplx K(cplx m)
{
    return ellint_K(EllipticModulus{m});
}

} // namespace

Tau::Tau(cplx tau) : tau_(tau)
{
    if (!(tau.imag() > 0.0)) {
        std::ostringstream os;
        os << "tau = " << tau << " is not in the upper half-plane";
        fail(ErrorKind::lower_half_plane, os.str());
    }
    nome_ = std::exp(cplx(0.0, pi) * tau);
}

bool Tau::in_gamma2_fundamental_domain(double margin) const noexcept
{
    return std::abs(tau_.real()) <= 1.0 - margin && std::abs(tau_ - 0.5) >= 0.5 + margin &&
           std::abs(tau_ + 0.5) >= 0.5 + margin;
}

void ModularGroupElement::validate() const
{
    if (a * d - b * c != 1) {
        throw std::invalid_argument("ModularGroupElement: ad - bc must equal 1");
    }
}

bool ModularGroupElement::in_gamma2() const noexcept
{
    auto even = [](long long v) { return v % 2 == 0; };
    return a * d - b * c == 1 && !even(a) && !even(d) && even(b) && even(c);
}

cplx ModularGroupElement::act(cplx tau) const
{
    return (static_cast<double>(a) * tau + static_cast<double>(b)) / automorphy(tau);
}

cplx theta2(const Tau &t)
{
    return 2.0 * half_theta_sum(t.value(), 0.5, 1.0);
}

cplx theta3(const Tau &t)
{
    return 2.0 * half_theta_sum(t.value(), 0.0, 1.0) - 1.0;
}

cplx theta4(const Tau &t)
{
    return 2.0 * half_theta_sum(t.value(), 0.0, -1.0) - 1.0;
}

cplx lambda_hauptmodul(const Tau &t)
{
    const cplx r = theta2(t) / theta3(t);
    const cplx r2 = r * r;
    return r2 * r2;
}

TauPair mirror_map(LambdaPair lp)
{
    if (!lp.in_theorem_domain()) {
        fail(ErrorKind::domain_violation, "mirror map requires |Lambda1^2| < 1 and |1 - Lambda2^2| < 1");
    }
    if (lp.is_limit_point()) {
        fail(ErrorKind::domain_violation,
             "mirror map sends Lambda1 = 0 or Lambda2^2 = 1 to the cusp tau = i infinity");
    }
    const cplx i(0.0, 1.0);
    const cplx l1s = lp.lambda1 * lp.lambda1;
    const cplx l2s = lp.lambda2 * lp.lambda2;
    return {Tau(i * K(1.0 - l1s) / K(l1s)), Tau(i * K(l2s) / K(1.0 - l2s))};
}

LambdaPair inverse_mirror(const TauPair &tp)
{
    for (const Tau *t : {&tp.tau1, &tp.tau2}) {
        if (!t->in_gamma2_fundamental_domain()) {
            std::ostringstream os;
            os << "tau = " << t->value()
               << " lies outside the Gamma(2) fundamental domain where the branch is anchored";
            fail(ErrorKind::branch_ambiguity, os.str());
        }
    }
    const cplx r1 = theta2(tp.tau1) / theta3(tp.tau1);
    const cplx r2 = theta4(tp.tau2) / theta3(tp.tau2);
    return {r1 * r1, r2 * r2};
}

cplx pi0_modular(const TauPair &tp)
{
    const cplx t2a = theta2(tp.tau1);
    const cplx t3a = theta3(tp.tau1);
    const cplx t3b = theta3(tp.tau2);
    const cplx t4b = theta4(tp.tau2);
    return t2a * t2a * t3b * t3b + t4b * t4b * t3a * t3a;
}

std::vector<cplx> multiplier_ratios(const ModularGroupElement &g, int slot,
                                    const std::vector<TauPair> &samples)
{
    g.validate();
    if (slot != 1 && slot != 2) {
        throw std::invalid_argument("multiplier_ratios: slot must be 1 or 2");
    }
    std::vector<cplx> out;
    out.reserve(samples.size());
    for (const TauPair &tp : samples) {
        const Tau &moved = slot == 1 ? tp.tau1 : tp.tau2;
        const Tau image(g.act(moved.value()));
        const TauPair acted = slot == 1 ? TauPair{image, tp.tau2} : TauPair{tp.tau1, image};
        out.push_back(pi0_modular(acted) / (g.automorphy(moved.value()) * pi0_modular(tp)));
    }
    return out;
}

MultiplierProbe summarize_multiplier(const ModularGroupElement &g, int slot,
                                     const std::vector<TauPair> &samples)
{
    MultiplierProbe probe;
    probe.ratios = multiplier_ratios(g, slot, samples);
    if (probe.ratios.empty()) {
        throw std::invalid_argument("multiplier probe needs at least one sample");
    }
    cplx mean = 0.0;
    for (const cplx &r : probe.ratios) {
        mean += r;
    }
    mean /= static_cast<double>(probe.ratios.size());
    double var = 0.0;
    for (const cplx &r : probe.ratios) {
        var += std::norm(r - mean);
    }
    probe.epsilon = mean;
    probe.variance = var / static_cast<double>(probe.ratios.size());
    probe.modulus_error = std::abs(std::abs(mean) - 1.0);
    return probe;
}

MultiplierProbe multiplier_probe(const ModularGroupElement &g, int slot,
                                 const std::vector<TauPair> &samples, double tol)
{
    if (!g.in_gamma2()) {
        throw std::invalid_argument("multiplier_probe: g must lie in Gamma(2)");
    }
    MultiplierProbe probe = summarize_multiplier(g, slot, samples);
    if (!(probe.variance < tol) || probe.modulus_error > tol) {
        std::ostringstream os;
        os << "multiplier ratio for g = [[" << g.a << ", " << g.b << "], [" << g.c << ", " << g.d
           << "]] in slot " << slot << " is not a unit constant: mean " << probe.epsilon
           << ", variance " << probe.variance << ", | |eps| - 1 | = " << probe.modulus_error;
        fail(ErrorKind::non_constant_ratio, os.str());
    }
    return probe;
}

} // namespace traintrack
