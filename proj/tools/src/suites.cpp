#include "suites.hpp"

#include <traintrack/appell.hpp>
#include <traintrack/error.hpp>
#include <traintrack/factorization.hpp>
#include <traintrack/modular.hpp>
#include <traintrack/pfaffian.hpp>
#include <traintrack/sampling.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace traintrack::cli
{

namespace
{

const F2Params conformal = F2Params::conformal();

json pair_json(LambdaPair lp)
{
    return json{{"lambda1", to_json(lp.lambda1)}, {"lambda2", to_json(lp.lambda2)}};
}

json point_json(ModuliPoint pt)
{
    return json{{"x", to_json(pt.x)}, {"y", to_json(pt.y)}};
}

json matrix_json(const Eigen::Matrix2cd &m)
{
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
        rows.push_back(json::array({to_json(m(i, 0)), to_json(m(i, 1))}));
    }
    return rows;
}

json matrix_json(const IntMatrix2 &m)
{
    return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})});
}

double rel(cplx a, cplx b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

double pair_distance(LambdaPair a, LambdaPair b)
{
    return std::abs(a.lambda1 - b.lambda1) + std::abs(a.lambda2 - b.lambda2);
}

struct SuiteContext
{
    const SuiteInfo &info;
    CounterRng rng;
    std::size_t samples;
    double tolerance;
};

// Fills `c` through `body`; a raised error marks the case failed with NaN residual.
void run_case(VerificationReport &report, double tol, const std::function<void(CaseRecord &)> &body)
{
    CaseRecord c;
    c.index = report.cases.size();
    try {
        body(c);
        c.passed = c.residual <= tol;
    } catch (const std::exception &e) {
        c.residual = NAN;
        c.passed = false;
        c.error = e.what();
    }
    report.cases.push_back(std::move(c));
}

void suite_factorization(SuiteContext &ctx, VerificationReport &r)
{
    for (const LambdaPair &lp : sample_theorem_domain(ctx.rng, ctx.samples)) {
        run_case(r, ctx.tolerance, [&](CaseRecord &c) {
            const ModuliPoint pt = map_T(lp);
            c.inputs = pair_json(lp);
            const cplx pi0 = period_basis(lp)[0];
            const cplx f2 = f2_series(conformal, pt);
            c.outputs = point_json(pt);
            c.outputs["pi0"] = to_json(pi0);
            c.outputs["f2_series"] = to_json(f2);
            c.residual = std::abs(pi0 - f2) / std::abs(pi0);
        });
    }
}

void suite_pde(SuiteContext &ctx, VerificationReport &r)
{
    for (const LambdaPair &lp : sample_pde_points(ctx.rng, ctx.samples)) {
        run_case(r, ctx.tolerance, [&](CaseRecord &c) {
            const ModuliPoint pt = map_T(lp);
            const double radius = default_cauchy_radius(pt);
            c.inputs = pair_json(lp);
            c.outputs = point_json(pt);
            c.outputs["radius"] = radius;
            double worst = 0.0;
            json per_period = json::array();
            for (std::size_t i = 0; i < 4; ++i) {
                const auto F = [i](cplx x, cplx y) { return period_basis(invert_T({x, y}))[i]; };
                const PdeResidual res = f2_pde_residual(F, conformal, pt, radius);
                const double a = std::abs(res.normalized_first());
                const double b = std::abs(res.normalized_second());
                per_period.push_back(json{{"first", a}, {"second", b}});
                worst = std::max({worst, a, b});
            }
            c.outputs["normalized_residuals"] = per_period;
            c.residual = worst;
        });
    }
}

void suite_triangle(SuiteContext &ctx, VerificationReport &r)
{
    for (std::size_t k = 0; k < ctx.samples; ++k) {
        ModuliPoint pt;
        do {
            pt = {cplx(ctx.rng.uniform(-0.8, 0.8), ctx.rng.uniform(-0.8, 0.8)),
                  cplx(ctx.rng.uniform(-0.8, 0.8), ctx.rng.uniform(-0.8, 0.8))};
        } while (std::abs(pt.x) + std::abs(pt.y) > 0.8);
        run_case(r, ctx.tolerance, [&](CaseRecord &c) {
            c.inputs = point_json(pt);
            const Evaluation series = f2_series_eval(conformal, pt);
            const Evaluation integral = f2_euler_integral_eval(conformal, pt);
            c.outputs = json{{"series", to_json(series.value)},
                             {"integral", to_json(integral.value)},
                             {"integral_error", integral.error}};
            c.residual = rel(series.value, integral.value);
        });
    }
}

void suite_bilinear(SuiteContext &ctx, VerificationReport &r)
{
    for (const LambdaPair &lp : sample_real_domain(ctx.rng, ctx.samples)) {
        run_case(r, ctx.tolerance, [&](CaseRecord &c) {
            c.inputs = pair_json(lp);
            const PeriodVector pv = period_basis(lp);
            const cplx q = quadratic_relation(pv);
            const double scale = std::abs(pv[0] * pv[3]) + std::abs(pv[1] * pv[2]);
            const double h = positivity_pairing(pv);
            c.outputs = json{{"quadratic_relation", to_json(q)}, {"pairing", h}};
            // A non-positive pairing counts as residual 1.
            c.residual = std::max(std::abs(q) / scale, h > 0.0 ? 0.0 : 1.0);
        });
    }
}

void suite_mirror(SuiteContext &ctx, VerificationReport &r)
{
    for (const LambdaPair &lp : sample_mirror_domain(ctx.rng, ctx.samples)) {
        run_case(r, ctx.tolerance, [&](CaseRecord &c) {
            c.inputs = pair_json(lp);
            const TauPair tp = mirror_map(lp);
            const cplx lam1 = lambda_hauptmodul(tp.tau1);
            const cplx lam2 = lambda_hauptmodul(tp.tau2);
            const LambdaPair back = inverse_mirror(tp);
            const cplx q1 = theta2(tp.tau1) / theta3(tp.tau1);
            const cplx q2 = theta4(tp.tau2) / theta3(tp.tau2);
            const double e_lambda1 = std::abs(lam1 - lp.lambda1 * lp.lambda1);
            const double e_lambda2 = std::abs(1.0 - lam2 - lp.lambda2 * lp.lambda2);
            const double e_round = pair_distance(back, lp);
            const double e_sqrt = std::max(std::abs(q1 * q1 - std::sqrt(lam1)),
                                           std::abs(q2 * q2 - std::sqrt(1.0 - lam2)));
            c.outputs = json{{"tau1", to_json(tp.tau1.value())},
                             {"tau2", to_json(tp.tau2.value())},
                             {"lambda_tau1", to_json(lam1)},
                             {"one_minus_lambda_tau2", to_json(1.0 - lam2)},
                             {"hauptmodul_error", std::max(e_lambda1, e_lambda2)},
                             {"round_trip_error", e_round},
                             {"quotient_vs_sqrt", e_sqrt}};
            c.residual = std::max({e_lambda1, e_lambda2, e_round, e_sqrt});
        });
    }
}

void suite_modular(SuiteContext &ctx, VerificationReport &r)
{
    for (const LambdaPair &lp : sample_mirror_domain(ctx.rng, ctx.samples)) {
        run_case(r, ctx.tolerance, [&](CaseRecord &c) {
            c.inputs = pair_json(lp);
            const TauPair tp = mirror_map(lp);
            const cplx modular = pi0_modular(tp);
            const cplx elliptic = period_basis(lp)[0];
            c.outputs = json{{"tau1", to_json(tp.tau1.value())},
                             {"tau2", to_json(tp.tau2.value())},
                             {"pi0_theta", to_json(modular)},
                             {"pi0_elliptic", to_json(elliptic)}};
            c.residual = rel(modular, elliptic);
        });
    }
}

void suite_theta(SuiteContext &ctx, VerificationReport &r)
{
    for (std::size_t k = 0; k < ctx.samples; ++k) {
        const Tau t = sample_tau(ctx.rng, 0.4, 3.0);
        run_case(r, ctx.tolerance, [&](CaseRecord &c) {
            c.inputs = json{{"tau", to_json(t.value())}};
            const cplx t2 = theta2(t), t3 = theta3(t), t4 = theta4(t);
            const cplx k_lambda = ellint_K(lambda_hauptmodul(t));
            const double e_bridge = rel(k_lambda, 0.5 * pi * t3 * t3);
            const double e_jacobi = rel(std::pow(t3, 4), std::pow(t2, 4) + std::pow(t4, 4));
            c.outputs = json{{"K_of_lambda", to_json(k_lambda)},
                             {"half_pi_theta3_squared", to_json(0.5 * pi * t3 * t3)},
                             {"bridge_error", e_bridge},
                             {"jacobi_error", e_jacobi}};
            c.residual = std::max(e_bridge, e_jacobi);
        });
    }
}

void suite_weight(SuiteContext &ctx, VerificationReport &r)
{
    const std::vector<TauPair> samples = sample_tau_pairs(ctx.rng, ctx.samples);
    const ModularGroupElement generators[] = {{1, 2, 0, 1}, {1, 0, 2, 1}};
    json multipliers = json::array();
    for (const auto &g : generators) {
        for (int slot : {1, 2}) {
            run_case(r, ctx.tolerance, [&](CaseRecord &c) {
                c.inputs = json{{"generator", json::array({json::array({g.a, g.b}), json::array({g.c, g.d})})},
                                {"slot", slot}};
                const MultiplierProbe p = summarize_multiplier(g, slot, samples);
                json ratios = json::array();
                for (const cplx &z : p.ratios) {
                    ratios.push_back(to_json(z));
                }
                c.outputs = json{{"epsilon", to_json(p.epsilon)},
                                 {"variance", p.variance},
                                 {"modulus_error", p.modulus_error},
                                 {"ratios", ratios}};
                c.residual = std::max(p.variance, p.modulus_error);
                multipliers.push_back(json{{"generator", c.inputs["generator"]},
                                           {"slot", slot},
                                           {"epsilon", to_json(p.epsilon)}});
            });
        }
    }
    json taus = json::array();
    for (const auto &tp : samples) {
        taus.push_back(json::array({to_json(tp.tau1.value()), to_json(tp.tau2.value())}));
    }
    r.notes = json{{"tau_samples", taus}, {"multipliers", multipliers}};
}

void suite_monodromy(SuiteContext &ctx, VerificationReport &r)
{
    const PfaffianSystem1D s = system_2f1({0.5, 0.5, 1.0});
    std::vector<IntMatrix2> rounded;
    for (const cplx around : {cplx(0.0), cplx(1.0)}) {
        run_case(r, ctx.tolerance, [&](CaseRecord &c) {
            c.inputs = json{{"around", to_json(around)}, {"basepoint", to_json(default_basepoint)}};
            const MonodromyResult m = monodromy_2f1(s, around);
            c.outputs = json{{"matrix", matrix_json(m.matrix)},
                             {"integrality_error", m.integrality_error},
                             {"transport_error", m.transport_error}};
            // A failed rounding leaves integrality_error above the tolerance.
            double residual = m.integrality_error;
            if (m.integrality_error <= 0.5) {
                IntMatrix2 k;
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        k(i, j) = std::llround(m.matrix(i, j).real());
                    }
                }
                const bool member = gamma2_membership(k);
                const double trace_gap = std::abs(m.matrix.trace() - 2.0);
                c.outputs["rounded"] = matrix_json(k);
                c.outputs["gamma2_member"] = member;
                c.outputs["trace_minus_two"] = trace_gap;
                residual = std::max({residual, trace_gap, member ? 0.0 : 1.0});
                rounded.push_back(k);
            }
            c.residual = residual;
        });
    }
    if (rounded.size() == 2) {
        r.notes = json{{"trace_of_product", (rounded[0] * rounded[1]).trace()}};
    }
}

void suite_flatness(SuiteContext &ctx, VerificationReport &r)
{
    const PfaffianSystem2D sys = system_f2(conformal);
    const F2Params generic{cplx(0.3, 0.1), 0.7, cplx(0.4, -0.2), 1.5, cplx(1.2, 0.3)};
    const PfaffianSystem2D sys_generic = system_f2(generic);
    for (std::size_t k = 0; k < ctx.samples; ++k) {
        ModuliPoint pt;
        double radius = 0.0;
        do {
            pt = {cplx(ctx.rng.uniform(-0.7, 0.7), ctx.rng.uniform(-0.7, 0.7)),
                  cplx(ctx.rng.uniform(-0.7, 0.7), ctx.rng.uniform(-0.7, 0.7))};
            const double room = 0.95 - std::abs(pt.x) - std::abs(pt.y);
            radius = std::min(0.5 * sys.clearance(pt.x, pt.y), 0.5 * room);
        } while (radius < 0.02);
        run_case(r, ctx.tolerance, [&](CaseRecord &c) {
            c.inputs = point_json(pt);
            const double flat = flatness_residual(sys, pt, radius);
            const double flat_generic = flatness_residual(sys_generic, pt, radius);
            const double horizontal = f2_section_residual(
                conformal, [](cplx x, cplx y) { return f2_series(conformal, {x, y}); }, pt, radius);
            c.outputs = json{{"radius", radius},
                             {"flatness", flat},
                             {"flatness_generic", flat_generic},
                             {"horizontality", horizontal}};
            c.residual = std::max({flat, flat_generic, horizontal});
        });
    }
}

using SuiteFn = void (*)(SuiteContext &, VerificationReport &);

struct SuiteEntry
{
    SuiteInfo info;
    SuiteFn run;
};

const std::vector<SuiteEntry> &entries()
{
    static const std::vector<SuiteEntry> table = {
        {{"factorization", 1e-9, 100, "Pi0 against the F2 double series on the theorem domain"},
         suite_factorization},
        {{"pde", 1e-7, 20, "all four periods through invert_T in both F2 equations"}, suite_pde},
        {{"triangle", 1e-8, 20, "F2 double series against the Euler double integral"},
         suite_triangle},
        {{"bilinear", 1e-12, 50, "quadratic relation and positive pairing on real samples"},
         suite_bilinear},
        {{"mirror", 1e-10, 50, "Hauptmodul round trips of the mirror map"}, suite_mirror},
        {{"modular", 1e-10, 50, "theta expression of Pi0 through the coordinate bridge"},
         suite_modular},
        {{"theta", 1e-11, 50, "K(lambda(tau)) = (pi/2) theta3^2 and the Jacobi identity"},
         suite_theta},
        {{"weight", 1e-8, 5, "multiplier ratios of the Gamma(2) generators in each slot"},
         suite_weight},
        {{"monodromy", 1e-8, 0, "Legendre monodromy around z = 0 and z = 1"}, suite_monodromy},
        {{"flatness", 1e-8, 10, "flatness and horizontality of the F2 connection"},
         suite_flatness},
    };
    return table;
}

double elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

} // namespace

const std::vector<SuiteInfo> &suite_catalog()
{
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto &e : entries()) {
            v.push_back(e.info);
        }
        return v;
    }();
    return infos;
}

const SuiteInfo *find_suite(const std::string &name)
{
    for (const auto &info : suite_catalog()) {
        if (info.name == name) {
            return &info;
        }
    }
    return nullptr;
}

VerificationReport run_suite(const std::string &name, const RunConfig &config)
{
    config.validate();
    const auto &table = entries();
    for (std::size_t k = 0; k < table.size(); ++k) {
        const SuiteEntry &e = table[k];
        if (e.info.name != name) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        const auto tol = config.tolerances.find(name);
        SuiteContext ctx{e.info, CounterRng(splitmix64(config.rng_seed + k)),
                         e.info.default_samples == 0 ? 0 : config.sample_count.value_or(e.info.default_samples),
                         tol == config.tolerances.end() ? e.info.default_tolerance : tol->second};
        VerificationReport report;
        report.suite = name;
        report.tolerance = ctx.tolerance;
        report.samples = ctx.samples;
        report.seed = config.rng_seed;
        e.run(ctx, report);
        report.finalize();
        if (config.timing) {
            report.duration_ms = elapsed_ms(start);
        }
        return report;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

CombinedReport run_all(const RunConfig &config)
{
    const auto start = std::chrono::steady_clock::now();
    CombinedReport all;
    for (const auto &info : suite_catalog()) {
        all.suites.push_back(run_suite(info.name, config));
    }
    all.finalize();
    if (config.timing) {
        all.duration_ms = elapsed_ms(start);
    }
    return all;
}

} // namespace traintrack::cli
