// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "btzharvest/errors.hpp"
#include "btzharvest/oracle.hpp"
#include "btzharvest/sweep.hpp"

namespace {

using namespace btzharvest;
using cplx = std::complex<double>;

struct Verdict {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Verdict()>& check) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = check();
    } catch (const std::exception& e) {
        v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::printf("%s  %-22s %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

ExperimentPoint point(double dA, double gap) {
    ExperimentPoint p;
    p.dA_over_sigma = dA;
    p.gap_sigma = gap;
    return p;
}

// (dA, gap) subsampled from {0.5, 1, 5, 100} x {0.01, 0.1, 1}.
const std::vector<std::pair<double, double>> kOraclePoints{
    {0.5, 0.01}, {1.0, 0.1}, {5.0, 1.0}, {100.0, 0.1}, {0.5, 1.0}};

Verdict oracle_equivalence() {
    double worst = 0.0;
    for (auto [dA, gap] : kOraclePoints) {
        const Configuration c = configure(point(dA, gap));
        const double pa = transition_probability(c.spacetime, c.a, {}).value;
        const double pb = transition_probability(c.spacetime, c.b, {}).value;
        const double x = std::abs(nonlocal_X(c.spacetime, c.a, c.b, {}).value);
        worst = std::max({worst, rel(pa, oracle_P(c.spacetime, c.a).value.real()),
                          rel(pb, oracle_P(c.spacetime, c.b).value.real()),
                          rel(x, std::abs(oracle_X(c.spacetime, c.a, c.b).value))});
    }
    return {worst < 1e-3, fmt("max relative deviation %.2e over P_A, P_B, |X| at 5 points (tol 1e-3)", worst)};
}

Verdict symmetry() {
    const BtzSpacetime st(10.0, 1.0);
    double worst_p = 0.0;
    bool beta_zero = true;
    for (double d : {0.05, 1.0, 7.0}) {
        for (double gap : {0.01, 1.0}) {
            const StaticDetector a = detector_at_horizon_distance(st, d, 0.9, gap);
            const StaticDetector b = detector_at_horizon_distance(st, d, 0.0, gap);
            const ResponseResult r = respond(st, a, b, {});
            worst_p = std::max(worst_p, std::abs(r.p_a - r.p_b) / r.p_a);
            beta_zero = beta_zero && pair_coefficients(st, a, b).beta == 0.0;
        }
    }
    double worst_trip = 0.0;
    for (double d = 1e-3; d <= 300.0; d *= 1.1) {
        const double r = radius_at_horizon_distance(st, d);
        worst_trip = std::max(worst_trip, rel(radius_at_horizon_distance(st, proper_distance(st, st.horizon(), r)), r));
    }
    const bool pass = worst_p < 1e-10 && beta_zero && worst_trip < 1e-12;
    return {pass, fmt("|P_A-P_B|/P_A %.1e, round trip %.1e, ", worst_p, worst_trip) +
                      (beta_zero ? "beta_X = 0 at equal radii" : "beta_X nonzero at equal radii")};
}

// Image terms n+1 .. n+5 beyond what the adaptive truncation used.
double extra_p_terms(const BtzSpacetime& st, const StaticDetector& det, int n_used) {
    const DetectorCoefficients c = detector_coefficients(st, det);
    double sum = 0.0;
    for (int n = n_used + 1; n <= n_used + 5; ++n) {
        auto term = [&](double alpha) {
            return singular_cosh_integral({c.a, c.beta, alpha, PhaseMode::complex_exp, Branch::minus_i}, {}).value.real();
        };
        sum += 2.0 * c.K * (term(c.alpha_minus(n)) - st.zeta() * term(c.alpha_plus(n)));
    }
    return sum;
}

cplx extra_x_terms(const BtzSpacetime& st, const StaticDetector& a, const StaticDetector& b, int n_used) {
    const PairCoefficients c = pair_coefficients(st, a, b);
    cplx sum = 0.0;
    for (int m = n_used + 1; m <= n_used + 5; ++m) {
        for (int n : {m, -m}) {
            auto term = [&](double alpha) {
                return singular_cosh_integral({c.a, c.beta, alpha, PhaseMode::cosine, Branch::plus_i}, {}).value;
            };
            sum -= c.K * (term(c.alpha_minus(n)) - st.zeta() * term(c.alpha_plus(n)));
        }
    }
    return sum;
}

Verdict convergence() {
    std::vector<ExperimentPoint> points;
    for (auto [dA, gap] : kOraclePoints) points.push_back(point(dA, gap));
    for (double gap : {0.01, 0.1, 1.0}) points.push_back(point(0.01, gap));
    for (double zeta : {-1.0, 0.0}) {
        ExperimentPoint p = point(1.0, 0.1);
        p.zeta = zeta;
        points.push_back(p);
    }
    ExperimentPoint small_hole = point(1.0, 0.1);
    small_hole.mass = 0.01;
    points.push_back(small_hole);

    double worst = 0.0;
    for (const ExperimentPoint& p : points) {
        const Configuration c = configure(p);
        for (const StaticDetector* d : {&c.a, &c.b}) {
            const ResponseEstimate r = transition_probability(c.spacetime, *d, {});
            worst = std::max(worst, std::abs(extra_p_terms(c.spacetime, *d, r.n_terms)) / r.value);
        }
        const NonlocalEstimate x = nonlocal_X(c.spacetime, c.a, c.b, {});
        worst = std::max(worst, std::abs(extra_x_terms(c.spacetime, c.a, c.b, x.n_terms)) / std::abs(x.value));
    }

    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    QuadratureSettings coarse;
    coarse.rel_tol = 1e-6;
    QuadratureSettings fine;
    fine.rel_tol = 1e-13;
    fine.abs_tol = 1e-20;
    int bounded = 0;
    const int total = 50;
    for (int i = 0; i < total; ++i) {
        const SingularKernelSpec s{std::exp(std::log(0.02) + unit(rng) * std::log(250.0)), 6.0 * unit(rng) - 3.0,
                                   std::exp(std::log(1e-3) + unit(rng) * std::log(1e4)),
                                   unit(rng) < 0.5 ? PhaseMode::cosine : PhaseMode::complex_exp,
                                   unit(rng) < 0.5 ? Branch::plus_i : Branch::minus_i};
        const SingularIntegral lo = singular_cosh_integral(s, coarse);
        const SingularIntegral hi = singular_cosh_integral(s, fine);
        if (std::abs(lo.value - hi.value) <= lo.error) ++bounded;
    }
    const bool pass = worst < 1e-8 && bounded >= 48;
    return {pass, fmt("N -> N+5 changes P_D, X by at most %.1e (tol 1e-8); estimates bound %g/50 reruns (need 48)",
                      worst, bounded)};
}

Verdict thermal_limit() {
    QuadratureSettings q;
    q.abs_tol = 1e-30;
    double worst = 0.0;
    for (double gap : {0.1, 1.0, 5.0}) {
        const double exact = std::sqrt(std::numbers::pi) / 2.0 * std::erfc(gap);
        worst = std::max(worst, rel(thermal_gaussian_integral(1.0, gap, 1e-5 * gap, q).value, exact));
    }
    return {worst < 1e-6, fmt("T/Omega = 1e-5, max relative deviation from erfc limit %.1e (tol 1e-6)", worst)};
}

// First separation on a fine grid where the concurrence is exactly zero.
Verdict separation_sweep() {
    double previous_zero = 0.0;
    std::string detail;
    bool pass = true;
    for (double gap : {0.01, 0.1, 1.0}) {
        SweepSpec s;
        s.fixed = {{"gap_sigma", gap}, {"dA_over_sigma", 1.0}};
        s.axis = {"dAB_over_sigma", AxisScale::linear, 0.5, 10.0, 381};
        const auto rows = run_sweep(s, 1);
        double zero = 0.0;
        double last = HUGE_VAL;
        for (const SweepRow& r : rows) {
            if (!r.ok()) pass = false;
            if (zero == 0.0) {
                if (r.concurrence == 0.0) {
                    zero = r.input.dAB_over_sigma;
                } else if (!(r.concurrence < last)) {
                    pass = false;
                }
            } else if (r.concurrence != 0.0) {
                pass = false;
            }
            last = r.concurrence;
        }
        pass = pass && zero > 0.5 && zero > previous_zero;
        previous_zero = zero;
        detail += detail.empty() ? "zero crossing dAB at gap " : ", ";
        detail += fmt("%g: %.3g", gap, zero);
    }
    return {pass, detail + " (strictly decreasing, then 0)"};
}

Verdict sudden_death_and_gap() {
    bool pass = true;
    std::string detail = "d_death";
    for (double gap : {0.01, 0.1, 1.0}) {
        const DeathLocation d = find_sudden_death(point(1.0, gap), 1e-3, 10.0, {});
        pass = pass && d.distance > 0.0 && d.margin_lo < 0.0 && d.margin_hi > 0.0;
        detail += fmt(" %.4g", d.distance);
    }
    GapSearch search;
    search.gap_lo = 0.05;
    search.gap_hi = 2.95;
    const GapOptimum death = optimize_gap(point(1.0, 0.1), GapObjective::min_death_distance, search, {});
    const GapOptimum peak = optimize_gap(point(100.0, 0.1), GapObjective::max_far_concurrence, search, {});
    pass = pass && !death.at_edge && !peak.at_edge && std::abs(death.gap - peak.gap) > 0.1;
    detail += fmt("; min d_death at gap %.4g (%.4g)", death.gap, death.value);
    detail += fmt("; max far concurrence at gap %.4g (%.4g)", peak.gap, peak.value);
    return {pass, detail};
}

struct Decomposition {
    double p_variation;  // (max - min) / max of P_A over the region
    double x_ratio;      // |X| nearest the horizon over |X| furthest
    double p_growth;     // P_A nearest the horizon over P_A furthest
};

Decomposition decompose(double gap) {
    const double death = find_sudden_death(point(1.0, gap), 1e-3, 10.0, {}).distance;
    SweepSpec s;
    s.fixed = {{"gap_sigma", gap}};
    s.axis = {"dA_over_sigma", AxisScale::log, 0.1 * death, 2.0 * death, 40};
    const auto rows = run_sweep(s, 1);
    double lo = HUGE_VAL, hi = 0.0;
    for (const SweepRow& r : rows) {
        if (!r.ok()) throw ConsistencyError("sweep row failed: " + r.status);
        lo = std::min(lo, r.p_a);
        hi = std::max(hi, r.p_a);
    }
    return {(hi - lo) / hi, rows.front().abs_x / rows.back().abs_x, rows.front().p_a / rows.back().p_a};
}

Verdict decomposition() {
    const Decomposition cold = decompose(0.01);
    const Decomposition hot = decompose(1.0);
    const bool pass = cold.p_variation < 0.1 && cold.x_ratio < 0.5 && hot.p_growth > 2.0;
    return {pass, fmt("gap 0.01: P_A varies %.1f%%, |X| falls to %.0f%%", 100.0 * cold.p_variation,
                      100.0 * cold.x_ratio) +
                      fmt("; gap 1: P_A grows x%.2f toward the horizon", hot.p_growth)};
}

Verdict positivity_scaling() {
    const QuadratureSettings q;
    double lowest = HUGE_VAL;
    for (double zeta : {-1.0, 0.0, 1.0}) {
        for (double gap : {0.01, 0.3, 1.0, 3.0, 6.0}) {
            for (double dA = 1e-3; dA <= 300.0; dA *= 3.0) {
                ExperimentPoint p = point(dA, gap);
                p.zeta = zeta;
                const Configuration c = configure(p);
                lowest = std::min(lowest, transition_probability(c.spacetime, c.a, q).value);
            }
        }
    }
    bool exact = true;
    double worst_measure = 0.0;
    for (double lambda : {0.25, 0.37, 2.0, 3.1}) {
        ExperimentPoint p = point(0.8, 0.4);
        const Configuration c1 = configure(p);
        p.lambda_tilde = lambda;
        const Configuration cl = configure(p);
        const ResponseResult r1 = respond(c1.spacetime, c1.a, c1.b, q);
        const ResponseResult rl = respond(cl.spacetime, cl.a, cl.b, q);
        const double l2 = lambda * lambda;
        exact = exact && rl.p_a == l2 * r1.p_a && rl.p_b == l2 * r1.p_b && rl.x == l2 * r1.x;
        worst_measure = std::max({worst_measure, rel(rl.concurrence, l2 * r1.concurrence),
                                  rel(rl.negativity, l2 * r1.negativity)});
    }
    const bool pass = lowest >= -q.abs_tol && exact && worst_measure < 1e-14;
    return {pass, fmt("min P_D %.2e (floor -1e-15); P, X scale exactly; measures within %.1e", lowest, worst_measure) +
                      (exact ? "" : " [P or X not exact]")};
}

}  // namespace

int main() {
    report("oracle-equivalence", oracle_equivalence);
    report("symmetry", symmetry);
    report("convergence", convergence);
    report("thermal-limit", thermal_limit);
    report("separation-sweep", separation_sweep);
    report("sudden-death-and-gap", sudden_death_and_gap);
    report("decomposition", decomposition);
    report("positivity-scaling", positivity_scaling);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
