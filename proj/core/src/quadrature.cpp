#include "btzharvest/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "btzharvest/errors.hpp"
#include "hyperbolic.hpp"

namespace btzharvest {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

using detail::inv_sqrt_sinh_product;

int oscillation_pieces(double beta, double y_lo, double y_hi) {
    const double cycles = std::abs(beta) * (y_hi - y_lo) / (2.0 * kPi);
    return static_cast<int>(std::clamp(std::ceil(2.0 * cycles), 4.0, 256.0));
}

void append_split(std::vector<adaptive::Segment>& out, const adaptive::Integrand& f, double lo,
                  double hi, int pieces) {
    const double step = (hi - lo) / pieces;
    for (int i = 0; i < pieces; ++i) {
        const double a = lo + i * step;
        const double b = (i + 1 == pieces) ? hi : lo + (i + 1) * step;
        out.push_back({f, a, b});
    }
}

adaptive::Limits limits_from(const QuadratureSettings& s) {
    return {s.rel_tol, s.abs_tol, s.max_panel_depth, 20000};
}

}  // namespace

void validate(const QuadratureSettings& s) {
    const bool ok = s.rel_tol > 0.0 && s.abs_tol > 0.0 && s.tail_tol > 0.0 && s.tail_tol < 1.0 &&
                    s.eps_oracle > 0.0 && s.max_panel_depth >= 1 && s.n_max_images >= 1;
    if (!ok) throw DomainError("quadrature settings: tolerances must be positive, depths >= 1");
}

SingularIntegral singular_cosh_integral(const SingularKernelSpec& spec,
                                        const QuadratureSettings& settings) {
    validate(settings);
    const double a = spec.a;
    const double beta = spec.beta;
    const double alpha = spec.alpha;
    if (!(a >= 0.0) || !(alpha >= 0.0) || !std::isfinite(a) || !std::isfinite(alpha) ||
        !std::isfinite(beta)) {
        throw DomainError("singular_cosh_integral: need finite a >= 0 and alpha >= 0");
    }
    if (alpha == 0.0) {
        throw DomainError(
            "singular_cosh_integral: alpha = 0 leaves a non-integrable 1/y singularity at the origin");
    }

    const double log_tol = std::log(1.0 / settings.tail_tol);
    const double y_kernel = alpha + 2.0 * log_tol + 1.0;
    const double y_gauss = a > 0.0 ? std::sqrt(log_tol / a) : HUGE_VAL;
    const double y_max = std::min(y_gauss, y_kernel);

    auto damped_phase = [a, beta, mode = spec.phase](double y) -> cplx {
        const double g = std::exp(-a * y * y);
        if (mode == PhaseMode::cosine) return {g * std::cos(beta * y), 0.0};
        return {g * std::cos(beta * y), -g * std::sin(beta * y)};
    };

    std::vector<adaptive::Segment> segments;

    // Below the singularity: y = alpha cos(phi), phi in [phi_lo, pi/2].
    {
        const double phi_lo = y_max < alpha ? std::acos(y_max / alpha) : 0.0;
        auto below = [alpha, damped_phase](double phi) -> cplx {
            const double c = std::cos(phi);
            const double s_half = std::sin(0.5 * phi);
            const double jac = alpha * std::sin(phi) *
                               inv_sqrt_sinh_product(0.5 * alpha * (1.0 + c), alpha * s_half * s_half);
            return damped_phase(alpha * c) * jac;
        };
        append_split(segments, below, phi_lo, 0.5 * kPi,
                     oscillation_pieces(beta, 0.0, std::min(alpha, y_max)));
    }

    // Above it: y = alpha cosh(w), w in [0, acosh(y_max / alpha)].
    if (y_max > alpha) {
        const cplx rotation = spec.branch == Branch::minus_i ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
        auto above = [alpha, damped_phase, rotation](double w) -> cplx {
            const double ch = std::cosh(0.5 * w);
            const double sh = std::sinh(0.5 * w);
            const double jac =
                alpha * std::sinh(w) * inv_sqrt_sinh_product(alpha * ch * ch, alpha * sh * sh);
            return rotation * damped_phase(alpha * std::cosh(w)) * jac;
        };
        append_split(segments, above, 0.0, std::acosh(y_max / alpha),
                     oscillation_pieces(beta, alpha, y_max));
    }

    const adaptive::Outcome out = adaptive::integrate(segments, limits_from(settings));
    if (!out.converged) {
        throw ConvergenceError("singular_cosh_integral: panel refinement exhausted", std::abs(out.value),
                               out.error);
    }
    return {out.value, out.error, out.evaluations};
}

Estimate<double> thermal_gaussian_integral(double sigma, double gap, double temperature,
                                           const QuadratureSettings& settings) {
    validate(settings);
    if (!(sigma > 0.0) || !(temperature > 0.0) || !std::isfinite(gap) || !std::isfinite(sigma)) {
        throw DomainError("thermal_gaussian_integral: need sigma > 0, T > 0, finite gap");
    }

    auto integrand = [sigma, gap, temperature](double y) -> cplx {
        const double x = y / temperature;
        const double fermi = x > 0.0 ? std::exp(-x) / (1.0 + std::exp(-x)) : 1.0 / (1.0 + std::exp(x));
        const double u = sigma * (y - gap);
        return {std::exp(-u * u) * fermi, 0.0};
    };

    const double reach = (std::sqrt(std::log(1.0 / settings.tail_tol)) + 3.0) / sigma;
    const double lo = std::min(gap, 0.0) - reach;
    const double hi = std::max(gap, 0.0) + reach;

    // Breakpoints at the Fermi step, its width scale, and the Gaussian centre.
    std::vector<double> cuts{lo, hi, gap};
    for (double k : {0.0, 1.0, 10.0, 40.0}) {
        cuts.push_back(k * temperature);
        cuts.push_back(-k * temperature);
    }
    std::erase_if(cuts, [&](double c) { return c < lo || c > hi; });
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<adaptive::Segment> segments;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) segments.push_back({integrand, cuts[i], cuts[i + 1]});

    const adaptive::Outcome out = adaptive::integrate(segments, limits_from(settings));
    if (!out.converged) {
        throw ConvergenceError("thermal_gaussian_integral: panel refinement exhausted", out.value.real(),
                               out.error);
    }
    return {out.value.real(), out.error};
}

}  // namespace btzharvest
