#include "btzharvest/response.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "btzharvest/errors.hpp"
#include "btzharvest/measures.hpp"
#include "hyperbolic.hpp"

namespace btzharvest {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// 2 asinh(sqrt((c sinh^2(h) + b) / e)) for c, e > 0 and b >= 0, stable for
// tiny arguments and for |h| large enough that sinh^2 overflows.
double image_alpha(double c, double h, double b, double e) {
    h = std::abs(h);
    if (h < 300.0) {
        const double sh = std::sinh(h);
        return 2.0 * std::asinh(std::sqrt((c * sh * sh + b) / e));
    }
    const double log_s = 0.5 * (std::log(c) - std::log(e)) + detail::log_sinh(h);
    return 2.0 * (log_s + std::numbers::ln2);
}

// Re-throws numerical failures with the observable and image index attached.
template <typename F>
auto with_context(const std::string& where, F&& f) {
    try {
        return std::forward<F>(f)();
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(where + ": " + e.what(), e.best_value(), e.error_estimate());
    } catch (const DomainError& e) {
        throw DomainError(where + ": " + e.what());
    } catch (const ConsistencyError& e) {
        throw ConsistencyError(where + ": " + e.what());
    }
}

std::string image_label(const char* observable, int n) {
    return std::string(observable) + " image n=" + std::to_string(n);
}

}  // namespace

double DetectorCoefficients::alpha_minus(int n) const {
    const double h = kPi * n * horizon / ell;
    return image_alpha(radius * radius, h, 0.0, excess * excess);
}

double DetectorCoefficients::alpha_plus(int n) const {
    const double h = kPi * n * horizon / ell;
    return image_alpha(radius * radius, h, horizon * horizon, excess * excess);
}

DetectorCoefficients detector_coefficients(const BtzSpacetime& st, const StaticDetector& det) {
    validate(st, det);
    const double r_h = st.horizon();
    const double ell = st.ell();
    const double sigma = det.width;
    const double gamma = redshift_factor(st, det.radius);

    DetectorCoefficients c;
    c.kappa = sigma / 2.0;
    c.K = 1.0 / (2.0 * std::sqrt(2.0 * kPi));
    c.temperature = local_temperature(st, det.radius);
    c.a = gamma * gamma * ell * ell * ell * ell / (4.0 * sigma * sigma * r_h * r_h);
    c.beta = gamma * det.gap * ell * ell / r_h;
    c.radius = det.radius;
    c.horizon = r_h;
    c.excess = gamma * ell;
    c.ell = ell;
    return c;
}

double PairCoefficients::alpha_minus(int n) const {
    const double h = 0.5 * (horizon / ell) * (delta_phi + 2.0 * kPi * n);
    const double rr = radius_a * radius_b;
    const double dr = radius_a - radius_b;
    const double radial = horizon * horizon * dr * dr / (2.0 * (rr - horizon * horizon + excess_product));
    return image_alpha(rr, h, radial, excess_product);
}

double PairCoefficients::alpha_plus(int n) const {
    const double h = 0.5 * (horizon / ell) * (delta_phi + 2.0 * kPi * n);
    const double rr = radius_a * radius_b;
    const double r_h2 = horizon * horizon;
    // R_A R_B - ell^2 gamma_A gamma_B, rationalised.
    const double rr_minus_e =
        r_h2 * (radius_a * radius_a + radius_b * radius_b - r_h2) / (rr + excess_product);
    return image_alpha(rr, h, 0.5 * (rr_minus_e + r_h2), excess_product);
}

PairCoefficients pair_coefficients(const BtzSpacetime& st, const StaticDetector& det_a,
                                   const StaticDetector& det_b) {
    validate(st, det_a);
    validate(st, det_b);
    if (det_a.gap != det_b.gap || det_a.width != det_b.width) {
        throw DomainError("closed-form X needs detectors with equal gaps and switching widths");
    }
    const double r_h = st.horizon();
    const double ell = st.ell();
    const double sigma = det_a.width;
    const double gap = det_a.gap;
    const double ga = redshift_factor(st, det_a.radius);
    const double gb = redshift_factor(st, det_b.radius);
    const double s = ga * ga + gb * gb;

    PairCoefficients c;
    const double sum = ga + gb;
    c.K = std::sqrt(ga * gb / s) / (2.0 * std::sqrt(kPi)) *
          std::exp(-0.5 * sigma * sigma * gap * gap * sum * sum / s);
    c.a = ga * ga * gb * gb / (2.0 * sigma * sigma * s) * ell * ell * ell * ell / (r_h * r_h);
    c.beta = gap * ga * gb * (ga - gb) / s * ell * ell / r_h;
    c.radius_a = det_a.radius;
    c.radius_b = det_b.radius;
    c.horizon = r_h;
    c.excess_product = ell * ell * ga * gb;
    c.ell = ell;
    c.delta_phi = det_a.angle - det_b.angle;
    return c;
}

ResponseEstimate transition_probability(const BtzSpacetime& st, const StaticDetector& det,
                                        const QuadratureSettings& settings) {
    validate(settings);
    const DetectorCoefficients c = detector_coefficients(st, det);
    const double zeta = st.zeta();

    auto image = [&](double alpha, int n) {
        const SingularKernelSpec spec{c.a, c.beta, alpha, PhaseMode::complex_exp, Branch::minus_i};
        return with_context(image_label("P_D", n), [&] { return singular_cosh_integral(spec, settings); });
    };

    const Estimate<double> thermal = with_context("P_D thermal term", [&] {
        return thermal_gaussian_integral(det.width, det.gap, c.temperature, settings);
    });
    double p = c.kappa * thermal.value;
    double err = c.kappa * thermal.error;

    // n = 0: the minus branch is the thermal term above; only the boundary
    // reflection remains.
    if (zeta != 0.0) {
        const SingularIntegral reflected = image(c.alpha_plus(0), 0);
        p -= zeta * c.K * reflected.value.real();
        err += std::abs(zeta) * c.K * reflected.error;
    }

    int n = 1;
    for (;; ++n) {
        if (n > settings.n_max_images) {
            throw ConvergenceError("P_D: image sum not converged within n_max_images", p, err);
        }
        const SingularIntegral minus = image(c.alpha_minus(n), n);
        double term = minus.value.real();
        double term_err = minus.error;
        if (zeta != 0.0) {
            const SingularIntegral plus = image(c.alpha_plus(n), n);
            term -= zeta * plus.value.real();
            term_err += std::abs(zeta) * plus.error;
        }
        term *= 2.0 * c.K;
        p += term;
        err += 2.0 * c.K * term_err;
        if (std::abs(term) <= settings.tail_tol * std::abs(p)) break;
    }

    if (p < -settings.abs_tol) {
        throw ConsistencyError("P_D came out negative (" + std::to_string(p) + ")");
    }
    const double lambda2 = det.coupling * det.coupling;
    return {lambda2 * p, lambda2 * err, n};
}

NonlocalEstimate nonlocal_X(const BtzSpacetime& st, const StaticDetector& det_a,
                            const StaticDetector& det_b, const QuadratureSettings& settings) {
    validate(settings);
    const PairCoefficients c = pair_coefficients(st, det_a, det_b);
    const double zeta = st.zeta();

    // K_X [I(alpha^-_n) - zeta I(alpha^+_n)] with its error.
    auto image = [&](int n) {
        return with_context(image_label("X", n), [&] {
            const SingularKernelSpec minus{c.a, c.beta, c.alpha_minus(n), PhaseMode::cosine,
                                           Branch::plus_i};
            SingularIntegral r = singular_cosh_integral(minus, settings);
            Estimate<cplx> out{r.value, r.error};
            if (zeta != 0.0) {
                const SingularKernelSpec plus{c.a, c.beta, c.alpha_plus(n), PhaseMode::cosine,
                                              Branch::plus_i};
                r = singular_cosh_integral(plus, settings);
                out.value -= zeta * r.value;
                out.error += std::abs(zeta) * r.error;
            }
            out.value *= c.K;
            out.error *= c.K;
            return out;
        });
    };

    const bool mirror_symmetric = c.delta_phi == 0.0;
    Estimate<cplx> first = image(0);
    cplx sum = first.value;
    double err = first.error;
    int n = 1;
    for (;; ++n) {
        if (n > settings.n_max_images) {
            throw ConvergenceError("X: image sum not converged within n_max_images", std::abs(sum), err);
        }
        const Estimate<cplx> up = image(n);
        const Estimate<cplx> down = mirror_symmetric ? up : image(-n);
        const cplx pair = up.value + down.value;
        sum += pair;
        err += up.error + down.error;
        if (std::abs(pair) <= settings.tail_tol * std::abs(sum)) break;
    }

    const double lambda2 = det_a.coupling * det_b.coupling;
    return {-lambda2 * sum, std::abs(lambda2) * err, n};
}

double ResponseResult::margin() const { return harvesting_margin(p_a, p_b, x); }

ResponseResult respond(const BtzSpacetime& st, const StaticDetector& det_a,
                       const StaticDetector& det_b, const QuadratureSettings& settings) {
    const ResponseEstimate pa = with_context("detector A", [&] { return transition_probability(st, det_a, settings); });
    const ResponseEstimate pb = with_context("detector B", [&] { return transition_probability(st, det_b, settings); });
    const NonlocalEstimate x = nonlocal_X(st, det_a, det_b, settings);

    ResponseResult r;
    // Within abs_tol of zero is zero.
    r.p_a = std::max(0.0, pa.value);
    r.p_b = std::max(0.0, pb.value);
    r.x = x.value;
    r.concurrence = concurrence(r.p_a, r.p_b, r.x);
    r.negativity = negativity(r.p_a, r.p_b, r.x);
    r.n_terms_used = std::max({pa.n_terms, pb.n_terms, x.n_terms});
    r.est_error = pa.error + pb.error + x.error;
    return r;
}

}  // namespace btzharvest
