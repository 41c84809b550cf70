#include "btzharvest/oracle.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "btzharvest/errors.hpp"

namespace btzharvest {

namespace {

using cplx = std::complex<double>;

enum class Element { response, nonlocal, correlation };

void silence_gsl() {
    static std::once_flag once;
    std::call_once(once, [] { gsl_set_error_handler_off(); });
}

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};
using Workspace = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

template <typename F>
double trampoline(double x, void* params) {
    return (*static_cast<F*>(params))(x);
}

// Real and imaginary parts of a complex integrand, each with gsl qag.
template <typename F>
cplx qag_complex(F&& f, double lo, double hi, double rel_tol, gsl_integration_workspace* ws,
                 std::size_t limit, const char* what) {
    auto re = [&](double x) { return f(x).real(); };
    auto im = [&](double x) { return f(x).imag(); };
    double out_re = 0.0, out_im = 0.0, err_re = 0.0, err_im = 0.0;
    gsl_function g_re{&trampoline<decltype(re)>, &re};
    gsl_function g_im{&trampoline<decltype(im)>, &im};
    const int s_re = gsl_integration_qag(&g_re, lo, hi, 0.0, rel_tol, limit, GSL_INTEG_GAUSS21, ws, &out_re, &err_re);
    const int s_im = gsl_integration_qag(&g_im, lo, hi, 0.0, rel_tol, limit, GSL_INTEG_GAUSS21, ws, &out_im, &err_im);
    for (int status : {s_re, s_im}) {
        // The imaginary part of P_D vanishes identically, so its relative
        // tolerance can never be met; accept GSL_EROUND there.
        if (status != GSL_SUCCESS && status != GSL_EROUND) {
            throw ConvergenceError(std::string("oracle ") + what + ": " + gsl_strerror(status),
                                   std::hypot(out_re, out_im), std::hypot(err_re, err_im));
        }
    }
    return {out_re, out_im};
}

// Gaussian precisions gamma^2 / sigma^2 of the two switching functions in coordinate time.
struct Box {
    double p;
    double q;
    double u_width;  // e-fold width of the profile in u = t - t'
};

Box box_of(const BtzSpacetime& st, const StaticDetector& a, const StaticDetector& b) {
    const double ga = redshift_factor(st, a.radius);
    const double gb = redshift_factor(st, b.radius);
    const double p = ga * ga / (a.width * a.width);
    const double q = gb * gb / (b.width * b.width);
    return {p, q, std::sqrt((p + q) / (p * q))};
}

// The regulated double integral at one eps (in coordinate time).
cplx double_integral(const BtzSpacetime& st, const StaticDetector& a, const StaticDetector& b,
                     Element element, double eps_t, const OracleSettings& s) {
    const double ga = redshift_factor(st, a.radius);
    const double gb = redshift_factor(st, b.radius);
    const Box box = box_of(st, a, b);
    const double tc = s.switch_center;
    const double prefactor =
        a.coupling * b.coupling / std::sqrt(a.width * b.width) * ga * gb * (element == Element::nonlocal ? -1.0 : 1.0);

    auto integrand = [&](double t, double t2) -> cplx {
        const double tau_a = ga * t;
        const double tau_b = gb * t2;
        const double da = ga * (t - tc) / a.width;
        const double db = gb * (t2 - tc) / b.width;
        const double envelope = std::exp(-0.5 * (da * da + db * db));
        double phase = 0.0;
        const SpacetimePoint xa{t, a.radius, a.angle};
        const SpacetimePoint xb{t2, b.radius, b.angle};
        cplx w;
        switch (element) {
            case Element::response:
                phase = -a.gap * (tau_a - tau_b);
                w = wightman_btz(st, xa, xb, eps_t, s.images).value;
                break;
            case Element::correlation:
                phase = -(a.gap * tau_a - b.gap * tau_b);
                w = wightman_btz(st, xa, xb, eps_t, s.images).value;
                break;
            case Element::nonlocal:
                phase = -(a.gap * tau_a + b.gap * tau_b);
                w = t2 > t ? wightman_btz(st, xa, xb, eps_t, s.images).value
                           : wightman_btz(st, xb, xa, eps_t, s.images).value;
                break;
        }
        return envelope * std::polar(1.0, phase) * w;
    };

    const double u_max = s.t_window * std::numbers::sqrt2 * box.u_width;
    const double v_half = s.t_window * std::numbers::sqrt2 / std::sqrt(box.p + box.q);

    Workspace inner_ws(gsl_integration_workspace_alloc(s.workspace_size));
    Workspace outer_ws(gsl_integration_workspace_alloc(s.workspace_size));

    // t = v + u, t' = v: unit Jacobian, and the ordering line t = t' is u = 0.
    auto over_v = [&](double u) -> cplx {
        const double centre = tc - box.p * u / (box.p + box.q);
        auto f = [&](double v) { return integrand(v + u, v); };
        return qag_complex(f, centre - v_half, centre + v_half, s.inner_rel_tol, inner_ws.get(),
                           s.workspace_size, "inner integral");
    };

    const cplx below = qag_complex(over_v, -u_max, 0.0, s.outer_rel_tol, outer_ws.get(), s.workspace_size,
                                   "outer integral");
    const cplx above = qag_complex(over_v, 0.0, u_max, s.outer_rel_tol, outer_ws.get(), s.workspace_size,
                                   "outer integral");
    return prefactor * (below + above);
}

OracleValue extrapolated(const BtzSpacetime& st, const StaticDetector& a, const StaticDetector& b,
                         Element element, const OracleSettings& s, const char* name) {
    validate(s);
    validate(st, a);
    validate(st, b);
    silence_gsl();

    const double eps_scale = box_of(st, a, b).u_width / std::numbers::sqrt2;
    OracleValue out;
    for (double eps : s.eps_values) {
        out.at_eps.push_back(double_integral(st, a, b, element, eps * eps_scale, s));
    }
    out.value = extrapolate_to_zero(s.eps_values, out.at_eps);

    const std::vector<double> fewer_eps(s.eps_values.begin() + 1, s.eps_values.end());
    const std::vector<cplx> fewer_values(out.at_eps.begin() + 1, out.at_eps.end());
    out.extrapolation_error = std::abs(out.value - extrapolate_to_zero(fewer_eps, fewer_values));
    if (out.extrapolation_error > s.extrapolation_tol * std::abs(out.value)) {
        throw ConvergenceError(std::string(name) + ": eps -> 0 extrapolation unstable",
                               std::abs(out.value), out.extrapolation_error);
    }
    return out;
}

}  // namespace

void validate(const OracleSettings& s) {
    const auto& e = s.eps_values;
    const bool decreasing = std::adjacent_find(e.begin(), e.end(), std::less_equal<>()) == e.end();
    if (e.size() < 3 || !decreasing || e.back() <= 0.0) {
        throw DomainError("oracle: need at least three positive, strictly decreasing regulators");
    }
    if (!(s.t_window >= 7.0)) throw DomainError("oracle: t_window must be >= 7");
    if (!(s.inner_rel_tol > 0.0) || !(s.outer_rel_tol > 0.0) || s.workspace_size < 16) {
        throw DomainError("oracle: tolerances must be positive");
    }
}

std::complex<double> extrapolate_to_zero(const std::vector<double>& eps,
                                         const std::vector<std::complex<double>>& values) {
    if (eps.size() != values.size() || eps.empty()) {
        throw DomainError("extrapolate_to_zero: need matching, non-empty samples");
    }
    std::vector<cplx> table = values;
    const std::size_t n = eps.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double x0 = eps[i];
            const double x1 = eps[i + level];
            table[i] = (x0 * table[i + 1] - x1 * table[i]) / (x0 - x1);
        }
    }
    return table[0];
}

OracleValue oracle_P(const BtzSpacetime& st, const StaticDetector& det, const OracleSettings& settings) {
    OracleValue out = extrapolated(st, det, det, Element::response, settings, "oracle_P");
    const double re = out.value.real();
    if (std::abs(out.value.imag()) > settings.imag_tol * std::abs(re)) {
        throw ConsistencyError("oracle_P: imaginary part " + std::to_string(out.value.imag()) +
                               " does not vanish");
    }
    return out;
}

OracleValue oracle_X(const BtzSpacetime& st, const StaticDetector& det_a, const StaticDetector& det_b,
                     const OracleSettings& settings) {
    return extrapolated(st, det_a, det_b, Element::nonlocal, settings, "oracle_X");
}

OracleValue oracle_C(const BtzSpacetime& st, const StaticDetector& det_a, const StaticDetector& det_b,
                     const OracleSettings& settings) {
    return extrapolated(st, det_a, det_b, Element::correlation, settings, "oracle_C");
}

}  // namespace btzharvest
