#include "btzharvest/wightman.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "btzharvest/errors.hpp"

namespace btzharvest {

namespace {

using cplx = std::complex<double>;

// Beyond this the image is exponentially negligible and cosh would overflow.
constexpr double kMaxHyperbolicArg = 650.0;

void check_exterior(const BtzSpacetime& st, const SpacetimePoint& x) {
    if (!(x.r > st.horizon()) || !std::isfinite(x.t) || !std::isfinite(x.phi)) {
        throw DomainError("Wightman function is defined here for exterior points only");
    }
}

// Splits sigma_n = spatial - temporal_scale * 2 sinh^2(k dt / 2) so the
// near-coincident case does not cancel catastrophically.
struct SigmaParts {
    double spatial;
    double temporal_scale;
    double k;  // r_h / ell^2
};

SigmaParts sigma_parts(const BtzSpacetime& st, const SpacetimePoint& x, const SpacetimePoint& x2,
                       int n) {
    const double r_h = st.horizon();
    const double r_h2 = r_h * r_h;
    const double rr = x.r * x2.r;
    const double ex = std::sqrt((x.r - r_h) * (x.r + r_h)) * std::sqrt((x2.r - r_h) * (x2.r + r_h));
    const double angle = (r_h / st.ell()) * (x.phi - x2.phi - 2.0 * std::numbers::pi * n);
    if (std::abs(angle) > kMaxHyperbolicArg) {
        return {HUGE_VAL, ex / r_h2, r_h / (st.ell() * st.ell())};
    }
    const double sh = std::sinh(0.5 * angle);
    const double dr = x.r - x2.r;
    // rr - r_h^2 - ex, rationalised.
    const double radial = r_h2 * dr * dr / (rr - r_h2 + ex);
    return {(2.0 * rr * sh * sh + radial) / r_h2, ex / r_h2, r_h / (st.ell() * st.ell())};
}

}  // namespace

double sigma_n(const BtzSpacetime& st, const SpacetimePoint& x, const SpacetimePoint& x2, int n) {
    check_exterior(st, x);
    check_exterior(st, x2);
    const SigmaParts p = sigma_parts(st, x, x2, n);
    const double sh = std::sinh(0.5 * p.k * (x.t - x2.t));
    return p.spatial - 2.0 * p.temporal_scale * sh * sh;
}

std::complex<double> sigma_n(const BtzSpacetime& st, const SpacetimePoint& x,
                             const SpacetimePoint& x2, int n, double eps) {
    check_exterior(st, x);
    check_exterior(st, x2);
    const SigmaParts p = sigma_parts(st, x, x2, n);
    const cplx sh = std::sinh(0.5 * p.k * cplx(x.t - x2.t, -eps));
    return p.spatial - 2.0 * p.temporal_scale * sh * sh;
}

WightmanValue wightman_btz(const BtzSpacetime& st, const SpacetimePoint& x,
                           const SpacetimePoint& x2, double eps, const ImageSumPolicy& policy) {
    if (!(eps > 0.0)) throw DomainError("wightman_btz: regulator eps must be positive");
    if (policy.n_max < 0) throw DomainError("wightman_btz: n_max must be >= 0");
    check_exterior(st, x);
    check_exterior(st, x2);

    const double zeta = st.zeta();
    const double k = st.horizon() / (st.ell() * st.ell());
    const cplx sh = std::sinh(0.5 * k * cplx(x.t - x2.t, -eps));
    const cplx temporal = 2.0 * sh * sh;

    auto image = [&](int n) -> cplx {
        const SigmaParts p = sigma_parts(st, x, x2, n);
        if (!std::isfinite(p.spatial)) return {0.0, 0.0};
        const cplx s = p.spatial - p.temporal_scale * temporal;
        cplx term = 1.0 / std::sqrt(s);
        if (zeta != 0.0) term -= zeta / std::sqrt(s + 2.0);
        return term;
    };

    cplx sum = image(0);
    double last = std::abs(sum);
    double tail = 0.0;
    int n = 0;
    bool converged = policy.tail_tol <= 0.0;

    for (n = 1; n <= policy.n_max; ++n) {
        const cplx pair = image(n) + image(-n);
        sum += pair;
        const double mag = std::abs(pair);
        const double ratio = last > 0.0 ? mag / last : 0.0;
        tail = ratio < 1.0 ? mag * ratio / (1.0 - ratio) : mag * n;
        last = mag;
        if (policy.tail_tol > 0.0 && mag <= policy.tail_tol * std::abs(sum)) {
            converged = true;
            break;
        }
    }
    if (n > policy.n_max) n = policy.n_max;

    const double prefactor = 1.0 / (4.0 * std::numbers::pi * std::numbers::sqrt2 * st.ell());
    if (!converged) {
        throw ConvergenceError("wightman_btz: image sum not converged within n_max = " +
                                   std::to_string(policy.n_max),
                               prefactor * std::abs(sum), prefactor * tail);
    }
    return {prefactor * sum, prefactor * tail, n};
}

}  // namespace btzharvest
