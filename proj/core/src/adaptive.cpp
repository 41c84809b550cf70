#include "btzharvest/adaptive.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

namespace btzharvest::adaptive {

namespace {

using cplx = std::complex<double>;

// 21-point Kronrod abscissae (descending, last is the centre) and weights,
// with the embedded 10-point Gauss weights for the odd-indexed abscissae.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525255024, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEpsMach = std::numeric_limits<double>::epsilon();

struct Panel {
    double lo;
    double hi;
    cplx value;
    double error;
    double floor;  // roundoff level 50 eps |f|
    int depth;
    int segment;
};

// Kronrod estimate with the QUADPACK error heuristic.
Panel rule(const Integrand& f, double lo, double hi, int depth, int segment) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::array<cplx, 21> fv;
    fv[20] = f(centre);
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        fv[2 * j] = f(centre - dx);
        fv[2 * j + 1] = f(centre + dx);
    }

    cplx resk = kWgk[10] * fv[20];
    cplx resg{0.0, 0.0};
    double resabs = kWgk[10] * std::abs(fv[20]);
    for (int j = 0; j < 10; ++j) {
        const cplx pair = fv[2 * j] + fv[2 * j + 1];
        resk += kWgk[j] * pair;
        resabs += kWgk[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
        if (j % 2 == 1) resg += kWg[j / 2] * pair;
    }
    const cplx mean = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fv[20] - mean);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    }

    const double scale = std::abs(half);
    resabs *= scale;
    resasc *= scale;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double floor = 50.0 * kEpsMach * resabs;
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEpsMach)) err = std::max(floor, err);
    return {lo, hi, resk * half, err, floor, depth, segment};
}

bool by_error(const Panel& a, const Panel& b) { return a.error < b.error; }

}  // namespace

Outcome integrate(std::span<const Segment> segments, const Limits& limits) {
    std::vector<Panel> live;
    std::vector<Panel> frozen;  // hit max_depth
    int evaluations = 0;

    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
        const Segment& seg = segments[s];
        if (!(seg.hi > seg.lo)) continue;
        live.push_back(rule(seg.f, seg.lo, seg.hi, 0, s));
        evaluations += 21;
    }
    std::make_heap(live.begin(), live.end(), by_error);

    auto exact_totals = [&] {
        cplx value{0.0, 0.0};
        double error = 0.0;
        double floor = 0.0;
        for (const Panel& p : live) value += p.value, error += p.error, floor += p.floor;
        for (const Panel& p : frozen) value += p.value, error += p.error, floor += p.floor;
        return std::tuple{value, error, floor};
    };
    // A cancelling integral cannot beat the summed roundoff of its panels, so
    // an error within twice that level also counts as converged.
    auto target = [&](cplx value, double floor) {
        return std::max({limits.abs_tol, limits.rel_tol * std::abs(value), 2.0 * floor});
    };

    auto [value, error, floor] = exact_totals();
    for (int iter = 1;; ++iter) {
        // Running sums drift; resynchronise now and then.
        if (iter % 64 == 0) std::tie(value, error, floor) = exact_totals();
        if (error <= target(value, floor)) {
            std::tie(value, error, floor) = exact_totals();
            if (error <= target(value, floor)) return {value, error, evaluations, true};
        }
        if (live.empty() || static_cast<int>(live.size() + frozen.size()) >= limits.max_panels) {
            std::tie(value, error, floor) = exact_totals();
            return {value, error, evaluations, false};
        }

        std::pop_heap(live.begin(), live.end(), by_error);
        const Panel worst = live.back();
        live.pop_back();
        if (worst.depth >= limits.max_depth) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Integrand& f = segments[worst.segment].f;
        const Panel left = rule(f, worst.lo, mid, worst.depth + 1, worst.segment);
        const Panel right = rule(f, mid, worst.hi, worst.depth + 1, worst.segment);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        floor += left.floor + right.floor - worst.floor;
        live.push_back(left);
        std::push_heap(live.begin(), live.end(), by_error);
        live.push_back(right);
        std::push_heap(live.begin(), live.end(), by_error);
        evaluations += 42;
    }
}

Outcome integrate(const Integrand& f, double lo, double hi, const Limits& limits) {
    const Segment seg{f, lo, hi};
    return integrate(std::span<const Segment>(&seg, 1), limits);
}

}  // namespace btzharvest::adaptive
