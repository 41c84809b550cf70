#include "btzharvest/sweep.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "btzharvest/errors.hpp"

namespace btzharvest {

namespace {

struct Field {
    const char* name;
    double ExperimentPoint::*member;
};

constexpr Field kFields[] = {
    {"l_over_sigma", &ExperimentPoint::l_over_sigma},
    {"mass", &ExperimentPoint::mass},
    {"zeta", &ExperimentPoint::zeta},
    {"gap_sigma", &ExperimentPoint::gap_sigma},
    {"dA_over_sigma", &ExperimentPoint::dA_over_sigma},
    {"dAB_over_sigma", &ExperimentPoint::dAB_over_sigma},
    {"delta_phi", &ExperimentPoint::delta_phi},
    {"lambda_tilde", &ExperimentPoint::lambda_tilde},
};

double ExperimentPoint::*member_of(const std::string& name) {
    for (const Field& f : kFields) {
        if (name == f.name) return f.member;
    }
    throw DomainError("unknown parameter '" + name + "'");
}

ExperimentPoint resolve(const std::map<std::string, double>& fixed) {
    ExperimentPoint p;
    for (const auto& [name, value] : fixed) set_parameter(p, name, value);
    return p;
}

std::string error_code(const std::exception_ptr& e) {
    try {
        std::rethrow_exception(e);
    } catch (const DomainError&) {
        return "error:domain";
    } catch (const ConvergenceError&) {
        return "error:convergence";
    } catch (const ConsistencyError&) {
        return "error:consistency";
    } catch (...) {
        return "error:internal";
    }
}

}  // namespace

const std::vector<std::string>& parameter_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Field& f : kFields) out.emplace_back(f.name);
        return out;
    }();
    return names;
}

double get_parameter(const ExperimentPoint& p, const std::string& name) { return p.*member_of(name); }

void set_parameter(ExperimentPoint& p, const std::string& name, double value) {
    p.*member_of(name) = value;
}

void validate(const ExperimentPoint& p) {
    for (const Field& f : kFields) {
        if (!std::isfinite(p.*f.member)) throw DomainError(std::string(f.name) + " must be finite");
    }
    if (!(p.l_over_sigma > 0.0)) throw DomainError("l_over_sigma must be positive");
    if (!(p.mass > 0.0)) throw DomainError("mass must be positive");
    if (p.zeta != -1.0 && p.zeta != 0.0 && p.zeta != 1.0) throw DomainError("zeta must be -1, 0 or 1");
    if (!(p.dA_over_sigma > 0.0)) throw DomainError("dA_over_sigma must be positive");
    if (!(p.dAB_over_sigma >= 0.0)) throw DomainError("dAB_over_sigma must be non-negative");
}

Configuration configure(const ExperimentPoint& p) {
    validate(p);
    const BtzSpacetime st(p.l_over_sigma, p.mass, boundary_from_zeta(static_cast<int>(p.zeta)));
    const StaticDetector a =
        detector_at_horizon_distance(st, p.dA_over_sigma, p.delta_phi, p.gap_sigma, 1.0, p.lambda_tilde);
    const StaticDetector b = detector_at_horizon_distance(st, p.dA_over_sigma + p.dAB_over_sigma, 0.0,
                                                          p.gap_sigma, 1.0, p.lambda_tilde);
    return {st, a, b};
}

std::vector<double> Axis::values() const {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / (count - 1);
        out[i] = scale == AxisScale::log ? std::exp(std::log(min) + f * (std::log(max) - std::log(min)))
                                         : min + f * (max - min);
    }
    out.front() = min;
    out.back() = max;
    return out;
}

void validate(const SweepSpec& spec) {
    member_of(spec.axis.name);
    if (spec.fixed.contains(spec.axis.name)) {
        throw DomainError("axis parameter '" + spec.axis.name + "' is also fixed");
    }
    for (const auto& [name, value] : spec.fixed) member_of(name);
    const Axis& ax = spec.axis;
    if (ax.count < 2) throw DomainError("axis.count must be >= 2");
    if (!(ax.min < ax.max)) throw DomainError("axis.min must be below axis.max");
    if (ax.scale == AxisScale::log && !(ax.min > 0.0)) throw DomainError("log axis needs axis.min > 0");
    validate(spec.quadrature);
    ExperimentPoint p = resolve(spec.fixed);
    for (double v : {ax.min, ax.max}) {
        set_parameter(p, ax.name, v);
        validate(p);
    }
}

SweepRow evaluate_point(const ExperimentPoint& point, const QuadratureSettings& quadrature) {
    SweepRow row;
    row.input = point;
    try {
        const Configuration c = configure(point);
        const ResponseResult r = respond(c.spacetime, c.a, c.b, quadrature);
        row.p_a = r.p_a;
        row.p_b = r.p_b;
        row.re_x = r.x.real();
        row.im_x = r.x.imag();
        row.abs_x = std::abs(r.x);
        row.concurrence = r.concurrence;
        row.negativity = r.negativity;
        row.n_terms_used = r.n_terms_used;
        row.est_error = r.est_error;
    } catch (...) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.p_a = row.p_b = row.re_x = row.im_x = row.abs_x = nan;
        row.concurrence = row.negativity = row.est_error = nan;
        row.status = error_code(std::current_exception());
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
    validate(spec);
    const ExperimentPoint base = resolve(spec.fixed);
    const std::vector<double> grid = spec.axis.values();
    std::vector<SweepRow> rows(grid.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            ExperimentPoint p = base;
            set_parameter(p, spec.axis.name, grid[i]);
            rows[i] = evaluate_point(p, spec.quadrature);
        }
    };
    const int n_workers = std::clamp(threads, 1, static_cast<int>(grid.size()));
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < n_workers; ++t) pool.emplace_back(worker);
        worker();
    }
    return rows;
}

double harvesting_margin_at(const ExperimentPoint& point, const QuadratureSettings& quadrature) {
    const Configuration c = configure(point);
    const ResponseResult r = respond(c.spacetime, c.a, c.b, quadrature);
    const double scale = point.lambda_tilde * point.lambda_tilde;
    return r.margin() / scale;
}

DeathLocation find_sudden_death(const ExperimentPoint& base, double dA_lo, double dA_hi,
                                const QuadratureSettings& quadrature, double tolerance) {
    if (!(0.0 < dA_lo && dA_lo < dA_hi) || !(tolerance > 0.0)) {
        throw DomainError("find_sudden_death: need 0 < dA_lo < dA_hi and tolerance > 0");
    }
    auto margin = [&](double dA) {
        ExperimentPoint p = base;
        p.dA_over_sigma = dA;
        return harvesting_margin_at(p, quadrature);
    };
    const double f_lo = margin(dA_lo);
    const double f_hi = margin(dA_hi);
    if (std::signbit(f_lo) == std::signbit(f_hi) || f_lo == 0.0 || f_hi == 0.0) {
        throw BracketError("find_sudden_death: |X| - sqrt(P_A P_B) does not change sign on [" +
                               std::to_string(dA_lo) + ", " + std::to_string(dA_hi) + "]",
                           f_lo, f_hi);
    }

    // Cache so the final bracket's margins come for free.
    std::map<double, double> seen{{dA_lo, f_lo}, {dA_hi, f_hi}};
    auto cached = [&](double dA) {
        auto it = seen.find(dA);
        if (it != seen.end()) return it->second;
        return seen[dA] = margin(dA);
    };
    auto narrow_enough = [tolerance](double a, double b) { return std::abs(b - a) <= tolerance; };
    const auto [lo, hi] = boost::math::tools::bisect(cached, dA_lo, dA_hi, narrow_enough);
    return {0.5 * (lo + hi), lo, hi, cached(lo), cached(hi)};
}

double gap_objective(const ExperimentPoint& base, GapObjective objective, double gap,
                     const GapSearch& search, const QuadratureSettings& quadrature) {
    ExperimentPoint p = base;
    p.gap_sigma = gap;
    if (objective == GapObjective::max_far_concurrence) {
        const Configuration c = configure(p);
        return respond(c.spacetime, c.a, c.b, quadrature).concurrence / (p.lambda_tilde * p.lambda_tilde);
    }
    try {
        return find_sudden_death(p, search.death_lo, search.death_hi, quadrature, search.death_tol).distance;
    } catch (const BracketError& e) {
        // Entangled throughout: death lies at or below the bracket floor.
        if (e.f_lo() > 0.0 && e.f_hi() > 0.0) return search.death_lo;
        return std::numeric_limits<double>::infinity();
    }
}

GapOptimum optimize_gap(const ExperimentPoint& base, GapObjective objective, const GapSearch& search,
                        const QuadratureSettings& quadrature) {
    if (!(0.0 < search.gap_lo && search.gap_lo < search.gap_hi) || search.coarse_points < 3 ||
        !(search.rel_tol > 0.0)) {
        throw DomainError("optimize_gap: need 0 < gap_lo < gap_hi, >= 3 coarse points, rel_tol > 0");
    }
    // Minimise `cost`; max_far_concurrence is flipped.
    const double sign = objective == GapObjective::max_far_concurrence ? -1.0 : 1.0;
    auto cost = [&](double gap) { return sign * gap_objective(base, objective, gap, search, quadrature); };

    GapOptimum out;
    const Axis scan{"gap_sigma", AxisScale::linear, search.gap_lo, search.gap_hi, search.coarse_points};
    const std::vector<double> gaps = scan.values();
    std::vector<double> costs;
    for (double g : gaps) {
        costs.push_back(cost(g));
        out.coarse.emplace_back(g, sign * costs.back());
    }
    const auto best = static_cast<std::size_t>(std::min_element(costs.begin(), costs.end()) - costs.begin());
    if (best == 0 || best + 1 == gaps.size()) {
        out.at_edge = true;
        out.gap = gaps[best];
        out.value = sign * costs[best];
        return out;
    }

    // Golden-section search on the scan cell around the best sample.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = gaps[best - 1];
    double hi = gaps[best + 1];
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = cost(x1);
    double f2 = cost(x2);
    while (hi - lo > search.rel_tol * std::abs(0.5 * (lo + hi))) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = cost(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = cost(x2);
        }
    }
    if (f1 <= f2) {
        out.gap = x1;
        out.value = sign * f1;
    } else {
        out.gap = x2;
        out.value = sign * f2;
    }
    if (sign * out.value > costs[best]) {
        out.gap = gaps[best];
        out.value = sign * costs[best];
    }
    return out;
}

}  // namespace btzharvest
