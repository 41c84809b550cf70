#pragma once

#include <complex>
#include <functional>
#include <span>

namespace btzharvest {

/// A value together with an absolute error estimate.
template <typename T>
struct Estimate {
    T value{};
    double error = 0.0;
};

namespace adaptive {

using Integrand = std::function<std::complex<double>(double)>;

/// One finite interval with its own integrand; several segments are refined
/// together under a single global error budget.
struct Segment {
    Integrand f;
    double lo = 0.0;
    double hi = 0.0;
};

struct Limits {
    double rel_tol = 1e-10;
    double abs_tol = 1e-15;
    int max_depth = 40;      ///< bisections allowed below an initial segment
    int max_panels = 20000;  ///< live panels before giving up
};

struct Outcome {
    std::complex<double> value;
    double error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod quadrature over the union of the
/// segments. Never throws on non-convergence; check Outcome::converged.
Outcome integrate(std::span<const Segment> segments, const Limits& limits);

/// Convenience overload for one interval.
Outcome integrate(const Integrand& f, double lo, double hi, const Limits& limits);

}  // namespace adaptive
}  // namespace btzharvest
