#pragma once

#include <complex>

#include "btzharvest/geometry.hpp"

namespace btzharvest {

/// A point of the BTZ exterior in Schwarzschild-like coordinates.
struct SpacetimePoint {
    double t = 0.0;
    double r = 0.0;
    double phi = 0.0;
};

/// How many AdS3 images to sum.
///
/// With tail_tol > 0 the symmetric window [-N, N] grows until the last image
/// pair is below tail_tol relative to the partial sum; hitting n_max first is a
/// ConvergenceError. With tail_tol <= 0 exactly n_max images per side are summed.
struct ImageSumPolicy {
    int n_max = 64;
    double tail_tol = 1e-14;
};

struct WightmanValue {
    std::complex<double> value;
    double tail_estimate = 0.0;
    int n_used = 0;
};

/// Geodesic-distance function of the n-th image pair at real time separation.
double sigma_n(const BtzSpacetime& st, const SpacetimePoint& x, const SpacetimePoint& x2, int n);

/// Same with the regulator applied, dt -> dt - i eps.
std::complex<double> sigma_n(const BtzSpacetime& st, const SpacetimePoint& x,
                             const SpacetimePoint& x2, int n, double eps);

/// Hartle-Hawking two-point function <phi(x) phi(x2)> of the conformally
/// coupled field, as a truncated image sum with dt -> dt - i eps.
WightmanValue wightman_btz(const BtzSpacetime& st, const SpacetimePoint& x,
                           const SpacetimePoint& x2, double eps,
                           const ImageSumPolicy& policy = {});

}  // namespace btzharvest
