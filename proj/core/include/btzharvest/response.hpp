#pragma once

#include <complex>

#include "btzharvest/geometry.hpp"
#include "btzharvest/quadrature.hpp"

namespace btzharvest {

// Closed-form detector response for Gaussian-switched static detectors.
//
// All coefficients here are per unit dimensionless coupling (lambda_tilde =
// lambda sqrt(sigma) set to 1); the coupling enters only when observables are
// assembled, so P_D and X scale exactly as lambda_tilde^2.

/// Coefficients of the single-detector response.
struct DetectorCoefficients {
    double kappa = 0.0;        ///< multiplies the thermal integral (sigma / 2)
    double K = 0.0;            ///< multiplies each image integral (1 / (2 sqrt(2 pi)))
    double temperature = 0.0;  ///< local Hawking temperature T_D
    double a = 0.0;            ///< Gaussian damping in y
    double beta = 0.0;         ///< oscillation frequency in y

    /// Singularity locations of the n-th image pair; alpha_minus(0) == 0.
    double alpha_minus(int n) const;
    double alpha_plus(int n) const;

    // Geometry the alphas are built from.
    double radius = 0.0;
    double horizon = 0.0;
    double excess = 0.0;  ///< sqrt(R^2 - r_h^2) = gamma ell
    double ell = 0.0;
};

DetectorCoefficients detector_coefficients(const BtzSpacetime& st, const StaticDetector& det);

/// Coefficients of the nonlocal matrix element X for two detectors.
struct PairCoefficients {
    double K = 0.0;  ///< includes the Gaussian gap suppression factor
    double a = 0.0;
    double beta = 0.0;

    /// Singularity locations of image n (n runs over all integers).
    double alpha_minus(int n) const;
    double alpha_plus(int n) const;

    double radius_a = 0.0;
    double radius_b = 0.0;
    double horizon = 0.0;
    double excess_product = 0.0;  ///< ell^2 gamma_A gamma_B
    double ell = 0.0;
    double delta_phi = 0.0;
};

/// Requires equal gaps and switching widths.
PairCoefficients pair_coefficients(const BtzSpacetime& st, const StaticDetector& det_a,
                                   const StaticDetector& det_b);

struct ResponseEstimate {
    double value = 0.0;
    double error = 0.0;
    int n_terms = 0;  ///< largest image index included
};

struct NonlocalEstimate {
    std::complex<double> value;
    double error = 0.0;
    int n_terms = 0;
};

/// Excitation probability P_D of one detector.
ResponseEstimate transition_probability(const BtzSpacetime& st, const StaticDetector& det,
                                        const QuadratureSettings& settings = {});

/// Nonlocal density-matrix element X.
NonlocalEstimate nonlocal_X(const BtzSpacetime& st, const StaticDetector& det_a,
                            const StaticDetector& det_b, const QuadratureSettings& settings = {});

/// One evaluation of everything the two-detector state needs.
struct ResponseResult {
    double p_a = 0.0;
    double p_b = 0.0;
    std::complex<double> x;
    double concurrence = 0.0;
    double negativity = 0.0;
    int n_terms_used = 0;
    double est_error = 0.0;

    /// |X| - sqrt(P_A P_B).
    double margin() const;
};

ResponseResult respond(const BtzSpacetime& st, const StaticDetector& det_a,
                       const StaticDetector& det_b, const QuadratureSettings& settings = {});

}  // namespace btzharvest
