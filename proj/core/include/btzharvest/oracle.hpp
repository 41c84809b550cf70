#pragma once

#include <complex>
#include <vector>

#include "btzharvest/geometry.hpp"
#include "btzharvest/wightman.hpp"

namespace btzharvest {

// Brute-force detector response: the defining double integrals over the two
// detectors' coordinate times, evaluated against the regulated image-sum
// Wightman function at several regulators and extrapolated to eps -> 0.
//
// This path shares nothing with the closed-form machinery in response.hpp
// beyond the geometry; it is the reference the closed forms are tested
// against and the only source of the C matrix element.

struct OracleSettings {
    /// Regulators, in units of the switching time scale, strictly decreasing.
    std::vector<double> eps_values{0.1, 0.05, 0.025, 0.0125};
    /// Half-width of the integration box in Gaussian e-folds (>= 7).
    double t_window = 8.0;
    double inner_rel_tol = 1e-11;
    double outer_rel_tol = 1e-9;
    std::size_t workspace_size = 4000;
    ImageSumPolicy images{256, 1e-15};
    /// Coordinate time at which both switching functions peak.
    double switch_center = 0.0;
    /// Relative disagreement tolerated between extrapolations over all
    /// regulators and over all but the largest.
    double extrapolation_tol = 1e-4;
    /// Relative size of Im P_D tolerated after extrapolation.
    double imag_tol = 1e-5;
};

void validate(const OracleSettings& settings);

struct OracleValue {
    std::complex<double> value;
    double extrapolation_error = 0.0;
    std::vector<std::complex<double>> at_eps;  ///< same order as eps_values
};

/// Polynomial (Neville) extrapolation of samples f(eps_i) to eps = 0.
std::complex<double> extrapolate_to_zero(const std::vector<double>& eps,
                                         const std::vector<std::complex<double>>& values);

/// P_D by direct quadrature; value is real within imag_tol.
OracleValue oracle_P(const BtzSpacetime& st, const StaticDetector& det,
                     const OracleSettings& settings = {});

/// Time-ordered nonlocal element X; detectors may have different gaps.
OracleValue oracle_X(const BtzSpacetime& st, const StaticDetector& det_a,
                     const StaticDetector& det_b, const OracleSettings& settings = {});

/// Non-time-ordered correlation element C.
OracleValue oracle_C(const BtzSpacetime& st, const StaticDetector& det_a,
                     const StaticDetector& det_b, const OracleSettings& settings = {});

}  // namespace btzharvest
