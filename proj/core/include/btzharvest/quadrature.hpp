#pragma once

#include <complex>

#include "btzharvest/adaptive.hpp"

namespace btzharvest {

/// Numerical control knobs shared by the closed-form evaluators.
struct QuadratureSettings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-15;
    int max_panel_depth = 40;
    /// Relative size below which Gaussian tails and image-sum terms are dropped.
    double tail_tol = 1e-13;
    /// Regulator handed to eps-regulated Wightman evaluations (oracle, diagnostics).
    double eps_oracle = 1e-2;
    int n_max_images = 64;
};

/// Throws DomainError unless all tolerances are positive and depths sensible.
void validate(const QuadratureSettings& settings);

enum class PhaseMode { complex_exp, cosine };

/// Which way 1/sqrt(cosh(alpha) - cosh(y)) continues past y = alpha:
/// -i/sqrt(cosh(y) - cosh(alpha)) or +i/sqrt(...).
enum class Branch { minus_i, plus_i };

/// Integrand exp(-a y^2) * phase(beta y) / sqrt(cosh(alpha) - cosh(y)) on [0, inf).
struct SingularKernelSpec {
    double a = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    PhaseMode phase = PhaseMode::complex_exp;
    Branch branch = Branch::minus_i;
};

struct SingularIntegral {
    std::complex<double> value;
    double error = 0.0;
    int evaluations = 0;
};

/// Integral over [0, inf) of the singular Gaussian-damped kernel, complex valued.
///
/// The inverse square-root singularity at y = alpha is removed by writing
/// y = alpha cos(phi) below it and y = alpha cosh(w) above it; both maps keep
/// the transformed integrand bounded for every alpha > 0. alpha == 0 leaves a
/// non-integrable 1/y at the origin and is a DomainError. Non-convergence
/// throws ConvergenceError with the best value's modulus and error.
SingularIntegral singular_cosh_integral(const SingularKernelSpec& spec,
                                        const QuadratureSettings& settings = {});

/// Integral over the real line of exp(-sigma^2 (y - Omega)^2) / (exp(y/T) + 1).
Estimate<double> thermal_gaussian_integral(double sigma, double gap, double temperature,
                                           const QuadratureSettings& settings = {});

}  // namespace btzharvest
