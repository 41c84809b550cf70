#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "btzharvest/geometry.hpp"
#include "btzharvest/quadrature.hpp"
#include "btzharvest/response.hpp"

namespace btzharvest {

/// One physical configuration in the dimensionless variables used throughout
/// (sigma = 1).
struct ExperimentPoint {
    double l_over_sigma = 10.0;
    double mass = 1.0;
    double zeta = 1.0;
    double gap_sigma = 0.1;
    double dA_over_sigma = 1.0;
    double dAB_over_sigma = 1.0;
    double delta_phi = 0.0;
    double lambda_tilde = 1.0;
};

/// The parameter names accepted in configs and on sweep axes, in CSV order.
const std::vector<std::string>& parameter_names();

/// Reads or writes a named field; unknown names are a DomainError.
double get_parameter(const ExperimentPoint& p, const std::string& name);
void set_parameter(ExperimentPoint& p, const std::string& name, double value);

/// Throws DomainError for non-physical points (mass <= 0, dA < 0, bad zeta, ...).
void validate(const ExperimentPoint& p);

/// The spacetime and the two detectors a point describes. Detector B sits
/// dAB further from the horizon than A, both radii via cosh inversion.
struct Configuration {
    BtzSpacetime spacetime;
    StaticDetector a;
    StaticDetector b;
};
Configuration configure(const ExperimentPoint& p);

enum class AxisScale { linear, log };

struct Axis {
    std::string name;
    AxisScale scale = AxisScale::linear;
    double min = 0.0;
    double max = 1.0;
    int count = 2;

    std::vector<double> values() const;
};

struct SweepSpec {
    std::map<std::string, double> fixed;  ///< unset parameters take ExperimentPoint defaults
    Axis axis;
    QuadratureSettings quadrature;
};

/// Throws DomainError if the axis is unknown, also fixed, degenerate, or the
/// fixed values are out of domain.
void validate(const SweepSpec& spec);

struct SweepRow {
    ExperimentPoint input;
    double p_a = 0.0;
    double p_b = 0.0;
    double re_x = 0.0;
    double im_x = 0.0;
    double abs_x = 0.0;
    double concurrence = 0.0;
    double negativity = 0.0;
    int n_terms_used = 0;
    double est_error = 0.0;
    std::string status = "ok";  ///< "ok" or "error:<code>"

    bool ok() const { return status == "ok"; }
};

/// Evaluates one point; failures become an error row instead of throwing.
SweepRow evaluate_point(const ExperimentPoint& point, const QuadratureSettings& quadrature);

/// One row per grid value, in axis order, independent of `threads`.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 1);

struct DeathLocation {
    double distance = 0.0;  ///< midpoint of the final bracket
    double lo = 0.0;        ///< final bracket, margin(lo) and margin(hi) of opposite sign
    double hi = 0.0;
    double margin_lo = 0.0;
    double margin_hi = 0.0;
};

/// |X| - sqrt(P_A P_B) at the point, per lambda_tilde^2.
double harvesting_margin_at(const ExperimentPoint& point, const QuadratureSettings& quadrature);

/// Horizon distance of A below which harvesting stops, by bisection on the
/// unclipped margin to `tolerance` in dA. BracketError without a sign change.
DeathLocation find_sudden_death(const ExperimentPoint& base, double dA_lo, double dA_hi,
                                const QuadratureSettings& quadrature, double tolerance = 1e-4);

enum class GapObjective { min_death_distance, max_far_concurrence };

struct GapSearch {
    double gap_lo = 0.05;
    double gap_hi = 3.0;
    int coarse_points = 16;
    double rel_tol = 1e-3;
    /// Death-distance bracket used by min_death_distance.
    double death_lo = 1e-3;
    double death_hi = 10.0;
    double death_tol = 1e-4;
};

struct GapOptimum {
    double gap = 0.0;
    double value = 0.0;
    bool at_edge = false;  ///< the coarse scan peaked on the bracket boundary
    std::vector<std::pair<double, double>> coarse;  ///< (gap, objective) samples
};

/// Coarse scan over the gap bracket, then golden-section refinement.
GapOptimum optimize_gap(const ExperimentPoint& base, GapObjective objective, const GapSearch& search,
                        const QuadratureSettings& quadrature);

/// The objective itself at one gap; +inf for min_death_distance when the
/// detectors are unentangled across the whole death bracket.
double gap_objective(const ExperimentPoint& base, GapObjective objective, double gap,
                     const GapSearch& search, const QuadratureSettings& quadrature);

}  // namespace btzharvest
