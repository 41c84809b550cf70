#pragma once

// Static BTZ exterior: spacetime parameters, detector placement and the
// kinematic factors every response integral depends on.
//
// Lengths and times are measured in units of the detectors' switching width,
// so in practice sigma == 1 and ell, R, d are the ratios ell/sigma, R/sigma,
// d/sigma.

namespace btzharvest {

/// Boundary condition of the field at spatial infinity.
enum class Boundary : int { neumann = -1, transparent = 0, dirichlet = 1 };

/// Parses -1/0/1 into a Boundary; anything else is a DomainError.
Boundary boundary_from_zeta(int zeta);

class BtzSpacetime {
public:
    /// Throws DomainError unless ell > 0 and mass > 0.
    BtzSpacetime(double ell, double mass, Boundary boundary = Boundary::dirichlet);

    double ell() const noexcept { return ell_; }
    double mass() const noexcept { return mass_; }
    double horizon() const noexcept { return r_h_; }
    Boundary boundary() const noexcept { return boundary_; }
    /// zeta as a number, ready to multiply.
    double zeta() const noexcept { return static_cast<double>(static_cast<int>(boundary_)); }

private:
    double ell_;
    double mass_;
    double r_h_;
    Boundary boundary_;
};

/// One two-level detector held at fixed (R, Phi) with Gaussian switching
/// exp(-tau^2 / (2 width^2)) in its own proper time.
struct StaticDetector {
    double radius = 0.0;
    double angle = 0.0;
    double gap = 0.0;
    double width = 1.0;
    double coupling = 1.0;
};

/// Throws DomainError if the detector is not a valid exterior static detector.
void validate(const BtzSpacetime& st, const StaticDetector& det);

/// Builds a detector whose proper distance from the horizon is `distance`.
StaticDetector detector_at_horizon_distance(const BtzSpacetime& st, double distance, double angle,
                                            double gap, double width = 1.0, double coupling = 1.0);

/// r_h = ell * sqrt(M).
double horizon_radius(double ell, double mass);

/// gamma = sqrt(R^2 - r_h^2) / ell, i.e. d tau / d t for a static observer.
double redshift_factor(const BtzSpacetime& st, double radius);

/// Proper (radial, constant-t) distance between r_h <= r1 <= r2.
double proper_distance(const BtzSpacetime& st, double r1, double r2);

/// Inverse of proper_distance(st, r_h, .): R = r_h cosh(d / ell).
double radius_at_horizon_distance(const BtzSpacetime& st, double distance);

/// Local Hawking temperature r_h / (2 pi ell sqrt(R^2 - r_h^2)).
double local_temperature(const BtzSpacetime& st, double radius);

}  // namespace btzharvest
