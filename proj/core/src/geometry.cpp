#include "btzharvest/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "btzharvest/errors.hpp"

namespace btzharvest {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

// sqrt(R^2 - r_h^2) without squaring away the digits of R - r_h.
double radial_excess(double radius, double r_h) {
    return std::sqrt((radius - r_h) * (radius + r_h));
}

}  // namespace

Boundary boundary_from_zeta(int zeta) {
    switch (zeta) {
        case -1: return Boundary::neumann;
        case 0: return Boundary::transparent;
        case 1: return Boundary::dirichlet;
        default: throw DomainError("zeta must be -1, 0 or 1, got " + std::to_string(zeta));
    }
}

BtzSpacetime::BtzSpacetime(double ell, double mass, Boundary boundary)
    : ell_(ell), mass_(mass), r_h_(horizon_radius(ell, mass)), boundary_(boundary) {}

double horizon_radius(double ell, double mass) {
    if (!positive_finite(ell) || !positive_finite(mass)) {
        throw DomainError("horizon_radius: ell and mass must be positive");
    }
    return ell * std::sqrt(mass);
}

void validate(const BtzSpacetime& st, const StaticDetector& det) {
    if (!std::isfinite(det.radius) || det.radius <= st.horizon()) {
        throw DomainError("detector radius must lie outside the horizon");
    }
    if (!positive_finite(det.width)) throw DomainError("switching width must be positive");
    if (!std::isfinite(det.gap) || !std::isfinite(det.angle) || !std::isfinite(det.coupling)) {
        throw DomainError("detector parameters must be finite");
    }
}

StaticDetector detector_at_horizon_distance(const BtzSpacetime& st, double distance, double angle,
                                            double gap, double width, double coupling) {
    StaticDetector det{radius_at_horizon_distance(st, distance), angle, gap, width, coupling};
    validate(st, det);
    return det;
}

double redshift_factor(const BtzSpacetime& st, double radius) {
    if (!(radius >= st.horizon())) throw DomainError("redshift_factor: R < r_h");
    return radial_excess(radius, st.horizon()) / st.ell();
}

double proper_distance(const BtzSpacetime& st, double r1, double r2) {
    const double r_h = st.horizon();
    if (!(r_h <= r1 && r1 <= r2) || !std::isfinite(r2)) {
        throw DomainError("proper_distance: need r_h <= R1 <= R2");
    }
    if (r1 == r2) return 0.0;
    const double num = r2 + radial_excess(r2, r_h);
    const double den = r1 + radial_excess(r1, r_h);
    return st.ell() * std::log(num / den);
}

double radius_at_horizon_distance(const BtzSpacetime& st, double distance) {
    if (!(distance >= 0.0) || !std::isfinite(distance)) {
        throw DomainError("radius_at_horizon_distance: distance must be >= 0");
    }
    return st.horizon() * std::cosh(distance / st.ell());
}

double local_temperature(const BtzSpacetime& st, double radius) {
    if (!(radius > st.horizon())) throw DomainError("local_temperature: R must exceed r_h");
    return st.horizon() / (2.0 * std::numbers::pi * st.ell() * radial_excess(radius, st.horizon()));
}

}  // namespace btzharvest
