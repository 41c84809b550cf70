#include "btzharvest/measures.hpp"

#include <algorithm>
#include <cmath>

#include "btzharvest/errors.hpp"

namespace btzharvest {

namespace {

void check_probabilities(double p_a, double p_b) {
    if (!(p_a >= 0.0) || !(p_b >= 0.0)) {
        throw DomainError("entanglement measures need non-negative transition probabilities");
    }
}

}  // namespace

double harvesting_margin(double p_a, double p_b, std::complex<double> x) {
    check_probabilities(p_a, p_b);
    return std::abs(x) - std::sqrt(p_a * p_b);
}

double concurrence(double p_a, double p_b, std::complex<double> x) {
    return 2.0 * std::max(0.0, harvesting_margin(p_a, p_b, x));
}

double negativity(double p_a, double p_b, std::complex<double> x) {
    check_probabilities(p_a, p_b);
    const double half_diff = 0.5 * (p_a - p_b);
    return std::max(0.0, std::hypot(std::abs(x), half_diff) - 0.5 * (p_a + p_b));
}

}  // namespace btzharvest
