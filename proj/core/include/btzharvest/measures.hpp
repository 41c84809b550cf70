#pragma once

#include <complex>

namespace btzharvest {

/// Leading-order concurrence 2 max(0, |X| - sqrt(P_A P_B)) of the two-detector state.
double concurrence(double p_a, double p_b, std::complex<double> x);

/// Leading-order negativity max(0, sqrt(|X|^2 + ((P_A - P_B)/2)^2) - (P_A + P_B)/2).
double negativity(double p_a, double p_b, std::complex<double> x);

/// |X| - sqrt(P_A P_B), unclipped; positive exactly when entanglement is harvested.
double harvesting_margin(double p_a, double p_b, std::complex<double> x);

}  // namespace btzharvest
