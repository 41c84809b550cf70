// Prints the oracle values frozen in oracle_values.hpp. Not run by ctest;
// rerun by hand after changing the oracle and paste the output.
#include <cstdio>

#include "btzharvest/oracle.hpp"
#include "btzharvest/sweep.hpp"

int main() {
    using namespace btzharvest;
    const Configuration c = configure(ExperimentPoint{});
    const OracleValue pa = oracle_P(c.spacetime, c.a);
    const OracleValue pb = oracle_P(c.spacetime, c.b);
    const OracleValue x = oracle_X(c.spacetime, c.a, c.b);
    std::printf("inline constexpr double kOraclePA = %.15g;\n", pa.value.real());
    std::printf("inline constexpr double kOraclePB = %.15g;\n", pb.value.real());
    std::printf("inline constexpr double kOracleXRe = %.15g;\n", x.value.real());
    std::printf("inline constexpr double kOracleXIm = %.15g;\n", x.value.imag());
}
