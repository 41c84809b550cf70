#include <doctest.h>

#include <cmath>
#include <complex>

#include "btzharvest/errors.hpp"
#include "btzharvest/wightman.hpp"
#include "reference_values.hpp"

using namespace btzharvest;

namespace {
const BtzSpacetime kBtz(10.0, 1.0);
}

TEST_CASE("sigma_n values") {
    const SpacetimePoint x{0.4, 12.0, 0.3};
    CHECK(sigma_n(kBtz, x, x, 0) == 0.0);
    CHECK(sigma_n(kBtz, {0, 12, 0}, {0, 12, 0}, 1) == doctest::Approx(refs::kSigmaEqualRadiiN1).epsilon(1e-14));
    const double timelike = sigma_n(kBtz, {0.7, 12, 0}, {0, 12, 0}, 0);
    CHECK(timelike < 0.0);
    CHECK(timelike == doctest::Approx(refs::kSigmaTimelike).epsilon(1e-13));
}

TEST_CASE("sigma_n swap symmetry") {
    const SpacetimePoint x{0.7, 12.0, 0.3};
    const SpacetimePoint y{-0.2, 15.0, 1.1};
    for (int n = -3; n <= 3; ++n) {
        CHECK(sigma_n(kBtz, x, y, n) == doctest::Approx(sigma_n(kBtz, y, x, -n)).epsilon(1e-14));
    }
}

TEST_CASE("regulated Wightman function matches the reference") {
    const WightmanValue w = wightman_btz(kBtz, {0.7, 12.0, 0.3}, {0.0, 15.0, 0.0}, 0.05);
    CHECK(w.value.real() == doctest::Approx(refs::kWightmanRe).epsilon(1e-12));
    CHECK(w.value.imag() == doctest::Approx(refs::kWightmanIm).epsilon(1e-10));
}

TEST_CASE("hermiticity at finite regulator") {
    const SpacetimePoint x{1.3, 10.5, 0.0};
    const SpacetimePoint y{0.1, 11.0, 0.4};
    const auto a = wightman_btz(kBtz, x, y, 0.03).value;
    const auto b = wightman_btz(kBtz, y, x, 0.03).value;
    CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a));
}

TEST_CASE("spacelike separation is real as eps -> 0") {
    const SpacetimePoint x{0.0, 12.0, 0.0};
    const SpacetimePoint y{0.0, 20.0, 0.0};
    const auto w = wightman_btz(kBtz, x, y, 1e-9).value;
    CHECK(std::abs(w.imag()) <= 1e-8 * std::abs(w.real()));
}

TEST_CASE("transparent boundary drops the partner term") {
    const BtzSpacetime transparent(10.0, 1.0, Boundary::transparent);
    const SpacetimePoint x{0.5, 12.0, 0.2};
    const SpacetimePoint y{0.0, 13.0, 0.0};
    const double eps = 0.02;
    std::complex<double> direct = 1.0 / std::sqrt(sigma_n(transparent, x, y, 0, eps));
    for (int n = 1; n <= 12; ++n) {
        direct += 1.0 / std::sqrt(sigma_n(transparent, x, y, n, eps)) + 1.0 / std::sqrt(sigma_n(transparent, x, y, -n, eps));
    }
    direct /= 4.0 * std::numbers::pi * std::sqrt(2.0) * 10.0;
    const auto w = wightman_btz(transparent, x, y, eps).value;
    CHECK(std::abs(w - direct) <= 1e-13 * std::abs(w));
}

TEST_CASE("image truncation") {
    const SpacetimePoint x{0.3, 11.0, 0.1};
    const SpacetimePoint y{0.0, 14.0, 0.0};
    const auto a = wightman_btz(kBtz, x, y, 0.01, {10, 0.0});
    const auto b = wightman_btz(kBtz, x, y, 0.01, {15, 0.0});
    CHECK(std::abs(a.value - b.value) <= 1e-10 * std::abs(b.value));
    CHECK(std::abs(a.value - b.value) <= 2.0 * a.tail_estimate + 1e-15 * std::abs(b.value));

    const BtzSpacetime slow(10.0, 1e-4);  // r_h / ell = 0.01, images decay slowly
    CHECK_THROWS_AS(wightman_btz(slow, x, y, 0.01, {3, 1e-14}), ConvergenceError);
}

TEST_CASE("wightman rejects bad regulators") {
    const SpacetimePoint x{0.0, 12.0, 0.0};
    CHECK_THROWS_AS(wightman_btz(kBtz, x, x, 0.0), DomainError);
    CHECK_THROWS_AS(wightman_btz(kBtz, x, {0.0, 9.0, 0.0}, 0.1), DomainError);
}
