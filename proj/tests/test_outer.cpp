#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hinf/outer.hpp"

using namespace hinf;

namespace {
constexpr double kPi = std::numbers::pi;
const double kE = std::exp(1.0);
}  // namespace

TEST(StepModulus, Validation) {
    EXPECT_THROW(StepModulus({{0.0, kPi, 1.0}}), std::invalid_argument);
    EXPECT_THROW(StepModulus({{0.0, kPi, 1.0}, {kPi, 2 * kPi, 0.0}}), std::invalid_argument);
    EXPECT_THROW(StepModulus({{0.0, kPi, 1.0}, {kPi, 2 * kPi, -1.0}}), std::invalid_argument);
    EXPECT_THROW(StepModulus({{0.0, 2 * kPi, 1e7}}), std::invalid_argument);
    EXPECT_THROW(StepModulus({{0.0, 1.0, 1.0}, {1.5, 2 * kPi, 1.0}}), std::invalid_argument);
    EXPECT_THROW(StepModulus::with_background({{0.0, 1.0, kE}, {0.5, 1.5, kE}}), std::invalid_argument);
}

TEST(StepModulus, WrapAndLevels) {
    const StepModulus m = StepModulus::with_background({{-0.5, 0.5, kE}}, 1.0);
    EXPECT_DOUBLE_EQ(m.level_at(0.2), kE);
    EXPECT_DOUBLE_EQ(m.level_at(2 * kPi - 0.2), kE);
    EXPECT_DOUBLE_EQ(m.level_at(kPi), 1.0);
    EXPECT_NEAR(m.log_mean(), 1.0 / (2 * kPi), 1e-15);
    EXPECT_NEAR(m.distance_to_jump(0.0), 0.5, 1e-15);
    EXPECT_NEAR(m.log_integral(-1.0, 1.0), 1.0, 1e-14);
    EXPECT_NEAR(m.log_integral(0.0, 4 * kPi), 2.0, 1e-14);
}

TEST(Outer, ConstantModulusGivesOne) {
    const OuterFunction F = outer_from_modulus(StepModulus({{0.0, 2 * kPi, 1.0}}), 256);
    for (Complex w : {Complex(0.0), Complex(0.5, 0.3), std::polar(0.999, 1.0)}) {
        EXPECT_NEAR(std::abs(F(w) - 1.0), 0.0, 1e-14);
    }
    EXPECT_THROW(outer_from_modulus(StepModulus({{0.0, 2 * kPi, 1.0}}), 128), std::invalid_argument);
    EXPECT_THROW(F(1.0), std::domain_error);
}

TEST(Outer, HalfCircleSeparator) {
    const OuterFunction F = halfcircle_separator(4096);
    EXPECT_NEAR(std::abs(F(0.0)), std::exp(0.5), 1e-6);
    EXPECT_NEAR(std::abs(F(std::polar(0.999, kPi / 2))), 1.0, 0.02);
    EXPECT_NEAR(std::abs(F(std::polar(0.999, 3 * kPi / 2))), kE, 0.02 * kE);
}

TEST(Outer, MatchesClosedFormForHalfCircle) {
    // log|F| is the harmonic measure of the lower half circle. The Cayley map
    // (1+w)/(1-w) sends it to the negative imaginary axis of the right half plane.
    // Averaging log psi over the two cells that straddle a jump costs O(h^2).
    const OuterFunction F = halfcircle_separator(4096);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const Complex w = std::polar(0.95 * std::sqrt(u(rng)), 2 * kPi * u(rng));
        const double expected = 0.5 - std::arg((1.0 + w) / (1.0 - w)) / kPi;
        EXPECT_NEAR(std::log(std::abs(F(w))), expected, 1e-5) << w;
    }
}

TEST(Outer, CapOscillator) {
    std::vector<std::pair<double, double>> caps;
    for (int j = 0; j < 4; ++j) caps.emplace_back(kPi / 4 + j * kPi / 2 - 0.3, kPi / 4 + j * kPi / 2 + 0.3);
    const OuterFunction F = cap_oscillator(caps, 4096);
    for (int j = 0; j < 4; ++j) {
        const double expected = std::exp(j % 2 == 0 ? 1.0 : -1.0);
        EXPECT_NEAR(std::abs(F(std::polar(0.999, kPi / 4 + j * kPi / 2))), expected, 0.02 * expected);
    }
    EXPECT_NEAR(std::abs(F(0.0)), std::exp(F.modulus().log_mean()), 1e-6);
    EXPECT_NEAR(std::abs(F(0.0)), 1.0, 1e-6);  // alternating levels cancel in the mean
}

TEST(Outer, EmptyAndSingleCap) {
    const OuterFunction none = cap_oscillator({}, 512);
    EXPECT_NEAR(std::abs(none(Complex(0.3, -0.2)) - 1.0), 0.0, 1e-14);
    const OuterFunction one = cap_oscillator({{1.0, 2.0}}, 4096);
    const OuterFunction direct =
        outer_from_modulus(StepModulus::with_background({{1.0, 2.0, kE}}, 1.0), 4096);
    EXPECT_NEAR(std::abs(one(0.4) - direct(0.4)), 0.0, 1e-15);
    EXPECT_THROW(cap_oscillator({{0.0, 1.0}, {0.5, 2.0}}), std::invalid_argument);
}

TEST(Outer, ZeroFreeAndBounded) {
    const OuterFunction F = halfcircle_separator(4096);
    const HolomorphicFunction h = F.as_function();
    ASSERT_TRUE(h.sup_bound.has_value());
    EXPECT_NEAR(*h.sup_bound, kE, 1e-15);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 2000; ++k) {
        const Complex w = std::polar(0.999 * std::sqrt(u(rng)), 2 * kPi * u(rng));
        const double m = std::abs(F(w));
        EXPECT_GT(m, 0.0);
        EXPECT_LE(m, kE * (1 + 1e-9));
    }
}
