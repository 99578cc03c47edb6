#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hinf/gleason.hpp"

using namespace hinf;

namespace {

BallPoint disc(Complex w) { return BallPoint(make_vector({w})); }

const BoundaryGrid& circle4096() {
    static const BoundaryGrid g = BoundaryGrid::circle(4096);
    return g;
}

const BoundaryGrid& sphere2() {
    static const BoundaryGrid g = BoundaryGrid::sphere(2, 16384, 42);
    return g;
}

}  // namespace

TEST(PoissonKernel, Examples) {
    EXPECT_DOUBLE_EQ(poisson_kernel(disc(0.0), SpherePoint(make_vector({1.0}))), 1.0);
    EXPECT_NEAR(poisson_kernel(disc(0.5), SpherePoint(make_vector({1.0}))), 3.0, 1e-14);
    EXPECT_NEAR(poisson_kernel(disc(0.5), SpherePoint(make_vector({-1.0}))), 1.0 / 3.0, 1e-14);
    EXPECT_DOUBLE_EQ(poisson_kernel(BallPoint(ComplexVector::Zero(2)), SpherePoint(basis_vector(2, 1))), 1.0);
    // n = 2: ((1 - r^2)/(1 - r)^2)^2 at zeta = e1.
    EXPECT_NEAR(poisson_kernel(BallPoint(0.5 * basis_vector(2, 0)), SpherePoint(basis_vector(2, 0))), 9.0,
                1e-13);
}

TEST(PoissonKernel, IntegratesToOne) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 10; ++k) {
        const ComplexVector l1 = random_ball_vector(rng, 1, 0.9);
        std::vector<double> v;
        for (const auto& z : circle4096().nodes()) v.push_back(poisson_kernel(l1, z));
        EXPECT_NEAR(circle4096().integrate(v), 1.0, 1e-8);

        const ComplexVector l2 = random_ball_vector(rng, 2, 0.5);
        std::vector<double> w;
        for (const auto& z : sphere2().nodes()) w.push_back(poisson_kernel(l2, z));
        EXPECT_NEAR(sphere2().integrate(w), 1.0, 1e-6);
    }
}

TEST(Harnack, UpperAndLowerExamples) {
    EXPECT_EQ(kernel_ratio_max(disc(0.3), disc(0.3), circle4096()).value, 1.0);
    EXPECT_NEAR(harnack_upper(disc(0.0), disc(0.5), circle4096()), 3.0, 3e-2);
    EXPECT_LE(harnack_upper(disc(0.0), disc(0.5), circle4096()), 3.0 * (1 + 1e-12));
    EXPECT_GE(harnack_lower(disc(0.0), disc(0.5), 16), 2.8);
    EXPECT_LE(harnack_lower(disc(0.0), disc(0.5), 16), 3.0 + 1e-9);
    EXPECT_DOUBLE_EQ(harnack_lower(disc(0.0), disc(0.5), 0), 1.0);
    EXPECT_THROW(harnack_lower(disc(0.0), disc(0.5), -1), std::invalid_argument);
    EXPECT_THROW(harnack_lower(disc(0.0), BallPoint(ComplexVector::Zero(2)), 4), std::invalid_argument);
}

TEST(Harnack, LowerNeverExceedsUpper) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; ++k) {
        const BallPoint a(random_ball_vector(rng, 1, 0.9)), b(random_ball_vector(rng, 1, 0.9));
        EXPECT_LE(harnack_lower(a, b, 16), harnack_upper(a, b, circle4096()) * (1 + 1e-9));
    }
}

TEST(Harnack, BracketContainsClosedForm) {
    const HarnackEstimate h = harnack_bracket(disc(0.0), disc(0.5), circle4096(), 32);
    EXPECT_LE(h.lower, 3.0);
    EXPECT_GE(h.upper * (1 + 1e-12), 3.0);
    EXPECT_LE(h.width(), 0.2);
    EXPECT_FALSE(h.lower_witness.empty());
    EXPECT_EQ(h.upper_witness.size(), 1);

    const HarnackEstimate two =
        harnack_bracket(BallPoint(ComplexVector::Zero(2)), BallPoint(0.5 * basis_vector(2, 1)), sphere2(), 16);
    EXPECT_TRUE(std::isfinite(two.upper));
    EXPECT_GE(two.lower, 1.0);
    EXPECT_LE(two.lower, two.upper);
    // On the slice through e2 the bound is at least the disc value.
    EXPECT_GE(two.upper * (1 + 1e-9), 3.0);
}

TEST(PartMetric, Examples) {
    const PartMetric single = part_metric({disc(0.2)}, circle4096(), 8);
    ASSERT_EQ(single.size(), 1);
    EXPECT_EQ(single.distance(0, 0), 0.0);

    const PartMetric m = part_metric({disc(0.0), disc(0.5), disc(-0.5)}, circle4096(), 32);
    EXPECT_NEAR(m.distance(0, 1), std::log(3.0), 1e-2);
    EXPECT_NEAR(m.distance(0, 2), std::log(3.0), 1e-2);
    EXPECT_NEAR(m.distance(1, 2), std::log(9.0), 2e-2);
    EXPECT_EQ(m.distance(1, 0), m.distance(0, 1));
    EXPECT_LE(m.distance(1, 2), m.distance(1, 0) + m.distance(0, 2) + m.slack(1, 2));

    const PartMetric p = part_metric({disc(-0.5), disc(0.0), disc(0.5)}, circle4096(), 32);
    EXPECT_DOUBLE_EQ(p.distance(1, 2), m.distance(0, 1));
    EXPECT_DOUBLE_EQ(p.distance(0, 2), m.distance(1, 2));
}

TEST(Measures, RepresentingPair) {
    const MeasurePair pair = representing_measures(disc(0.0), disc(0.5), circle4096(), 3.0 * 1.001);
    EXPECT_TRUE(pair.ok());
    EXPECT_LE(representation_error(pair.density_mu, pair.grid, 0.0), 1e-8);
    EXPECT_LE(representation_error(pair.density_nu, pair.grid, 0.5), 1e-8);
    for (std::size_t k = 0; k < pair.grid.size(); ++k) {
        const double ratio = pair.density_mu[k] / pair.density_nu[k];
        EXPECT_LE(ratio, pair.b_used * (1 + 1e-12));
        EXPECT_GE(ratio * pair.b_used * (1 + 1e-12), 1.0);
    }
}

TEST(Measures, TooSmallConstantIsReported) {
    const MeasurePair pair = representing_measures(disc(0.0), disc(0.5), circle4096(), 2.0);
    EXPECT_FALSE(pair.ok());
    EXPECT_THROW(representing_measures(disc(0.0), disc(0.5), circle4096(), 1.0), std::invalid_argument);
    EXPECT_THROW(representing_measures(BallPoint(ComplexVector::Zero(2)), BallPoint(ComplexVector::Zero(2)),
                                       sphere2(), 3.0),
                 std::invalid_argument);
}

TEST(Measures, Transport) {
    const MeasurePair pair = representing_measures(disc(0.1), disc(0.4), circle4096(), 2.5);
    ASSERT_TRUE(pair.ok());
    // Any representing measure of lambda: its own Poisson density, or a mixture with it.
    std::vector<double> eta = pair.density_mu;
    const TransportResult t = transported_measure(eta, pair);
    EXPECT_TRUE(t.ok());
    EXPECT_LE(representation_error(t.density, pair.grid, 0.4), 1e-8);

    std::vector<double> wrong = pair.density_nu;
    EXPECT_THROW(transported_measure(wrong, pair), std::invalid_argument);
    EXPECT_THROW(transported_measure(std::vector<double>(3, 1.0), pair), std::invalid_argument);
}

TEST(DualNorm, DiscExtremal) {
    for (double r : {0.1, 0.5, 0.9}) {
        const double exact = disc_dual_norm(pseudo_hyperbolic_distance(0.0, r));
        const double est = dual_norm_estimate(disc(0.0), disc(r));
        EXPECT_LE(est, exact + 1e-12);
        EXPECT_NEAR(est, exact, 1e-9);
    }
    EXPECT_EQ(disc_dual_norm(0.0), 0.0);
    EXPECT_NEAR(pseudo_hyperbolic_distance(0.5, -0.5), 0.8, 1e-15);
}

TEST(DualNorm, RangeAndMonotone) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const BallPoint a(random_ball_vector(rng, 2, 0.99)), b(random_ball_vector(rng, 2, 0.99));
        double prev = 0.0;
        for (int budget : {1, 2, 4, 16, 64, 256}) {
            const double v = dual_norm_estimate(a, b, budget);
            EXPECT_GE(v, prev);
            EXPECT_GE(v, 0.0);
            EXPECT_LT(v, 2.0);
            prev = v;
        }
    }
    EXPECT_EQ(dual_norm_estimate(disc(0.3), disc(0.3)), 0.0);
}

TEST(Dichotomy, Suite) {
    const std::vector<std::pair<BallPoint, BallPoint>> pairs{
        {disc(0.0), disc(0.5)}, {disc(0.9), disc(0.99)}, {disc(0.5), disc(-0.5)}};
    const auto rows = part_dichotomy_suite(pairs, 20, circle4096());
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& row : rows) {
        EXPECT_TRUE(row.consistent);
        EXPECT_EQ(row.exponents.size(), 21u);
        EXPECT_LT(row.dual_norm, 2.0);
        EXPECT_EQ(row.lambda_to_one, row.mu_to_one);
        EXPECT_TRUE(row.lambda_to_one);
    }
    EXPECT_THROW(part_dichotomy_suite(pairs, 0, circle4096()), std::invalid_argument);
    EXPECT_THROW(part_dichotomy_suite(pairs, 31, circle4096()), std::invalid_argument);
}
