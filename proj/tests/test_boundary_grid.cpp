#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "hinf/boundary_grid.hpp"

using namespace hinf;

namespace {

double total_weight(const BoundaryGrid& g) {
    return std::accumulate(g.weights().begin(), g.weights().end(), 0.0);
}

// \int |zeta^a|^2 d sigma = (n-1)! a! / (n-1+|a|)!
double monomial_moment(int n, int a1, int a2) {
    return std::tgamma(n) * std::tgamma(a1 + 1) * std::tgamma(a2 + 1) / std::tgamma(n + a1 + a2);
}

}  // namespace

TEST(BoundaryGrid, CircleBasics) {
    const BoundaryGrid g = BoundaryGrid::circle(4096);
    EXPECT_EQ(g.size(), 4096u);
    EXPECT_NEAR(total_weight(g), 1.0, 1e-14);
    std::vector<Complex> z;
    for (const auto& node : g.nodes()) {
        EXPECT_NEAR(node.norm(), 1.0, 1e-15);
        z.push_back(node(0));
    }
    EXPECT_LE(std::abs(g.integrate(z)), 1e-10);
    EXPECT_NEAR(g.angles()[1024], M_PI / 2, 1e-15);
    EXPECT_THROW(BoundaryGrid::circle(3), std::invalid_argument);
}

TEST(BoundaryGrid, HopfGridMoments) {
    const BoundaryGrid g = BoundaryGrid::sphere(2, 16384, 42);
    EXPECT_GE(g.size(), 10000u);
    EXPECT_NEAR(total_weight(g), 1.0, 1e-13);
    std::vector<Complex> z1;
    for (const auto& node : g.nodes()) z1.push_back(node(0));
    EXPECT_LE(std::abs(g.integrate(z1)), 1e-10);
    for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 2}, {3, 1}}) {
        std::vector<double> v;
        for (const auto& node : g.nodes()) {
            v.push_back(std::pow(std::norm(node(0)), a) * std::pow(std::norm(node(1)), b));
        }
        EXPECT_NEAR(g.integrate(v), monomial_moment(2, a, b), 1e-12) << a << "," << b;
    }
}

TEST(BoundaryGrid, RandomGridsForHigherDimension) {
    const BoundaryGrid g = BoundaryGrid::sphere(3, 4000, 7);
    EXPECT_NEAR(total_weight(g), 1.0, 1e-13);
    std::vector<Complex> z1;
    std::vector<double> m;
    for (const auto& node : g.nodes()) {
        EXPECT_NEAR(node.norm(), 1.0, 1e-14);
        z1.push_back(node(0));
        m.push_back(std::norm(node(0)));
    }
    EXPECT_LE(std::abs(g.integrate(z1)), 1e-10);
    EXPECT_NEAR(g.integrate(m), 1.0 / 3.0, 0.03);
    const BoundaryGrid again = BoundaryGrid::sphere(3, 4000, 7);
    EXPECT_EQ(again.nodes().back(), g.nodes().back());
}

TEST(BoundaryGrid, SphereOfDimensionOneIsCircle) {
    const BoundaryGrid g = BoundaryGrid::sphere(1, 512, 1);
    EXPECT_EQ(g.size(), 512u);
    EXPECT_FALSE(g.angles().empty());
}

TEST(BoundaryGrid, Dilated) {
    const BoundaryGrid g = BoundaryGrid::circle(16);
    for (const auto& p : g.dilated(0.9)) EXPECT_NEAR(p.norm(), 0.9, 1e-15);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
    std::vector<double> x, w;
    gauss_legendre(8, 0.0, 1.0, x, w);
    for (int p = 0; p <= 15; ++p) {
        double s = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) s += w[k] * std::pow(x[k], p);
        EXPECT_NEAR(s, 1.0 / (p + 1), 1e-14) << p;
    }
    EXPECT_THROW(gauss_legendre(0, 0.0, 1.0, x, w), std::invalid_argument);
}
