#include "hinf/boundary_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace hinf {

namespace {

// Legendre P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

}  // namespace

void gauss_legendre(int count, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    if (count < 1) throw std::invalid_argument("gauss_legendre: count must be positive");
    nodes.assign(count, 0.0);
    weights.assign(count, 0.0);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < (count + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            const auto [pn, pm] = legendre_pair(count, x);
            dp = count * (x * pn - pm) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const auto [pn, pm] = legendre_pair(count, x);
        dp = count * (x * pn - pm) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = mid - half * x;
        nodes[count - 1 - i] = mid + half * x;
        weights[i] = weights[count - 1 - i] = half * w;
    }
}

BoundaryGrid::BoundaryGrid(int n, std::vector<ComplexVector> nodes, std::vector<double> weights,
                           std::vector<double> angles)
    : n_(n), nodes_(std::move(nodes)), weights_(std::move(weights)), angles_(std::move(angles)) {}

BoundaryGrid BoundaryGrid::circle(int size) {
    if (size < 4) throw std::invalid_argument("BoundaryGrid::circle: need at least 4 nodes");
    std::vector<ComplexVector> nodes;
    std::vector<double> angles;
    nodes.reserve(size);
    angles.reserve(size);
    for (int k = 0; k < size; ++k) {
        const double t = 2.0 * std::numbers::pi * k / size;
        angles.push_back(t);
        ComplexVector v(1);
        v(0) = std::polar(1.0, t);
        nodes.push_back(std::move(v));
    }
    return BoundaryGrid(1, std::move(nodes), std::vector<double>(size, 1.0 / size),
                        std::move(angles));
}

BoundaryGrid BoundaryGrid::sphere(int n, int size, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("BoundaryGrid::sphere: dimension must be positive");
    if (n == 1) return circle(size);
    if (size < 16) throw std::invalid_argument("BoundaryGrid::sphere: need at least 16 nodes");

    std::vector<ComplexVector> nodes;
    std::vector<double> weights;
    if (n == 2) {
        const int m = std::max(2, static_cast<int>(std::lround(std::cbrt(size / 4.0))));
        const int p = std::max(4, static_cast<int>(std::lround(std::sqrt(double(size) / m))));
        std::vector<double> ts, tw;
        gauss_legendre(m, 0.0, 1.0, ts, tw);
        nodes.reserve(static_cast<std::size_t>(m) * p * p);
        for (int i = 0; i < m; ++i) {
            const double r1 = std::sqrt(1.0 - ts[i]);
            const double r2 = std::sqrt(ts[i]);
            for (int a = 0; a < p; ++a) {
                for (int b = 0; b < p; ++b) {
                    ComplexVector v(2);
                    v(0) = std::polar(r1, 2.0 * std::numbers::pi * a / p);
                    v(1) = std::polar(r2, 2.0 * std::numbers::pi * b / p);
                    nodes.push_back(std::move(v));
                    weights.push_back(tw[i] / (double(p) * p));
                }
            }
        }
        return BoundaryGrid(2, std::move(nodes), std::move(weights), {});
    }

    std::mt19937_64 rng(seed);
    const int base = std::max(1, size / 4);
    const Complex phases[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
    for (int s = 0; s < base; ++s) {
        const ComplexVector v = random_sphere_vector(rng, n);
        for (const Complex& ph : phases) {
            nodes.push_back(v * ph);
            weights.push_back(1.0 / (4.0 * base));
        }
    }
    return BoundaryGrid(n, std::move(nodes), std::move(weights), {});
}

double BoundaryGrid::integrate(const std::vector<double>& values) const {
    if (values.size() != nodes_.size()) throw std::invalid_argument("integrate: size mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) s += weights_[k] * values[k];
    return s;
}

Complex BoundaryGrid::integrate(const std::vector<Complex>& values) const {
    if (values.size() != nodes_.size()) throw std::invalid_argument("integrate: size mismatch");
    Complex s = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) s += weights_[k] * values[k];
    return s;
}

std::vector<ComplexVector> BoundaryGrid::dilated(double r) const {
    std::vector<ComplexVector> out;
    out.reserve(nodes_.size());
    for (const auto& z : nodes_) out.push_back(r * z);
    return out;
}

}  // namespace hinf
