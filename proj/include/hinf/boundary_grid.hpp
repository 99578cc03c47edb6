#pragma once

// Quadrature grids for the normalized rotation-invariant measure on the sphere.

#include <cstdint>
#include <vector>

#include "hinf/ball.hpp"

namespace hinf {

class BoundaryGrid {
public:
    /// n = 1: N equispaced nodes e^{2 pi i k / N}, weights 1/N.
    static BoundaryGrid circle(int size);

    /// Sphere in C^n with at least roughly `size` nodes.
    ///  n = 1: circle(size).
    ///  n = 2: product grid in Hopf coordinates
    ///         z = (sqrt(1-t) e^{i a}, sqrt(t) e^{i b}); t is uniform under
    ///         sigma, so t uses Gauss-Legendre on [0, 1] and the angles are
    ///         equispaced.
    ///  n >= 3: seeded random nodes, each repeated with phases 1, i, -1, -i.
    static BoundaryGrid sphere(int n, int size, std::uint64_t seed = 42);

    int dimension() const { return n_; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<ComplexVector>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    const ComplexVector& node(std::size_t k) const { return nodes_[k]; }
    double weight(std::size_t k) const { return weights_[k]; }

    /// Node angles for circle grids (empty otherwise).
    const std::vector<double>& angles() const { return angles_; }

    /// sum_k w_k values[k].
    double integrate(const std::vector<double>& values) const;
    Complex integrate(const std::vector<Complex>& values) const;

    /// Grid dilated by r (nodes r * zeta), for sup estimates inside the ball.
    std::vector<ComplexVector> dilated(double r) const;

private:
    BoundaryGrid(int n, std::vector<ComplexVector> nodes, std::vector<double> weights,
                 std::vector<double> angles);

    int n_;
    std::vector<ComplexVector> nodes_;
    std::vector<double> weights_;
    std::vector<double> angles_;
};

/// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int count, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace hinf
