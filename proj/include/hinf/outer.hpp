#pragma once

// Outer functions on the disc with a prescribed piecewise-constant boundary
// modulus:
//
//   F(w) = exp( (1/2pi) \int (e^{it} + w) / (e^{it} - w) log psi(t) dt ).
//
// F is zero-free, |F(0)| is the exponential of the mean of log psi, and the
// radial limits of |F| recover psi at every continuity point of psi.

#include <utility>
#include <vector>

#include "hinf/ball.hpp"
#include "hinf/boundary_grid.hpp"

namespace hinf {

struct Arc {
    double start = 0.0;  ///< radians
    double end = 0.0;    ///< radians, end > start
    double level = 1.0;
};

class StepModulus {
public:
    inline static constexpr double kMinLevel = 1e-6;
    inline static constexpr double kMaxLevel = 1e6;

    /// Arcs must partition [0, 2 pi) in increasing order with positive levels
    /// in [1e-6, 1e6]. Throws std::invalid_argument otherwise.
    explicit StepModulus(std::vector<Arc> arcs);

    /// Arcs given at arbitrary real angles (wrapping allowed) and pairwise
    /// disjoint; the complement gets `background`.
    static StepModulus with_background(const std::vector<Arc>& arcs, double background = 1.0);

    const std::vector<Arc>& arcs() const { return arcs_; }
    double level_at(double theta) const;
    /// (1/2pi) \int log psi.
    double log_mean() const;
    /// \int_a^b log psi(t) dt for any real a <= b (psi is 2pi-periodic).
    double log_integral(double a, double b) const;
    double max_level() const;
    /// Distance from theta to the nearest jump of psi.
    double distance_to_jump(double theta) const;

private:
    double log_integral_from_zero(double x) const;  // x in [0, 2pi]

    std::vector<Arc> arcs_;
};

class OuterFunction {
public:
    OuterFunction(StepModulus modulus, BoundaryGrid grid);

    const StepModulus& modulus() const { return modulus_; }
    const BoundaryGrid& quadrature() const { return grid_; }

    /// Requires |w| < 1.
    Complex operator()(Complex w) const;
    HolomorphicFunction as_function() const;

private:
    StepModulus modulus_;
    BoundaryGrid grid_;
    std::vector<Complex> cell_edges_;   // e^{i (t_k - h/2)}, one per cell
    std::vector<double> cell_log_psi_;  // exact cell averages of log psi
    double cell_width_ = 0.0;
};

/// Herglotz quadrature on an equispaced circle grid of `grid_size` cells.
/// The kernel is integrated exactly over each cell and log psi is averaged
/// exactly over each cell. grid_size >= 256.
OuterFunction outer_from_modulus(const StepModulus& psi, int grid_size = 4096);

/// |F| = 1 on the upper half circle, e on the lower half circle.
OuterFunction halfcircle_separator(int grid_size = 4096);

/// Boundary modulus e^{(-1)^j} on the j-th arc and 1 elsewhere. Arcs are
/// (start, end) pairs in radians and must be pairwise disjoint.
OuterFunction cap_oscillator(const std::vector<std::pair<double, double>>& arcs,
                             int grid_size = 4096);

}  // namespace hinf
