#pragma once

// Harnack constants between point evaluations, the part metric, representing
// measures on a discretized circle, and the dual-norm / peaking dichotomy.

#include <cstddef>
#include <string>
#include <vector>

#include "hinf/ball.hpp"
#include "hinf/boundary_grid.hpp"

namespace hinf {

/// n = 1: (1 - |l|^2)/|zeta - l|^2; n >= 2: ((1 - |l|^2)/|1 - <l, zeta>|^2)^n.
double poisson_kernel(const BallPoint& lambda, const SpherePoint& zeta);
double poisson_kernel(const ComplexVector& lambda, const ComplexVector& zeta);

struct KernelRatioMax {
    double value = 1.0;
    std::size_t node = 0;
};

/// max over grid nodes of P(lambda, .)/P(mu, .).
KernelRatioMax kernel_ratio_max(const BallPoint& lambda, const BallPoint& mu,
                                const BoundaryGrid& grid);

double harnack_upper(const BallPoint& lambda, const BallPoint& mu, const BoundaryGrid& grid);

/// max of u(lambda)/u(mu) over u = Poisson integral of |p|^2, deg p <= degree
/// (n = 1), or slice lifts of such u along a few directions (n >= 2).
double harnack_lower(const BallPoint& lambda, const BallPoint& mu, int degree);

struct HarnackEstimate {
    double lower = 1.0;
    double upper = 1.0;
    std::string lower_witness;
    ComplexVector upper_witness;  ///< grid node achieving the kernel-ratio max
    double width() const { return upper - lower; }
};

/// Two-sided bracket: both bounds are maximized over the two orders of (lambda, mu).
HarnackEstimate harnack_bracket(const BallPoint& lambda, const BallPoint& mu,
                                const BoundaryGrid& grid, int degree);

struct PartMetric {
    ComplexMatrix::Index size() const { return distance.rows(); }
    Eigen::MatrixXd distance;  ///< log of the two-sided upper bound
    Eigen::MatrixXd slack;     ///< log upper - log lower
};

PartMetric part_metric(const std::vector<BallPoint>& points, const BoundaryGrid& grid,
                       int degree);

struct MeasureViolation {
    std::size_t node = 0;
    std::string quantity;
    double value = 0.0;
};

/// Densities are relative to the grid weights: sum_k w_k density[k] = 1.
struct MeasurePair {
    BoundaryGrid grid;
    Complex lambda;
    Complex mu;
    std::vector<double> density_mu;
    std::vector<double> density_nu;
    std::vector<double> alpha;
    std::vector<double> beta;
    double b_used = 0.0;
    std::vector<MeasureViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Representing measures for lambda (mu-density) and mu (nu-density) with
/// 1/b <= d mu / d nu <= b, from alpha = b P_mu - P_lambda and
/// beta = b P_lambda - P_mu. Circle grids only; b > 1.
MeasurePair representing_measures(const BallPoint& lambda, const BallPoint& mu,
                                  const BoundaryGrid& grid, double b);

/// max over m = 0..degree of |sum_k w_k density[k] zeta_k^m - point^m|;
/// harmonic polynomials of degree <= `degree` are spanned by Re, Im of z^m.
double representation_error(const std::vector<double>& density, const BoundaryGrid& grid,
                            Complex point, int degree = 8);

struct TransportResult {
    std::vector<double> density;
    std::vector<MeasureViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// eta/b + nu - mu/b: moves a representing measure eta of lambda to one of mu.
/// Throws std::invalid_argument if eta does not represent lambda on degree-8 tests.
TransportResult transported_measure(const std::vector<double>& eta, const MeasurePair& pair);

/// Lower bound for sup |f(lambda) - f(mu)| over the unit ball of H^inf, searched
/// over the first coordinate, a linear slice, Moebius slices and degree-2
/// Blaschke slices. Candidates form a fixed list, so the result is
/// nondecreasing in budget. Always in [0, 2].
double dual_norm_estimate(const BallPoint& lambda, const BallPoint& mu, int budget = 256);

/// 2(1 - sqrt(1 - rho^2))/rho, the sup over the disc for pseudo-hyperbolic distance rho.
double disc_dual_norm(double rho);

double pseudo_hyperbolic_distance(Complex a, Complex b);

struct DichotomyRow {
    ComplexVector lambda;
    ComplexVector mu;
    std::vector<int> exponents;         ///< j in f_j = ((1 + <z,u>)/2)^{1/j}
    std::vector<double> lambda_values;  ///< |f_j(lambda)|
    std::vector<double> mu_values;      ///< |f_j(mu)|
    bool lambda_to_one = false;
    bool mu_to_one = false;
    double dual_norm = 0.0;
    double harnack_upper = 0.0;
    bool consistent = false;
};

/// Peaking family f_j for j = 2^0 .. 2^max_power along u = lambda/|lambda|
/// (e_1 when lambda = 0). "Tends to one" means 1 - |f_j| <= 1e-3 at the last j
/// with |f_j| nondecreasing over the last half of the family.
std::vector<DichotomyRow> part_dichotomy_suite(
    const std::vector<std::pair<BallPoint, BallPoint>>& pairs, int max_power,
    const BoundaryGrid& grid, int budget = 256);

}  // namespace hinf
