#pragma once

// The dyadic infinite product
//
//   f(z) = [ prod_{j >= 0} <L^{-2^j}(z), e_1> ] * <z, e_1>
//
// truncated to j = 0..N. Every factor is the first coordinate of a ball
// point, hence of modulus < 1, and |factor - 1| <= K / 2^j on the working
// ball by the tail constant of L, so the omitted tail is bounded by
// sum_{j > N} K / 2^j = K / 2^N.

#include <cstdint>
#include <vector>

#include "hinf/ball.hpp"
#include "hinf/dynamics.hpp"

namespace hinf {

struct EvalResult {
    Complex value;
    double truncation_bound = 0.0;  ///< |true value - value| <= truncation_bound
};

/// j_max used when calibrating the tail constant for a product.
inline constexpr std::int64_t kProductTailJMax = 256;

class ProductFunction {
public:
    ProductFunction(int dimension, int truncation, double working_radius, std::uint64_t seed = 42);

    int dimension() const { return n_; }
    int truncation() const { return N_; }
    double working_radius() const { return radius_; }
    const TailConstant& tail_constant() const { return tail_; }

    /// K / 2^N.
    double tail_bound() const;

    /// Certified evaluation. Throws std::domain_error outside the working radius.
    EvalResult eval(const BallPoint& z) const;

    /// Truncated product at any point of the open ball, without a certificate.
    Complex evaluate_truncated(const ComplexVector& z) const;

    /// The truncated product as a function handle (declared bound 1).
    HolomorphicFunction as_function() const;

    /// f(L^{2^k}(z)) through the group law L^{-2^j} L^{2^k} = L^{2^k - 2^j}:
    /// the factors are iterates of z itself, so the certificate from the
    /// working ball applies although L^{2^k}(z) lies near the sphere.
    /// Requires |z| <= working radius and 0 <= k < N.
    EvalResult eval_on_orbit(const BallPoint& z, int k) const;

private:
    int n_;
    int N_;
    double radius_;
    TailConstant tail_;
};

ProductFunction build_product(int dimension, int truncation, double working_radius,
                              std::uint64_t seed = 42);

EvalResult eval_product(const ProductFunction& f, const BallPoint& z);

/// Truncation N recommended for tables up to k_max: max(32, k_max + 16).
int default_truncation(int k_max);

struct ConvergenceRow {
    int k = 0;
    double observed_error = 0.0;    ///< |f(L^{2^k}(z)) - <z, e_1>|
    double rate_bound = 0.0;        ///< |z| K (k + 2) / 2^{k-1}
    double truncation_bound = 0.0;
    bool within_bound() const { return observed_error <= rate_bound + truncation_bound; }
};

/// Rows k = k_min..k_max. Throws std::invalid_argument when the product's
/// truncation does not exceed k_max.
std::vector<ConvergenceRow> convergence_table(const ProductFunction& f, const BallPoint& z,
                                              int k_max, int k_min = 2);

}  // namespace hinf
