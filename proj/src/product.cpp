#include "hinf/product.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hinf {

namespace {

constexpr int kMaxTruncation = 52;

std::int64_t pow2(int p) { return std::int64_t{1} << p; }

}  // namespace

ProductFunction::ProductFunction(int dimension, int truncation, double working_radius,
                                 std::uint64_t seed)
    : n_(dimension), N_(truncation), radius_(working_radius) {
    if (n_ < 1) throw std::invalid_argument("build_product: dimension must be positive");
    if (N_ < 1 || N_ > kMaxTruncation) {
        throw std::invalid_argument("build_product: truncation must lie in [1, 52]");
    }
    if (!(radius_ > 0.0 && radius_ <= 0.99)) {
        throw std::invalid_argument("build_product: working radius must lie in (0, 0.99]");
    }
    tail_ = hinf::tail_constant(radius_, kProductTailJMax, seed);
    if (!tail_.validated) {
        throw std::runtime_error("build_product: tail constant failed re-validation");
    }
}

double ProductFunction::tail_bound() const { return std::ldexp(tail_.K, -N_); }

Complex ProductFunction::evaluate_truncated(const ComplexVector& z) const {
    if (z.size() != n_) throw std::invalid_argument("ProductFunction: dimension mismatch");
    const Complex z1 = z(0);
    Complex value = z1;
    for (int j = 0; j <= N_; ++j) value *= 1.0 + iterate_first_deviation(z1, -pow2(j));
    return value;
}

EvalResult ProductFunction::eval(const BallPoint& z) const {
    if (z.norm() > radius_) {
        throw std::domain_error("eval_product: |z| = " + std::to_string(z.norm()) +
                                " exceeds the certified working radius " +
                                std::to_string(radius_));
    }
    return {evaluate_truncated(z.vector()), tail_bound()};
}

HolomorphicFunction ProductFunction::as_function() const {
    ProductFunction self = *this;
    return {n_, [self](const ComplexVector& z) { return self.evaluate_truncated(z); }, 1.0};
}

EvalResult ProductFunction::eval_on_orbit(const BallPoint& z, int k) const {
    if (z.dimension() != n_) throw std::invalid_argument("ProductFunction: dimension mismatch");
    if (z.norm() > radius_) {
        throw std::domain_error("eval_on_orbit: seed outside the certified working radius");
    }
    if (k < 0 || k >= N_) {
        throw std::invalid_argument("eval_on_orbit: insufficient truncation for k = " +
                                    std::to_string(k));
    }
    const Complex z1 = z[0];
    Complex value = 1.0 + iterate_first_deviation(z1, pow2(k));
    for (int j = 0; j <= N_; ++j) {
        if (j == k) {
            value *= z1;
        } else {
            value *= 1.0 + iterate_first_deviation(z1, pow2(k) - pow2(j));
        }
    }
    // Omitted j > N: |factor - 1| <= K / (2^j - 2^k) <= K / 2^{j-1}.
    return {value, std::abs(z1) * std::ldexp(2.0 * tail_.K, -N_)};
}

ProductFunction build_product(int dimension, int truncation, double working_radius,
                              std::uint64_t seed) {
    return ProductFunction(dimension, truncation, working_radius, seed);
}

EvalResult eval_product(const ProductFunction& f, const BallPoint& z) { return f.eval(z); }

int default_truncation(int k_max) { return std::max(32, k_max + 16); }

std::vector<ConvergenceRow> convergence_table(const ProductFunction& f, const BallPoint& z,
                                              int k_max, int k_min) {
    if (k_min < 0 || k_max < k_min) throw std::invalid_argument("convergence_table: bad k range");
    if (k_max >= f.truncation()) {
        throw std::invalid_argument("convergence_table: insufficient truncation N = " +
                                    std::to_string(f.truncation()) + " for k_max = " +
                                    std::to_string(k_max));
    }
    const Complex target = z[0];
    const double K = f.tail_constant().K;
    std::vector<ConvergenceRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        const EvalResult r = f.eval_on_orbit(z, k);
        ConvergenceRow row;
        row.k = k;
        row.observed_error = std::abs(r.value - target);
        row.rate_bound = z.norm() * K * (k + 2) / std::ldexp(1.0, k - 1);
        row.truncation_bound = r.truncation_bound;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hinf
