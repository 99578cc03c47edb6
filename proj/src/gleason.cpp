#include "hinf/gleason.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "hinf/parallel.hpp"

namespace hinf {

namespace {

constexpr double kDensityTol = 1e-12;

void require_same_dimension(const BallPoint& a, const BallPoint& b, int n, const char* who) {
    if (a.dimension() != n || b.dimension() != n) {
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
    }
}

// (A_z)_{jk} = z^{k-j} for k >= j and conj(z)^{j-k} otherwise: the Poisson
// integral of |p|^2 at z equals c^* A_z c for the coefficient vector c of p.
ComplexMatrix moment_matrix(Complex z, int degree) {
    const int d = degree + 1;
    std::vector<Complex> pw(d);
    pw[0] = 1.0;
    for (int k = 1; k < d; ++k) pw[k] = pw[k - 1] * z;
    ComplexMatrix a(d, d);
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) a(j, k) = k >= j ? pw[k - j] : std::conj(pw[j - k]);
    }
    return a;
}

double disc_lower(Complex l, Complex m, int degree) {
    if (l == m) return 1.0;
    const ComplexMatrix a = moment_matrix(l, degree);
    const ComplexMatrix b = moment_matrix(m, degree);
    Eigen::GeneralizedSelfAdjointEigenSolver<ComplexMatrix> solver(a, b, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("harnack_lower: generalized eigenproblem failed");
    }
    return std::max(1.0, solver.eigenvalues().maxCoeff());
}

struct LowerResult {
    double value = 1.0;
    std::string witness;
};

std::string describe_direction(const ComplexVector& a) {
    std::ostringstream os;
    os.precision(6);
    os << "(";
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        if (k) os << ", ";
        os << a(k).real() << (a(k).imag() < 0 ? "-" : "+") << std::abs(a(k).imag()) << "i";
    }
    os << ")";
    return os.str();
}

LowerResult lower_with_witness(const BallPoint& lambda, const BallPoint& mu, int degree) {
    const int n = lambda.dimension();
    require_same_dimension(lambda, mu, n, "harnack_lower");
    if (degree < 0) throw std::invalid_argument("harnack_lower: degree must be >= 0");
    LowerResult best;
    best.witness = "constant density";
    if (n == 1) {
        best.value = disc_lower(lambda[0], mu[0], degree);
        best.witness = "|p|^2 density, deg p <= " + std::to_string(degree);
        return best;
    }
    std::vector<ComplexVector> dirs;
    const ComplexVector diff = lambda.vector() - mu.vector();
    if (diff.norm() > 0.0) dirs.push_back(diff.normalized());
    if (lambda.norm() > 0.0) dirs.push_back(lambda.vector().normalized());
    if (mu.norm() > 0.0) dirs.push_back(mu.vector().normalized());
    for (int k = 0; k < n; ++k) dirs.push_back(basis_vector(n, k));
    for (const ComplexVector& a : dirs) {
        const double v =
            disc_lower(hermitian_inner(lambda.vector(), a), hermitian_inner(mu.vector(), a), degree);
        if (v > best.value) {
            best.value = v;
            best.witness = "slice lift along " + describe_direction(a) + " of |p|^2 density, deg p <= " +
                           std::to_string(degree);
        }
    }
    return best;
}

Complex mobius(Complex a, Complex w) { return (a - w) / (1.0 - std::conj(a) * w); }

double van_der_corput(int k) {
    double s = 0.0, base = 0.5;
    for (; k > 0; k >>= 1, base *= 0.5) {
        if (k & 1) s += base;
    }
    return s;
}

}  // namespace

double poisson_kernel(const ComplexVector& lambda, const ComplexVector& zeta) {
    if (lambda.size() != zeta.size()) throw std::invalid_argument("poisson_kernel: dimension mismatch");
    const double r2 = lambda.squaredNorm();
    if (!(r2 < 1.0)) throw std::domain_error("poisson_kernel: lambda must be interior");
    const double q = (1.0 - r2) / std::norm(1.0 - hermitian_inner(lambda, zeta));
    return std::pow(q, static_cast<int>(lambda.size()));
}

double poisson_kernel(const BallPoint& lambda, const SpherePoint& zeta) {
    return poisson_kernel(lambda.vector(), zeta.vector());
}

KernelRatioMax kernel_ratio_max(const BallPoint& lambda, const BallPoint& mu,
                                const BoundaryGrid& grid) {
    require_same_dimension(lambda, mu, grid.dimension(), "harnack_upper");
    KernelRatioMax best;
    best.value = -1.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double r = poisson_kernel(lambda.vector(), grid.node(k)) /
                         poisson_kernel(mu.vector(), grid.node(k));
        if (r > best.value) {
            best.value = r;
            best.node = k;
        }
    }
    if (lambda.vector() == mu.vector()) best.value = 1.0;
    return best;
}

double harnack_upper(const BallPoint& lambda, const BallPoint& mu, const BoundaryGrid& grid) {
    return kernel_ratio_max(lambda, mu, grid).value;
}

double harnack_lower(const BallPoint& lambda, const BallPoint& mu, int degree) {
    return lower_with_witness(lambda, mu, degree).value;
}

HarnackEstimate harnack_bracket(const BallPoint& lambda, const BallPoint& mu,
                                const BoundaryGrid& grid, int degree) {
    HarnackEstimate est;
    const KernelRatioMax fwd = kernel_ratio_max(lambda, mu, grid);
    const KernelRatioMax bwd = kernel_ratio_max(mu, lambda, grid);
    const KernelRatioMax& up = fwd.value >= bwd.value ? fwd : bwd;
    est.upper = up.value;
    est.upper_witness = grid.node(up.node);
    LowerResult lf = lower_with_witness(lambda, mu, degree);
    LowerResult lb = lower_with_witness(mu, lambda, degree);
    if (lb.value > lf.value) {
        lb.witness += " (reversed order)";
        lf = std::move(lb);
    }
    est.lower = lf.value;
    est.lower_witness = std::move(lf.witness);
    return est;
}

PartMetric part_metric(const std::vector<BallPoint>& points, const BoundaryGrid& grid,
                       int degree) {
    const auto m = static_cast<Eigen::Index>(points.size());
    PartMetric pm;
    pm.distance = Eigen::MatrixXd::Zero(m, m);
    pm.slack = Eigen::MatrixXd::Zero(m, m);
    std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    }
    std::vector<HarnackEstimate> est(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t p) {
        est[p] = harnack_bracket(points[pairs[p].first], points[pairs[p].second], grid, degree);
    });
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        const double d = std::log(est[p].upper);
        const double s = std::max(0.0, d - std::log(est[p].lower));
        pm.distance(i, j) = pm.distance(j, i) = d;
        pm.slack(i, j) = pm.slack(j, i) = s;
    }
    return pm;
}

double representation_error(const std::vector<double>& density, const BoundaryGrid& grid,
                            Complex point, int degree) {
    if (grid.dimension() != 1 || density.size() != grid.size()) {
        throw std::invalid_argument("representation_error: density must live on a circle grid");
    }
    double worst = 0.0;
    Complex target = 1.0;
    for (int m = 0; m <= degree; ++m) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            s += grid.weight(k) * density[k] * std::polar(1.0, m * grid.angles()[k]);
        }
        worst = std::max(worst, std::abs(s - target));
        target *= point;
    }
    return worst;
}

MeasurePair representing_measures(const BallPoint& lambda, const BallPoint& mu,
                                  const BoundaryGrid& grid, double b) {
    if (grid.dimension() != 1 || grid.angles().empty()) {
        throw std::invalid_argument("representing_measures: requires a circle grid (n = 1)");
    }
    require_same_dimension(lambda, mu, 1, "representing_measures");
    if (!(b > 1.0)) throw std::invalid_argument("representing_measures: b must be > 1");

    const std::size_t size = grid.size();
    auto normalized_kernel = [&](const BallPoint& p) {
        std::vector<double> v(size);
        for (std::size_t k = 0; k < size; ++k) v[k] = poisson_kernel(p.vector(), grid.node(k));
        const double total = grid.integrate(v);
        for (double& x : v) x /= total;
        return v;
    };
    const std::vector<double> pl = normalized_kernel(lambda);
    const std::vector<double> pm = normalized_kernel(mu);

    MeasurePair pair{grid, lambda[0], mu[0], {}, {}, {}, {}, b, {}};
    pair.alpha.resize(size);
    pair.beta.resize(size);
    pair.density_mu.resize(size);
    pair.density_nu.resize(size);
    const double denom = b * b - 1.0;
    auto clamp = [&](double v, std::size_t k, const char* what) {
        if (v < -kDensityTol) pair.violations.push_back({k, what, v});
        return std::max(v, 0.0);
    };
    for (std::size_t k = 0; k < size; ++k) {
        const double a = b * pm[k] - pl[k];
        const double be = b * pl[k] - pm[k];
        pair.alpha[k] = clamp(a, k, "alpha");
        pair.beta[k] = clamp(be, k, "beta");
        pair.density_mu[k] = clamp((b * be + a) / denom, k, "density_mu");
        pair.density_nu[k] = clamp((b * a + be) / denom, k, "density_nu");
    }
    const double rel = 1.0 + kDensityTol;
    for (std::size_t k = 0; k < size; ++k) {
        if (pair.density_nu[k] <= 0.0) continue;
        const double ratio = pair.density_mu[k] / pair.density_nu[k];
        if (ratio > b * rel || ratio * b * rel < 1.0) pair.violations.push_back({k, "rn_ratio", ratio});
    }
    return pair;
}

TransportResult transported_measure(const std::vector<double>& eta, const MeasurePair& pair) {
    const std::size_t size = pair.grid.size();
    if (eta.size() != size) throw std::invalid_argument("transported_measure: grid mismatch");
    const double err = representation_error(eta, pair.grid, pair.lambda);
    if (err > 1e-6) {
        throw std::invalid_argument("transported_measure: eta does not represent lambda (error " +
                                    std::to_string(err) + ")");
    }
    const double b = pair.b_used;
    TransportResult out;
    out.density.resize(size);
    for (std::size_t k = 0; k < size; ++k) {
        const double v = eta[k] / b + pair.density_nu[k] - pair.density_mu[k] / b;
        if (v < -kDensityTol) out.violations.push_back({k, "negative", v});
        out.density[k] = std::max(v, 0.0);
        if (eta[k] > b * out.density[k] * (1.0 + kDensityTol) + kDensityTol) {
            out.violations.push_back({k, "eta_ratio", eta[k] / out.density[k]});
        }
    }
    return out;
}

double pseudo_hyperbolic_distance(Complex a, Complex b) {
    return std::abs(mobius(a, b));
}

double disc_dual_norm(double rho) {
    if (rho <= 0.0) return 0.0;
    return 2.0 * (1.0 - std::sqrt(1.0 - rho * rho)) / rho;
}

double dual_norm_estimate(const BallPoint& lambda, const BallPoint& mu, int budget) {
    const int n = lambda.dimension();
    require_same_dimension(lambda, mu, n, "dual_norm_estimate");
    const ComplexVector diff = lambda.vector() - mu.vector();
    double best = 0.0;
    if (budget >= 1) best = std::abs(diff(0));
    if (budget >= 2) best = std::max(best, diff.norm());
    if (budget <= 2 || diff.norm() == 0.0) return std::min(best, 2.0);

    const ComplexVector u = diff.normalized();
    const Complex l = hermitian_inner(lambda.vector(), u);
    const Complex m = hermitian_inner(mu.vector(), u);
    const Complex tau = mobius(l, m);
    const double rho = std::abs(tau);
    const double span = std::atanh(rho);
    // Point at hyperbolic fraction s of the geodesic from l to m.
    auto geodesic = [&](double s) { return mobius(l, std::tanh(s * span) * (tau / rho)); };

    for (int c = 2; c < budget; ++c) {
        const int k = (c - 2) / 2 + 1;
        const double s = van_der_corput(k);
        const Complex a = geodesic(s);
        double v = 0.0;
        if ((c - 2) % 2 == 0) {
            v = std::abs(mobius(a, l) - mobius(a, m));
        } else {
            const Complex b = geodesic(1.0 - s);
            v = std::abs(mobius(a, l) * mobius(b, l) - mobius(a, m) * mobius(b, m));
        }
        best = std::max(best, v);
    }
    return std::min(best, 2.0);
}

std::vector<DichotomyRow> part_dichotomy_suite(
    const std::vector<std::pair<BallPoint, BallPoint>>& pairs, int max_power,
    const BoundaryGrid& grid, int budget) {
    if (max_power < 1 || max_power > 30) {
        throw std::invalid_argument("part_dichotomy_suite: max_power must lie in [1, 30]");
    }
    std::vector<DichotomyRow> rows(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t p) {
        const BallPoint& lambda = pairs[p].first;
        const BallPoint& mu = pairs[p].second;
        DichotomyRow& row = rows[p];
        row.lambda = lambda.vector();
        row.mu = mu.vector();
        const int n = lambda.dimension();
        const ComplexVector u =
            lambda.norm() > 0.0 ? ComplexVector(lambda.vector().normalized()) : one_point(n);
        const Complex xl = 0.5 * (1.0 + hermitian_inner(lambda.vector(), u));
        const Complex xm = 0.5 * (1.0 + hermitian_inner(mu.vector(), u));
        for (int q = 0; q <= max_power; ++q) {
            const int j = 1 << q;
            row.exponents.push_back(j);
            row.lambda_values.push_back(std::abs(std::pow(xl, 1.0 / j)));
            row.mu_values.push_back(std::abs(std::pow(xm, 1.0 / j)));
        }
        auto tends_to_one = [](const std::vector<double>& v) {
            if (1.0 - v.back() > 1e-3) return false;
            for (std::size_t i = v.size() / 2; i + 1 < v.size(); ++i) {
                if (v[i + 1] < v[i]) return false;
            }
            return true;
        };
        row.lambda_to_one = tends_to_one(row.lambda_values);
        row.mu_to_one = tends_to_one(row.mu_values);
        row.dual_norm = dual_norm_estimate(lambda, mu, budget);
        row.harnack_upper =
            std::max(harnack_upper(lambda, mu, grid), harnack_upper(mu, lambda, grid));
        row.consistent = (!row.lambda_to_one || row.mu_to_one) && row.dual_norm < 2.0 &&
                         std::isfinite(row.harnack_upper);
    });
    return rows;
}

}  // namespace hinf
