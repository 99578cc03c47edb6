#include "hinf/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hinf/dynamics.hpp"

namespace hinf {

const char* to_string(PathKind kind) {
    switch (kind) {
        case PathKind::radial: return "radial";
        case PathKind::orbit: return "orbit";
        case PathKind::tangential: return "tangential";
        case PathKind::custom: return "custom";
    }
    return "?";
}

const char* to_string(ZeroSearchStatus s) {
    switch (s) {
        case ZeroSearchStatus::sequence: return "sequence";
        case ZeroSearchStatus::certificate: return "certificate";
        case ZeroSearchStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

double ApproachPath::final_distance() const {
    if (points.empty()) return std::numeric_limits<double>::infinity();
    return (points.back().vector() - target.vector()).norm();
}

void validate_path(const ApproachPath& path, double resolution) {
    if (path.points.empty()) throw std::invalid_argument("approach path: no points");
    double previous = std::numeric_limits<double>::infinity();
    for (const BallPoint& p : path.points) {
        if (p.dimension() != path.target.dimension()) {
            throw std::invalid_argument("approach path: dimension mismatch");
        }
        const double d = (p.vector() - path.target.vector()).norm();
        if (d > previous) throw std::invalid_argument("approach path: distance increases");
        previous = d;
    }
    if (previous > resolution) {
        throw std::invalid_argument("approach path: final distance " + std::to_string(previous) +
                                    " exceeds resolution " + std::to_string(resolution));
    }
}

ApproachPath make_custom_path(const SpherePoint& target, std::vector<BallPoint> points,
                              double resolution) {
    ApproachPath path{target, PathKind::custom, std::move(points)};
    validate_path(path, resolution);
    return path;
}

namespace {

BallPoint interior_or_throw(ComplexVector v, const char* what, double tol = kBoundaryTol) {
    if (classify_point(v, tol) != PointClass::interior) {
        throw std::invalid_argument(std::string(what) +
                                    ": resolution too fine to stay inside the boundary tolerance");
    }
    return BallPoint(std::move(v), tol);
}

// Unit vector complex-orthogonal to alpha (n >= 2).
ComplexVector orthogonal_direction(const ComplexVector& alpha) {
    Eigen::Index k = 0;
    alpha.cwiseAbs().minCoeff(&k);
    ComplexVector u = ComplexVector::Zero(alpha.size());
    u(k) = 1.0;
    u -= hermitian_inner(u, alpha) * alpha;
    return u.normalized();
}

ApproachPath radial_path(const SpherePoint& alpha, double scale, double resolution) {
    ApproachPath path{alpha, PathKind::radial, {}};
    for (int k = 1; k < 200; ++k) {
        const double gap = scale * std::ldexp(1.0, -k);
        path.points.push_back(interior_or_throw((1.0 - gap) * alpha.vector(), "radial path"));
        if (path.final_distance() <= resolution) return path;
    }
    throw std::invalid_argument("radial path: resolution not reached");
}

ApproachPath tangential_path(const SpherePoint& alpha, const ComplexVector& u, double sign,
                             double scale, double resolution) {
    ApproachPath path{alpha, PathKind::tangential, {}};
    for (int k = 0; k < 200; ++k) {
        const double t = 0.5 * scale * std::ldexp(1.0, -k);
        ComplexVector p = (1.0 - t * std::sqrt(t)) * (std::cos(t) * alpha.vector() + sign * std::sin(t) * u);
        path.points.push_back(interior_or_throw(std::move(p), "tangential path"));
        if (path.final_distance() <= resolution) return path;
    }
    throw std::invalid_argument("tangential path: resolution not reached");
}

ApproachPath orbit_path(const SpherePoint& alpha, const ComplexVector& seed,
                        const UnitaryRotation& sigma, double resolution) {
    if (classify_point(seed) != PointClass::interior) {
        throw std::invalid_argument("orbit path: seed must be interior");
    }
    std::vector<BallPoint> raw;
    std::vector<double> dist;
    for (int k = 0; k <= 52; ++k) {
        ComplexVector p = sigma(parabolic_iterate(seed, std::int64_t{1} << k));
        dist.push_back((p - alpha.vector()).norm());
        // Orbits approach 1 tangentially (1 - |p| ~ distance^2), so only strict
        // interiority is required, as for OrbitRecord.
        raw.push_back(interior_or_throw(std::move(p), "orbit path", 0.0));
        if (dist.back() <= resolution) break;
    }
    if (dist.back() > resolution) throw std::invalid_argument("orbit path: resolution not reached");
    // Keep the monotone tail.
    std::size_t first = dist.size() - 1;
    while (first > 0 && dist[first - 1] >= dist[first]) --first;
    ApproachPath path{alpha, PathKind::orbit, {}};
    path.points.assign(raw.begin() + static_cast<std::ptrdiff_t>(first), raw.end());
    return path;
}

}  // namespace

std::vector<ApproachPath> approach_paths(const SpherePoint& alpha, PathKind kind, int m,
                                         double resolution, const PathOptions& options) {
    if (m < 1) throw std::invalid_argument("approach_paths: m must be >= 1");
    if (!(resolution > 0.0)) throw std::invalid_argument("approach_paths: resolution must be > 0");
    const int n = alpha.dimension();
    std::vector<ApproachPath> out;
    auto scale_of = [m](int i) { return 1.0 - static_cast<double>(i) / (2.0 * m); };

    switch (kind) {
        case PathKind::radial:
            for (int i = 0; i < m; ++i) out.push_back(radial_path(alpha, scale_of(i), resolution));
            break;
        case PathKind::tangential: {
            const ComplexVector rotate_in_line = Complex(0.0, 1.0) * alpha.vector();
            const ComplexVector across =
                n >= 2 ? orthogonal_direction(alpha.vector()) : rotate_in_line;
            for (int i = 0; i < m; ++i) {
                const ComplexVector& u = (n >= 2 && i % 2 == 1) ? across : rotate_in_line;
                const double sign = (i / 2) % 2 == 0 ? 1.0 : -1.0;
                out.push_back(tangential_path(alpha, u, sign, scale_of(i), resolution));
            }
            break;
        }
        case PathKind::orbit: {
            const ComplexVector one = one_point(n);
            UnitaryRotation sigma = UnitaryRotation::identity(n);
            if ((alpha.vector() - one).norm() > kBoundaryTol) {
                if (!options.transport) {
                    throw std::invalid_argument(
                        "approach_paths: orbit paths at a point other than 1 need a transport "
                        "rotation");
                }
                sigma = *options.transport;
                if ((sigma(one) - alpha.vector()).norm() > 1e-9) {
                    throw std::invalid_argument("approach_paths: transport does not map 1 to alpha");
                }
            }
            std::vector<ComplexVector> seeds = options.seeds;
            if (seeds.empty()) {
                for (int i = 0; i < m; ++i) {
                    const double t = m == 1 ? 0.0 : -0.6 + 1.2 * (i + 0.5) / m;
                    seeds.push_back(t * one);
                }
            }
            for (const auto& s : seeds) out.push_back(orbit_path(alpha, s, sigma, resolution));
            break;
        }
        case PathKind::custom:
            throw std::invalid_argument("approach_paths: custom paths are built with make_custom_path");
    }
    return out;
}

ClusterEstimate cluster_estimate(const HolomorphicFunction& f, const SpherePoint& alpha,
                                 const std::vector<ApproachPath>& paths, double epsilon) {
    if (paths.empty()) throw std::invalid_argument("cluster_estimate: empty path list");
    if (!(epsilon > 0.0)) throw std::invalid_argument("cluster_estimate: epsilon must be > 0");
    ClusterEstimate est{alpha, {}, epsilon, paths, {}};
    std::vector<Complex> candidates;
    for (const ApproachPath& path : paths) {
        if ((path.target.vector() - alpha.vector()).norm() > kBoundaryTol) {
            throw std::invalid_argument("cluster_estimate: path does not target alpha");
        }
        if (path.points.empty()) throw std::invalid_argument("cluster_estimate: empty path");
        const std::size_t count = path.points.size();
        const std::size_t tail_len = std::max<std::size_t>(1, (count + 3) / 4);
        std::vector<Complex> tail;
        for (std::size_t k = count - tail_len; k < count; ++k) tail.push_back(f(path.points[k].vector()));
        const Complex last = tail.back();
        const bool settled = std::all_of(tail.begin(), tail.end(), [&](Complex v) {
            return std::abs(v - last) <= epsilon;
        });
        if (settled) {
            candidates.push_back(last);
        } else {
            candidates.insert(candidates.end(), tail.begin(), tail.end());
        }
        est.tails.push_back(std::move(tail));
    }
    for (const Complex& c : candidates) {
        const bool covered = std::any_of(est.values.begin(), est.values.end(),
                                         [&](Complex v) { return std::abs(v - c) <= epsilon; });
        if (!covered) est.values.push_back(c);
    }
    return est;
}

ContinuityResult continuity_probe(const HolomorphicFunction& f, const SpherePoint& alpha,
                                  double tol, double resolution) {
    const int n = alpha.dimension();
    std::vector<ApproachPath> paths = approach_paths(alpha, PathKind::radial, 2, resolution);
    for (auto& p : approach_paths(alpha, PathKind::tangential, 4, resolution)) {
        paths.push_back(std::move(p));
    }
    PathOptions orbit_options;
    const ComplexVector one = one_point(n);
    orbit_options.seeds = {ComplexVector::Zero(n), 0.5 * one, -0.5 * one};
    if (n >= 2) orbit_options.seeds.push_back(0.5 * basis_vector(n, 1));
    orbit_options.transport = unitary_moving(SpherePoint(one), alpha);
    for (auto& p : approach_paths(alpha, PathKind::orbit, 1, resolution, orbit_options)) {
        paths.push_back(std::move(p));
    }

    ContinuityResult res;
    Complex mean = 0.0;
    for (const auto& p : paths) {
        res.limits.push_back(f(p.points.back().vector()));
        mean += res.limits.back();
    }
    mean /= static_cast<double>(paths.size());
    res.single_value = std::all_of(res.limits.begin(), res.limits.end(),
                                   [&](Complex v) { return std::abs(v - mean) <= tol; });
    if (res.single_value) {
        res.value = mean;
        return res;
    }
    std::size_t bi = 0, bj = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            const double d = std::abs(res.limits[i] - res.limits[j]);
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    res.first_path = paths[bi];
    res.second_path = paths[bj];
    res.first_value = res.limits[bi];
    res.second_value = res.limits[bj];
    return res;
}

HolomorphicFunction peak_function(const SpherePoint& alpha) {
    ComplexVector a = alpha.vector();
    return {alpha.dimension(),
            [a](const ComplexVector& z) { return 0.5 * (1.0 + hermitian_inner(z, a)); }, 1.0};
}

ZeroSearchResult zero_approach_search(const HolomorphicFunction& f, const SpherePoint& alpha,
                                      double delta, int budget, const ZeroSearchOptions& options) {
    if (!(delta > 0.0)) throw std::invalid_argument("zero_approach_search: delta must be > 0");
    ZeroSearchResult res;
    const int per_scale = std::max(options.samples_per_scale, 17);
    const int scales = budget / per_scale;
    if (scales < 1) {
        res.note = "budget smaller than one neighbourhood scale";
        return res;
    }
    const int n = alpha.dimension();
    const ComplexVector& a = alpha.vector();
    std::mt19937_64 rng(options.seed);
    std::vector<BallPoint> minimizers;

    for (int m = 1; m <= scales; ++m) {
        const double s = std::ldexp(1.0, -m);
        std::vector<ComplexVector> samples;
        for (int q = 0; q < 16; ++q) {
            const double gap = s * std::ldexp(1.0, -q);
            if (gap <= 2.0 * kBoundaryTol) break;
            samples.push_back((1.0 - gap) * a);
        }
        int attempts = 0;
        while (static_cast<int>(samples.size()) < per_scale && attempts < 50 * per_scale) {
            ++attempts;
            ComplexVector z = a + s * random_ball_vector(rng, n, 1.0);
            if (classify_point(z) == PointClass::interior) samples.push_back(std::move(z));
        }
        // Below floating-point resolution no interior sample survives; stop
        // refining instead of reading an empty scale as a certificate.
        if (samples.empty()) break;
        double best = std::numeric_limits<double>::infinity();
        const ComplexVector* arg = nullptr;
        for (const auto& z : samples) {
            const double v = std::abs(f(z));
            if (v < best) {
                best = v;
                arg = &z;
            }
        }
        res.scales.push_back(s);
        res.scale_minima.push_back(best);
        if (best >= delta) {
            res.status = ZeroSearchStatus::certificate;
            res.certified_scale = s;
            res.note = "|f| >= delta on every sample within distance " + std::to_string(s);
            return res;
        }
        minimizers.emplace_back(*arg);
    }

    if (res.scale_minima.empty()) {
        res.note = "no interior samples near alpha";
        return res;
    }
    if (res.scale_minima.back() > delta * options.vanishing_ratio) {
        res.note = "minima stay below delta without tending to zero";
        return res;
    }
    std::stable_sort(minimizers.begin(), minimizers.end(), [&](const BallPoint& x, const BallPoint& y) {
        return (x.vector() - a).norm() > (y.vector() - a).norm();
    });
    res.status = ZeroSearchStatus::sequence;
    res.path = make_custom_path(alpha, std::move(minimizers), res.scales.back());
    return res;
}

double sup_norm_boundary_estimate(const HolomorphicFunction& f, const BoundaryGrid& grid,
                                  double r) {
    if (!(r >= 0.9 && r < 1.0)) throw std::invalid_argument("sup_norm_boundary_estimate: r must lie in [0.9, 1)");
    if (grid.dimension() != f.dimension) {
        throw std::invalid_argument("sup_norm_boundary_estimate: dimension mismatch");
    }
    double best = 0.0;
    for (const auto& z : grid.nodes()) best = std::max(best, std::abs(f(r * z)));
    return best;
}

}  // namespace hinf
