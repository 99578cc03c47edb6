#include "hinf/lab/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hinf/ball.hpp"
#include "hinf/boundary.hpp"
#include "hinf/boundary_grid.hpp"
#include "hinf/dynamics.hpp"
#include "hinf/gleason.hpp"
#include "hinf/outer.hpp"
#include "hinf/product.hpp"

namespace hinf::lab {

bool CriterionResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Assertion& a) { return a.pass; });
}

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// Seeded stream per criterion, so criteria are independent of run order.
std::mt19937_64 stream(const LabConfig& cfg, int id) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(id)};
    return std::mt19937_64(seq);
}

ComplexVector interior_sample(std::mt19937_64& rng, int n, double radius) {
    for (;;) {
        ComplexVector z = random_ball_vector(rng, n, radius);
        if (classify_point(z) == PointClass::interior) return z;
    }
}

// 1: j-fold composition against the closed form.
CriterionResult iterate_law(const LabConfig& cfg) {
    CriterionResult r{1, "iterate law", {}, {}};
    auto rng = stream(cfg, 1);
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        for (int p = 0; p < 1000; ++p) {
            const ComplexVector z = interior_sample(rng, n, 1.0);
            ComplexVector comp = z;
            for (int j = 1; j <= 64; ++j) {
                comp = parabolic_apply(comp);
                const ComplexVector closed = parabolic_iterate(z, j);
                const double rel = (comp - closed).norm() / std::max(closed.norm(), 1e-12);
                worst = std::max(worst, rel);
            }
        }
    }
    r.checks.push_back(check("max relative deviation", worst, "<=", 1e-9));
    r.detail = "3000 points, j <= 64, max relative deviation " + fmt(worst);
    return r;
}

// 2: self-map of B and S, no fixed point but 1.
CriterionResult self_map(const LabConfig& cfg) {
    CriterionResult r{2, "self-map and fixed point", {}, {}};
    auto rng = stream(cfg, 2);
    double not_interior = 0.0;
    for (int n = 1; n <= 3; ++n) {
        for (int p = 0; p < 1000; ++p) {
            const ComplexVector z = interior_sample(rng, n, 1.0);
            for (int j = -64; j <= 64; ++j) {
                if (!(parabolic_iterate(z, j).norm() < 1.0)) not_interior += 1.0;
            }
        }
    }
    r.checks.push_back(check("non-interior iterates", not_interior, "==", 0.0));

    auto cap_min = [](const BoundaryGrid& g, double& sphere_dev) {
        const ComplexVector one = one_point(g.dimension());
        double best = std::numeric_limits<double>::infinity();
        for (const auto& zeta : g.nodes()) {
            const ComplexVector image = parabolic_apply(zeta);
            sphere_dev = std::max(sphere_dev, std::abs(image.norm() - 1.0));
            if ((zeta - one).norm() >= 0.05) best = std::min(best, (image - zeta).norm());
        }
        return best;
    };
    double sphere_dev = 0.0;
    const BoundaryGrid circle = BoundaryGrid::circle(10000);
    const BoundaryGrid sphere = BoundaryGrid::sphere(2, 10000, cfg.seed);
    const double min1 = cap_min(circle, sphere_dev);
    const double min2 = cap_min(sphere, sphere_dev);
    r.checks.push_back(check("max ||L(zeta)| - 1| on grids", sphere_dev, "<=", 1e-9));
    r.checks.push_back(check("min |L(zeta) - zeta| off the cap (n = 1)", min1, ">", 1e-3));
    r.checks.push_back(check("min |L(zeta) - zeta| off the cap (n = 2)", min2, ">", 0.0));
    double moved = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 3; ++n) {
        const ComplexVector minus_one = -one_point(n);
        moved = std::min(moved, (parabolic_apply(minus_one) - minus_one).norm());
    }
    r.checks.push_back(check("displacement of -1", moved, ">=", 0.1));
    r.detail = "cap minimum " + fmt(min1) + " (circle, " + std::to_string(circle.size()) +
               " nodes), " + fmt(min2) + " (n = 2 sphere, " + std::to_string(sphere.size()) +
               " nodes); -1 moves by " + fmt(moved);
    return r;
}

// 3: factor estimate, boundedness, Cauchy differences.
CriterionResult certified_product(const LabConfig& cfg) {
    CriterionResult r{3, "certified product", {}, {}};
    const int n = cfg.dimension;
    const int N = cfg.truncation;
    const ProductFunction f(n, N, 0.9, cfg.seed);
    const double K = f.tail_constant().K;
    auto rng = stream(cfg, 3);
    std::vector<ComplexVector> pts;
    for (int p = 0; p < 500; ++p) pts.push_back(interior_sample(rng, n, 0.9));

    double factor_excess = -std::numeric_limits<double>::infinity();
    double bound_excess = -std::numeric_limits<double>::infinity();
    for (const auto& z : pts) {
        for (int j = 0; j <= N; ++j) {
            const double dev = std::abs(iterate_first_deviation(z(0), -(std::int64_t{1} << j)));
            factor_excess = std::max(factor_excess, dev - std::ldexp(K, -j));
        }
        bound_excess = std::max(bound_excess, std::abs(f.eval(BallPoint(z)).value) - (1.0 + f.tail_bound()));
    }
    // Factors beyond 2^53 are out of iterate range, so the Cauchy pair is capped at (44, 52).
    const int n0 = std::min(N, 44);
    const ProductFunction f0(n, n0, 0.9, cfg.seed);
    const ProductFunction f8(n, n0 + 8, 0.9, cfg.seed);
    double cauchy_excess = -std::numeric_limits<double>::infinity();
    for (const auto& z : pts) {
        const double d = std::abs(f0.evaluate_truncated(z) - f8.evaluate_truncated(z));
        cauchy_excess = std::max(cauchy_excess, d - f0.tail_bound());
    }
    r.checks.push_back(check("max |factor - 1| - K/2^j", factor_excess, "<=", 0.0));
    r.checks.push_back(check("max |f| - (1 + tail_bound)", bound_excess, "<=", 0.0));
    r.checks.push_back(check("max Cauchy difference - tail_bound", cauchy_excess, "<=", 0.0));
    r.detail = "K = " + fmt(K) + ", N = " + std::to_string(N) + ", Cauchy pair (" +
               std::to_string(n0) + ", " + std::to_string(n0 + 8) + ")";
    return r;
}

// 4: embedding identity with the explicit rate.
CriterionResult embedding(const LabConfig& cfg) {
    CriterionResult r{4, "embedding identity", {}, {}};
    const int n = std::max(2, cfg.dimension);
    const ProductFunction f(n, cfg.truncation, cfg.working_radius, cfg.seed);
    struct Start {
        const char* label;
        ComplexVector z;
    };
    ComplexVector a = ComplexVector::Zero(n), b = ComplexVector::Zero(n), c = ComplexVector::Zero(n);
    a(0) = 0.5;
    b(0) = 0.3;
    b(1) = 0.4;
    c(1) = 0.5;
    const std::vector<Start> starts{{"0.5e1", a}, {"0.3e1+0.4e2", b}, {"0.5e2", c}};
    for (const auto& s : starts) {
        const auto rows = convergence_table(f, BallPoint(s.z), 10, 2);
        double excess = -std::numeric_limits<double>::infinity();
        for (const auto& row : rows) {
            excess = std::max(excess, row.observed_error - (row.rate_bound + row.truncation_bound));
        }
        r.checks.push_back(check(std::string("rate bound excess ") + s.label, excess, "<=", 0.0));
        // rows[k - 2]; average decay over k = 4..10 is (err_4/err_10)^{1/6}.
        const double e4 = rows[2].observed_error;
        const double e10 = rows[8].observed_error;
        if (e4 > 0.0 && e10 > 0.0) {
            const double decay = std::pow(e4 / e10, 1.0 / 6.0);
            r.checks.push_back(check(std::string("mean decay factor ") + s.label, decay, ">=", 1.8));
            r.detail += std::string(r.detail.empty() ? "" : "; ") + s.label + " decay " + fmt(decay);
        } else {
            r.detail += std::string(r.detail.empty() ? "" : "; ") + s.label + " errors vanish";
        }
    }
    return r;
}

// 5: cluster sets.
CriterionResult cluster_sets(const LabConfig& cfg) {
    CriterionResult r{5, "cluster sets", {}, {}};
    const int n = cfg.dimension;
    const double eps = cfg.cluster_epsilon;
    auto rng = stream(cfg, 5);
    std::vector<HolomorphicFunction> polys;
    polys.push_back(coordinate_function(n, 0));
    polys.push_back({n,
                     [n](const ComplexVector& z) {
                         return z(0) * z(0) + 0.5 * (n >= 2 ? z(1) : -z(0));
                     },
                     1.5});
    std::vector<SpherePoint> targets{SpherePoint(one_point(n)),
                                     SpherePoint(random_sphere_vector(rng, n))};
    double worst_size = 0.0, worst_dev = 0.0;
    for (const auto& alpha : targets) {
        const std::vector<ApproachPath> paths = probe_paths(alpha);
        for (const auto& p : polys) {
            const ClusterEstimate est = cluster_estimate(p, alpha, paths, eps);
            worst_size = std::max(worst_size, static_cast<double>(est.values.size()));
            for (const auto& v : est.values) worst_dev = std::max(worst_dev, std::abs(v - p(alpha.vector())));
        }
    }
    r.checks.push_back(check("largest polynomial cluster size", worst_size, "==", 1.0));
    r.checks.push_back(check("polynomial cluster deviation", worst_dev, "<=", eps));

    const ProductFunction f(n, cfg.truncation, cfg.working_radius, cfg.seed);
    const SpherePoint one(one_point(n));
    PathOptions opt;
    opt.seeds = {0.3 * one_point(n), 0.6 * one_point(n)};
    const auto paths = approach_paths(one, PathKind::orbit, 2, 1e-4, opt);
    const ClusterEstimate est = cluster_estimate(f.as_function(), one, paths, 1e-2);
    r.checks.push_back(check("product cluster size", static_cast<double>(est.values.size()), ">=", 2.0));
    for (double t : {0.3, 0.6}) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& v : est.values) best = std::min(best, std::abs(v - t));
        r.checks.push_back(check("distance to target " + fmt(t), best, "<=", 1e-2));
    }
    r.detail = "product cluster values:";
    for (const auto& v : est.values) r.detail += " " + fmt(v.real()) + (v.imag() < 0 ? "" : "+") + fmt(v.imag()) + "i";
    return r;
}

// 6: outer functions.
CriterionResult outer_functions(const LabConfig& cfg) {
    CriterionResult r{6, "outer functions", {}, {}};
    const int grid = cfg.circle_grid;
    const OuterFunction sep = halfcircle_separator(grid);
    std::vector<std::pair<double, double>> caps;
    for (int j = 0; j < 4; ++j) {
        const double c = kPi / 4 + j * kPi / 2;
        caps.emplace_back(c - 0.3, c + 0.3);
    }
    const OuterFunction osc = cap_oscillator(caps, grid);

    double center = 0.0, recovery = 0.0;
    for (const OuterFunction* F : {&sep, &osc}) {
        center = std::max(center, std::abs(std::abs((*F)(0.0)) - std::exp(F->modulus().log_mean())));
        for (const Arc& a : F->modulus().arcs()) {
            const double mid = 0.5 * (a.start + a.end);
            if (F->modulus().distance_to_jump(mid) < 0.05) continue;
            const double got = std::abs((*F)(std::polar(0.999, mid)));
            recovery = std::max(recovery, std::abs(got - a.level) / a.level);
        }
    }
    auto rng = stream(cfg, 6);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double smallest = std::numeric_limits<double>::infinity();
    for (int p = 0; p < 10000; ++p) {
        const Complex w = std::polar(0.999 * std::sqrt(unif(rng)), 2 * kPi * unif(rng));
        smallest = std::min({smallest, std::abs(sep(w)), std::abs(osc(w))});
    }
    r.checks.push_back(check("center identity error", center, "<=", 1e-6));
    r.checks.push_back(check("radial recovery relative error", recovery, "<=", 0.02));
    r.checks.push_back(check("min |F| on disc sample", smallest, ">", 0.0));
    r.detail = "recovery error " + fmt(recovery) + ", center error " + fmt(center);
    return r;
}

BallPoint disc_point(Complex w) { return BallPoint(make_vector({w})); }

// 7: Harnack bracket against the closed form.
CriterionResult harnack_oracle(const LabConfig& cfg) {
    CriterionResult r{7, "Harnack bracket oracle", {}, {}};
    const BoundaryGrid circle = BoundaryGrid::circle(cfg.circle_grid);
    double contain = -std::numeric_limits<double>::infinity();
    double up_err = 0.0, low_err = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double rr = 0.1 * i;
        const double exact = (1 + rr) / (1 - rr);
        const HarnackEstimate h = harnack_bracket(disc_point(0.0), disc_point(rr), circle, 32);
        // Containment up to rounding in the kernel ratio.
        contain = std::max({contain, h.lower - exact, exact - h.upper * (1 + 1e-12)});
        up_err = std::max(up_err, std::abs(h.upper - exact) / exact);
        low_err = std::max(low_err, std::abs(h.lower - exact) / exact);
    }
    r.checks.push_back(check("containment excess", contain, "<=", 0.0));
    r.checks.push_back(check("upper relative error", up_err, "<=", 0.01));
    r.checks.push_back(check("lower relative error", low_err, "<=", 0.10));

    const BoundaryGrid sphere = BoundaryGrid::sphere(2, cfg.sphere_grid, cfg.seed);
    auto rng = stream(cfg, 7);
    double disorder = -std::numeric_limits<double>::infinity();
    double finite = 1.0;
    for (int p = 0; p < 20; ++p) {
        const BallPoint a(interior_sample(rng, 2, 0.9));
        const BallPoint b(interior_sample(rng, 2, 0.9));
        const HarnackEstimate h = harnack_bracket(a, b, sphere, 32);
        if (!std::isfinite(h.upper)) finite = 0.0;
        disorder = std::max({disorder, 1.0 - h.lower, h.lower - h.upper});
    }
    r.checks.push_back(check("n = 2 brackets finite", finite, "==", 1.0));
    r.checks.push_back(check("n = 2 ordering excess", disorder, "<=", 0.0));
    r.detail = "upper error " + fmt(up_err) + ", lower error " + fmt(low_err);
    return r;
}

// 8: part metric axioms.
CriterionResult part_axioms(const LabConfig& cfg) {
    CriterionResult r{8, "part metric axioms", {}, {}};
    auto rng = stream(cfg, 8);
    std::vector<BallPoint> pts;
    for (int p = 0; p < 20; ++p) pts.emplace_back(interior_sample(rng, 1, 0.9));
    const BoundaryGrid circle = BoundaryGrid::circle(cfg.circle_grid);
    const PartMetric m = part_metric(pts, circle, 32);
    const auto k = m.size();
    double asym = 0.0, diag = 0.0, violations = 0.0, triples = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
        diag = std::max(diag, std::abs(m.distance(i, i)));
        for (Eigen::Index j = 0; j < k; ++j) {
            const double s = std::max(std::abs(m.distance(i, j)), std::abs(m.distance(j, i)));
            if (s > 0) asym = std::max(asym, std::abs(m.distance(i, j) - m.distance(j, i)) / s);
        }
    }
    auto holds = [&](Eigen::Index a, Eigen::Index b, Eigen::Index c) {
        return m.distance(a, c) <= m.distance(a, b) + m.distance(b, c) + m.slack(a, c);
    };
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = a + 1; b < k; ++b) {
            for (Eigen::Index c = b + 1; c < k; ++c) {
                triples += 1.0;
                if (!(holds(a, b, c) && holds(b, a, c) && holds(a, c, b))) violations += 1.0;
            }
        }
    }
    r.checks.push_back(check("relative asymmetry", asym, "<=", 0.02));
    r.checks.push_back(check("diagonal", diag, "==", 0.0));
    r.checks.push_back(check("triangle violations", violations, "==", 0.0));
    r.checks.push_back(check("triples checked", triples, "==", 1140.0));
    r.detail = std::to_string(static_cast<int>(triples)) + " triples, " +
               std::to_string(static_cast<int>(violations)) + " violations";
    return r;
}

// 9: representing measures and transport.
CriterionResult measures(const LabConfig& cfg) {
    CriterionResult r{9, "representing measures", {}, {}};
    const BoundaryGrid circle = BoundaryGrid::circle(cfg.circle_grid);
    const MeasurePair pair = representing_measures(disc_point(0.0), disc_point(0.5), circle, 3.0);
    const double mass = std::max(std::abs(circle.integrate(pair.density_mu) - 1.0),
                                 std::abs(circle.integrate(pair.density_nu) - 1.0));
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t k = 0; k < circle.size(); ++k) {
        const double q = pair.density_mu[k] / pair.density_nu[k];
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    const double rep = std::max(representation_error(pair.density_mu, circle, 0.0),
                                representation_error(pair.density_nu, circle, 0.5));
    r.checks.push_back(check("violations reported", static_cast<double>(pair.violations.size()), "==", 0.0));
    r.checks.push_back(check("mass error", mass, "<=", 1e-10));
    r.checks.push_back(check("min RN ratio * 3", lo * 3.0, ">=", 1.0 - 1e-12));
    r.checks.push_back(check("max RN ratio / 3", hi / 3.0, "<=", 1.0 + 1e-12));
    r.checks.push_back(check("reproduction error (degree 8)", rep, "<=", 1e-6));

    const std::vector<double> uniform(circle.size(), 1.0);
    const TransportResult t1 = transported_measure(uniform, pair);
    const TransportResult t2 = transported_measure(pair.density_mu, pair);
    double same = 0.0;
    for (std::size_t k = 0; k < circle.size(); ++k) {
        same = std::max(same, std::abs(t2.density[k] - pair.density_nu[k]));
    }
    const double trep = std::max(representation_error(t1.density, circle, 0.5),
                                 representation_error(t2.density, circle, 0.5));
    r.checks.push_back(check("transport violations",
                             static_cast<double>(t1.violations.size() + t2.violations.size()), "==", 0.0));
    r.checks.push_back(check("transport reproduction error", trep, "<=", 1e-6));
    r.checks.push_back(check("transport of mu-density vs nu-density", same, "<=", 1e-12));
    r.detail = "RN ratio in [" + fmt(lo) + ", " + fmt(hi) + "], reproduction error " + fmt(rep);
    return r;
}

// 10: dual norm and peaking dichotomy.
CriterionResult dichotomy(const LabConfig& cfg) {
    CriterionResult r{10, "part dichotomy", {}, {}};
    std::vector<double> rs;
    for (int i = 1; i <= 19; ++i) rs.push_back(0.05 * i);
    for (double v : {0.99, 0.999, 0.9999}) rs.push_back(v);
    double mono = std::numeric_limits<double>::infinity(), top = 0.0;
    double witness = std::numeric_limits<double>::infinity(), at99 = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const double d = dual_norm_estimate(disc_point(0.0), disc_point(rs[i]));
        if (i) mono = std::min(mono, d - prev);
        prev = d;
        top = std::max(top, d);
        witness = std::min(witness, d - rs[i]);
        if (rs[i] == 0.99) at99 = d;
    }
    r.checks.push_back(check("min consecutive increment", mono, ">=", 0.0));
    r.checks.push_back(check("max estimate", top, "<=", 2.0));
    r.checks.push_back(check("min estimate - r", witness, ">=", 0.0));
    r.checks.push_back(check("estimate at r = 0.99", at99, ">=", 1.7));

    auto rng = stream(cfg, 10);
    std::vector<std::pair<BallPoint, BallPoint>> pairs;
    pairs.emplace_back(disc_point(0.0), disc_point(0.0));
    pairs.emplace_back(disc_point(0.0), disc_point(0.5));
    pairs.emplace_back(disc_point(0.0), disc_point(0.9999));
    for (int p = 0; p < 10; ++p) {
        pairs.emplace_back(BallPoint(interior_sample(rng, 1, 0.9)), BallPoint(interior_sample(rng, 1, 0.9)));
    }
    const auto rows = part_dichotomy_suite(pairs, 20, BoundaryGrid::circle(cfg.circle_grid));
    double inconsistent = 0.0;
    for (const auto& row : rows) {
        if (!row.lambda_to_one || !row.consistent) inconsistent += 1.0;
    }
    r.checks.push_back(check("inconsistent peaking rows", inconsistent, "==", 0.0));
    r.detail = "estimate at 0.99 = " + fmt(at99) + ", at 0.9999 = " + fmt(prev);
    return r;
}

}  // namespace

std::vector<ApproachPath> probe_paths(const SpherePoint& alpha) {
    const int n = alpha.dimension();
    std::vector<ApproachPath> paths = approach_paths(alpha, PathKind::radial, 3, 1e-5);
    for (auto& p : approach_paths(alpha, PathKind::tangential, 4, 1e-5)) paths.push_back(std::move(p));
    PathOptions opt;
    opt.transport = unitary_moving(SpherePoint(one_point(n)), alpha);
    for (auto& p : approach_paths(alpha, PathKind::orbit, 3, 1e-5, opt)) paths.push_back(std::move(p));
    return paths;
}

CriterionResult run_criterion(int id, const LabConfig& cfg) {
    switch (id) {
        case 1: return iterate_law(cfg);
        case 2: return self_map(cfg);
        case 3: return certified_product(cfg);
        case 4: return embedding(cfg);
        case 5: return cluster_sets(cfg);
        case 6: return outer_functions(cfg);
        case 7: return harnack_oracle(cfg);
        case 8: return part_axioms(cfg);
        case 9: return measures(cfg);
        case 10: return dichotomy(cfg);
        default: throw std::invalid_argument("run_criterion: id must lie in [1, 10]");
    }
}

std::vector<CriterionResult> run_acceptance(const LabConfig& cfg) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kInProcessCriteria; ++id) out.push_back(run_criterion(id, cfg));
    return out;
}

}  // namespace hinf::lab
