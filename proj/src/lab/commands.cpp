#include "hinf/lab/commands.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hinf/boundary.hpp"
#include "hinf/dynamics.hpp"
#include "hinf/gleason.hpp"
#include "hinf/lab/acceptance.hpp"
#include "hinf/outer.hpp"
#include "hinf/product.hpp"

namespace hinf::lab {

namespace {

using I64 = std::int64_t;

Report start(const std::string& name, const LabConfig& cfg, std::vector<std::string> columns) {
    Report r;
    r.command = name;
    r.config = cfg;
    r.columns = std::move(columns);
    return r;
}

Report orbit_command(const LabConfig& cfg) {
    Report r = start("orbit", cfg, {"start", "j", "z1_re", "z1_im", "norm", "distance_to_one"});
    const int n = cfg.dimension;
    const std::vector<std::pair<std::string, ComplexVector>> starts{
        {"0", ComplexVector::Zero(n)}, {"0.99*1", 0.99 * one_point(n)}};
    for (const auto& [label, z] : starts) {
        const OrbitRecord rec = orbit(BallPoint(z), dyadic_exponents(10));
        double max_norm = 0.0;
        for (std::size_t k = 0; k < rec.points.size(); ++k) {
            const ComplexVector& p = rec.points[k].vector();
            r.add_row({label, I64{rec.exponents[k]}, p(0).real(), p(0).imag(), p.norm(),
                       rec.distances_to_one[k]});
            max_norm = std::max(max_norm, p.norm());
        }
        r.assertions.push_back(check("max |L^j(z)| for start " + label, max_norm, "<", 1.0));
        r.assertions.push_back(check("distance to 1 at j = 1024 for start " + label,
                                     rec.distances_to_one.back(), "<=", 0.01));
    }
    return r;
}

Report product_command(const LabConfig& cfg) {
    Report r = start("product", cfg, {"k", "observed_error", "rate_bound"});
    const ProductFunction f(cfg.dimension, cfg.truncation, cfg.working_radius, cfg.seed);
    ComplexVector z = ComplexVector::Zero(cfg.dimension);
    z(0) = 0.5;
    for (const auto& row : convergence_table(f, BallPoint(z), 10, 2)) {
        r.add_row({I64{row.k}, row.observed_error, row.rate_bound});
        r.assertions.push_back(check("k = " + std::to_string(row.k) +
                                         ": observed_error <= rate_bound + truncation_bound",
                                     row.observed_error, "<=", row.rate_bound + row.truncation_bound));
    }
    return r;
}

void cluster_rows(Report& r, const std::string& label, const ClusterEstimate& est) {
    for (std::size_t v = 0; v < est.values.size(); ++v) {
        r.add_row({label, std::string("value"), I64(v), std::string(""), I64{0}, est.values[v].real(),
                   est.values[v].imag()});
    }
    for (std::size_t p = 0; p < est.tails.size(); ++p) {
        for (std::size_t t = 0; t < est.tails[p].size(); ++t) {
            r.add_row({label, std::string("tail"), I64(p), std::string(to_string(est.paths_used[p].kind)),
                       I64(t), est.tails[p][t].real(), est.tails[p][t].imag()});
        }
    }
}

Report cluster_command(const LabConfig& cfg) {
    Report r = start("cluster", cfg, {"function", "entry", "index", "path_kind", "tail_index", "re", "im"});
    const int n = cfg.dimension;
    const SpherePoint one(one_point(n));
    const double eps = cfg.cluster_epsilon;

    const ClusterEstimate coord = cluster_estimate(coordinate_function(n, 0), one, probe_paths(one), eps);
    cluster_rows(r, "z1", coord);
    r.assertions.push_back(check("z1: number of cluster values",
                                 static_cast<double>(coord.values.size()), "==", 1.0));
    r.assertions.push_back(check("z1: |value - 1|", std::abs(coord.values.front() - 1.0), "<=", eps));

    const ProductFunction f(n, cfg.truncation, cfg.working_radius, cfg.seed);
    PathOptions opt;
    opt.seeds = {0.3 * one_point(n), 0.6 * one_point(n)};
    const auto orbit_paths = approach_paths(one, PathKind::orbit, 2, 1e-4, opt);
    const ClusterEstimate prod = cluster_estimate(f.as_function(), one, orbit_paths, 1e-2);
    cluster_rows(r, "product", prod);
    r.assertions.push_back(check("product: number of cluster values",
                                 static_cast<double>(prod.values.size()), ">=", 2.0));
    for (double t : {0.3, 0.6}) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& v : prod.values) best = std::min(best, std::abs(v - t));
        r.assertions.push_back(check("product: distance to seed coordinate " + format_number(t), best,
                                     "<=", 1e-2));
    }
    return r;
}

Report harnack_command(const LabConfig& cfg) {
    Report r = start("harnack", cfg, {"section", "i", "j", "lower", "upper", "log_upper", "slack"});
    const int n = cfg.dimension;
    const BoundaryGrid grid =
        n == 1 ? BoundaryGrid::circle(cfg.circle_grid) : BoundaryGrid::sphere(n, cfg.sphere_grid, cfg.seed);
    const BallPoint origin(ComplexVector::Zero(n));
    for (int i = 1; i <= 9; ++i) {
        const double rr = 0.1 * i;
        const HarnackEstimate h = harnack_bracket(origin, BallPoint(rr * one_point(n)), grid, 32);
        r.add_row({std::string("bracket_0_r"), I64{0}, I64{i}, h.lower, h.upper, std::log(h.upper),
                   std::log(h.upper) - std::log(h.lower)});
        r.assertions.push_back(check("bracket r = " + format_number(rr) + ": lower <= upper", h.lower,
                                     "<=", h.upper));
        if (n == 1) {
            const double exact = (1 + rr) / (1 - rr);
            r.assertions.push_back(check("bracket r = " + format_number(rr) + ": lower <= exact",
                                         h.lower, "<=", exact));
            r.assertions.push_back(check("bracket r = " + format_number(rr) +
                                             ": exact <= upper (rounding 1e-12)",
                                         exact, "<=", h.upper * (1 + 1e-12)));
        }
    }
    std::mt19937_64 rng(cfg.seed);
    std::vector<BallPoint> pts;
    for (int p = 0; p < 5; ++p) pts.emplace_back(random_ball_vector(rng, n, 0.9));
    const PartMetric m = part_metric(pts, grid, 32);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        for (Eigen::Index j = 0; j < m.size(); ++j) {
            r.add_row({std::string("metric"), I64{i}, I64{j}, std::exp(m.distance(i, j) - m.slack(i, j)),
                       std::exp(m.distance(i, j)), m.distance(i, j), m.slack(i, j)});
        }
    }
    for (Eigen::Index a = 0; a < m.size(); ++a) {
        for (Eigen::Index b = 0; b < m.size(); ++b) {
            for (Eigen::Index c = 0; c < m.size(); ++c) {
                if (a == b || b == c || a == c) continue;
                r.assertions.push_back(check("triangle d(" + std::to_string(a) + "," + std::to_string(c) +
                                                 ") - d(" + std::to_string(a) + "," + std::to_string(b) +
                                                 ") - d(" + std::to_string(b) + "," + std::to_string(c) +
                                                 ") - slack",
                                             m.distance(a, c) - m.distance(a, b) - m.distance(b, c) -
                                                 m.slack(a, c),
                                             "<=", 0.0));
            }
        }
    }
    return r;
}

Report outer_command(const LabConfig& cfg) {
    Report r = start("outer", cfg, {"function", "theta", "level", "radial_modulus", "relative_error"});
    std::vector<std::pair<double, double>> caps;
    for (int j = 0; j < 4; ++j) {
        const double c = std::numbers::pi / 4 + j * std::numbers::pi / 2;
        caps.emplace_back(c - 0.3, c + 0.3);
    }
    const std::vector<std::pair<std::string, OuterFunction>> fns{
        {"halfcircle_separator", halfcircle_separator(cfg.circle_grid)},
        {"cap_oscillator", cap_oscillator(caps, cfg.circle_grid)}};
    for (const auto& [label, F] : fns) {
        const double center = std::abs(F(0.0));
        const double expected = std::exp(F.modulus().log_mean());
        r.add_row({label, std::string("center"), expected, center, std::abs(center - expected)});
        r.assertions.push_back(check(label + ": center identity error", std::abs(center - expected), "<=",
                                     cfg.tol_quadrature));
        for (const Arc& a : F.modulus().arcs()) {
            const double mid = 0.5 * (a.start + a.end);
            if (F.modulus().distance_to_jump(mid) < 0.05) continue;
            const double got = std::abs(F(std::polar(0.999, mid)));
            const double rel = std::abs(got - a.level) / a.level;
            r.add_row({label, format_number(mid), a.level, got, rel});
            r.assertions.push_back(check(label + ": recovery at theta = " + format_number(mid), rel, "<=", 0.02));
        }
    }
    return r;
}

Report verify_command(const LabConfig& cfg) {
    Report r = start("verify", cfg, {"criterion", "name", "pass", "detail"});
    for (const CriterionResult& c : run_acceptance(cfg)) {
        r.add_row({I64{c.id}, c.name, c.pass(), c.detail});
        for (const Assertion& a : c.checks) {
            Assertion tagged = a;
            tagged.name = "criterion " + std::to_string(c.id) + ": " + a.name;
            r.assertions.push_back(std::move(tagged));
        }
    }
    // In-process determinism: the same command twice gives the same bytes.
    const std::string first = emit_report(run_command("product", cfg), Format::json);
    const std::string second = emit_report(run_command("product", cfg), Format::json);
    const bool same = first == second;
    r.add_row({I64{11}, std::string("determinism (in process)"), same,
               std::string("product report emitted twice")});
    r.assertions.push_back(check("criterion 11: repeated report bytes differ", same ? 0.0 : 1.0, "==", 0.0));
    return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"orbit", "product", "cluster", "harnack", "outer", "verify"};
    return names;
}

Report run_command(const std::string& name, const LabConfig& cfg) {
    validate(cfg);
    try {
        if (name == "orbit") return orbit_command(cfg);
        if (name == "product") return product_command(cfg);
        if (name == "cluster") return cluster_command(cfg);
        if (name == "harnack") return harnack_command(cfg);
        if (name == "outer") return outer_command(cfg);
        if (name == "verify") return verify_command(cfg);
    } catch (const CommandError&) {
        throw;
    } catch (const std::exception& e) {
        throw CommandError(name + ": " + e.what());
    }
    throw UsageError("unknown command '" + name + "'");
}

}  // namespace hinf::lab
