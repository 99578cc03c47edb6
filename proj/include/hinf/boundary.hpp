#pragma once

// Boundary behaviour of bounded holomorphic functions at a sphere point:
// approach paths, cluster sets, the continuity dichotomy, and the search for
// sequences along which |f| tends to zero.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hinf/ball.hpp"
#include "hinf/boundary_grid.hpp"

namespace hinf {

enum class PathKind { radial, orbit, tangential, custom };

const char* to_string(PathKind kind);

struct ApproachPath {
    SpherePoint target;
    PathKind kind = PathKind::custom;
    std::vector<BallPoint> points;

    double final_distance() const;
};

/// Checks the path invariants: nonempty, interior points, distance to the
/// target nonincreasing, final distance <= resolution. Throws
/// std::invalid_argument naming the violated condition.
void validate_path(const ApproachPath& path, double resolution);

ApproachPath make_custom_path(const SpherePoint& target, std::vector<BallPoint> points,
                              double resolution);

struct PathOptions {
    /// Orbit seeds (interior points); defaults to m points t e_1 spread over (-0.6, 0.6).
    std::vector<ComplexVector> seeds;
    /// Unitary sending 1 to the target; needed for orbit paths when target != 1.
    std::optional<UnitaryRotation> transport;
};

/// m paths of the given kind ending within `resolution` of alpha.
///  radial:     points (1 - c_i 2^{-k}) alpha, c_0 = 1.
///  tangential: points (1 - t^{3/2})(cos t alpha +- sin t u), u a unit vector real-orthogonal
///              to alpha (i alpha, or a complex-orthogonal direction when n >= 2); the
///              curve is tangent to the sphere at alpha.
///  orbit:      points sigma(L^{2^k}(seed)), kept from the point where the
///              distance to the target becomes nonincreasing.
/// Throws std::invalid_argument for kind custom, m < 1, or an orbit request
/// at alpha != 1 without transport.
std::vector<ApproachPath> approach_paths(const SpherePoint& alpha, PathKind kind, int m,
                                         double resolution, const PathOptions& options = {});

struct ClusterEstimate {
    SpherePoint target;
    std::vector<Complex> values;  ///< epsilon-net of observed tail limits
    double epsilon = 0.0;
    std::vector<ApproachPath> paths_used;
    std::vector<std::vector<Complex>> tails;  ///< last quarter of f along each path
};

/// Tail of a path: its last quarter (at least one value). A tail whose values
/// all lie within epsilon of its final value contributes that final value; an
/// oscillating tail contributes every value. Candidates are merged greedily into
/// an epsilon-net in path order. Throws std::invalid_argument for an empty path list.
ClusterEstimate cluster_estimate(const HolomorphicFunction& f, const SpherePoint& alpha,
                                 const std::vector<ApproachPath>& paths, double epsilon);

struct ContinuityResult {
    bool single_value = false;
    Complex value;  ///< common limit when single_value
    // Oscillation witness: two paths whose limits differ by more than tol.
    std::optional<ApproachPath> first_path;
    std::optional<ApproachPath> second_path;
    Complex first_value;
    Complex second_value;
    std::vector<Complex> limits;  ///< per-path limit estimates
};

/// Compares the limits along radial, tangential and (transported) orbit families.
ContinuityResult continuity_probe(const HolomorphicFunction& f, const SpherePoint& alpha,
                                  double tol, double resolution = 1e-4);

/// g(z) = (1 + <z, alpha>)/2: g(alpha) = 1 and |g| < 1 elsewhere on the closed ball.
HolomorphicFunction peak_function(const SpherePoint& alpha);

enum class ZeroSearchStatus { sequence, certificate, inconclusive };

const char* to_string(ZeroSearchStatus s);

struct ZeroSearchResult {
    ZeroSearchStatus status = ZeroSearchStatus::inconclusive;
    std::optional<ApproachPath> path;   ///< per-scale minimizers, for `sequence`
    std::vector<double> scales;         ///< neighbourhood radii searched
    std::vector<double> scale_minima;   ///< min |f| found at each scale
    double certified_scale = 0.0;       ///< for `certificate`: |f| >= delta on B within this radius
    std::string note;
};

struct ZeroSearchOptions {
    int samples_per_scale = 64;
    /// `sequence` requires the last scale minimum to fall below delta * this ratio.
    double vanishing_ratio = 1e-2;
    std::uint64_t seed = 42;
};

/// Minimizes |f| over B intersected with balls of radius 2^{-m} around alpha,
/// m = 1, 2, ... while the evaluation budget lasts.
ZeroSearchResult zero_approach_search(const HolomorphicFunction& f, const SpherePoint& alpha,
                                      double delta, int budget,
                                      const ZeroSearchOptions& options = {});

/// max |f(r zeta)| over the grid nodes. Requires r in [0.9, 1).
double sup_norm_boundary_estimate(const HolomorphicFunction& f, const BoundaryGrid& grid,
                                  double r);

}  // namespace hinf
