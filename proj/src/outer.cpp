#include "hinf/outer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hinf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-12;

void check_level(double level) {
    if (!(level > 0.0)) {
        throw std::invalid_argument("StepModulus: nonpositive level " + std::to_string(level));
    }
    if (level < StepModulus::kMinLevel || level > StepModulus::kMaxLevel) {
        throw std::invalid_argument("StepModulus: level " + std::to_string(level) +
                                    " outside [1e-6, 1e6]");
    }
}

}  // namespace

StepModulus::StepModulus(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    if (arcs_.empty()) throw std::invalid_argument("StepModulus: no arcs");
    if (std::abs(arcs_.front().start) > kAngleTol) {
        throw std::invalid_argument("StepModulus: arcs must start at 0");
    }
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        check_level(arcs_[i].level);
        if (!(arcs_[i].end > arcs_[i].start)) {
            throw std::invalid_argument("StepModulus: empty or reversed arc");
        }
        if (i + 1 < arcs_.size() && std::abs(arcs_[i + 1].start - arcs_[i].end) > kAngleTol) {
            throw std::invalid_argument("StepModulus: arcs do not tile the circle");
        }
    }
    if (std::abs(arcs_.back().end - kTwoPi) > kAngleTol) {
        throw std::invalid_argument("StepModulus: arcs must end at 2 pi");
    }
}

StepModulus StepModulus::with_background(const std::vector<Arc>& arcs, double background) {
    check_level(background);
    std::vector<Arc> pieces;
    for (const Arc& a : arcs) {
        check_level(a.level);
        const double len = a.end - a.start;
        if (!(len > 0.0) || len > kTwoPi + kAngleTol) {
            throw std::invalid_argument("StepModulus: arc length must lie in (0, 2 pi]");
        }
        double s = std::fmod(a.start, kTwoPi);
        if (s < 0.0) s += kTwoPi;
        const double e = s + len;
        if (e > kTwoPi + kAngleTol) {
            pieces.push_back({s, kTwoPi, a.level});
            pieces.push_back({0.0, e - kTwoPi, a.level});
        } else {
            pieces.push_back({s, std::min(e, kTwoPi), a.level});
        }
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Arc& x, const Arc& y) { return x.start < y.start; });
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        if (pieces[i].end > pieces[i + 1].start + kAngleTol) {
            throw std::invalid_argument("StepModulus: overlapping arcs");
        }
    }
    std::vector<Arc> tiled;
    double cursor = 0.0;
    for (const Arc& p : pieces) {
        if (p.start > cursor + kAngleTol) tiled.push_back({cursor, p.start, background});
        tiled.push_back({tiled.empty() ? 0.0 : tiled.back().end, p.end, p.level});
        cursor = p.end;
    }
    if (cursor < kTwoPi - kAngleTol) tiled.push_back({cursor, kTwoPi, background});
    tiled.back().end = kTwoPi;
    return StepModulus(std::move(tiled));
}

double StepModulus::level_at(double theta) const {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    for (const Arc& a : arcs_) {
        if (t >= a.start && t < a.end) return a.level;
    }
    return arcs_.back().level;
}

double StepModulus::log_integral_from_zero(double x) const {
    double s = 0.0;
    for (const Arc& a : arcs_) {
        if (a.start >= x) break;
        s += (std::min(a.end, x) - a.start) * std::log(a.level);
    }
    return s;
}

double StepModulus::log_integral(double a, double b) const {
    auto cumulative = [this](double x) {
        const double periods = std::floor(x / kTwoPi);
        const double rest = x - periods * kTwoPi;
        return periods * log_integral_from_zero(kTwoPi) + log_integral_from_zero(rest);
    };
    return cumulative(b) - cumulative(a);
}

double StepModulus::log_mean() const { return log_integral_from_zero(kTwoPi) / kTwoPi; }

double StepModulus::max_level() const {
    double m = 0.0;
    for (const Arc& a : arcs_) m = std::max(m, a.level);
    return m;
}

double StepModulus::distance_to_jump(double theta) const {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& prev = arcs_[(i + arcs_.size() - 1) % arcs_.size()];
        if (prev.level == arcs_[i].level) continue;
        const double d = std::abs(t - arcs_[i].start);
        best = std::min(best, std::min(d, kTwoPi - d));
    }
    return best;
}

OuterFunction::OuterFunction(StepModulus modulus, BoundaryGrid grid)
    : modulus_(std::move(modulus)), grid_(std::move(grid)) {
    if (grid_.dimension() != 1 || grid_.angles().empty()) {
        throw std::invalid_argument("OuterFunction: quadrature must be a circle grid");
    }
    const std::size_t n = grid_.size();
    cell_width_ = kTwoPi / static_cast<double>(n);
    cell_edges_.reserve(n);
    cell_log_psi_.reserve(n);
    for (double t : grid_.angles()) {
        const double a = t - 0.5 * cell_width_;
        cell_edges_.push_back(std::polar(1.0, a));
        cell_log_psi_.push_back(modulus_.log_integral(a, a + cell_width_) / cell_width_);
    }
}

Complex OuterFunction::operator()(Complex w) const {
    if (!(std::abs(w) < 1.0)) throw std::domain_error("OuterFunction: |w| must be < 1");
    // Over a cell [a, b]:
    //   \int (e^{it} + w)/(e^{it} - w) dt = -(b - a) + 2 darg - 2 i dlog|e^{it} - w|,
    // where darg in (0, 2 pi) is the angle the cell subtends at w.
    const std::size_t n = cell_edges_.size();
    double re = 0.0;
    double im = 0.0;
    Complex d_prev = cell_edges_[0] - w;
    double log_prev = std::log(std::abs(d_prev));
    for (std::size_t k = 0; k < n; ++k) {
        const Complex d_next = cell_edges_[(k + 1) % n] - w;
        const double log_next = std::log(std::abs(d_next));
        const double c = cell_log_psi_[k];
        if (c != 0.0) {
            double darg = std::arg(d_next * std::conj(d_prev));
            if (darg <= 0.0) darg += kTwoPi;
            re += c * (2.0 * darg - cell_width_);
            im -= c * 2.0 * (log_next - log_prev);
        }
        d_prev = d_next;
        log_prev = log_next;
    }
    return std::exp(Complex(re, im) / kTwoPi);
}

HolomorphicFunction OuterFunction::as_function() const {
    OuterFunction self = *this;
    return {1, [self](const ComplexVector& w) { return self(w(0)); }, modulus_.max_level()};
}

OuterFunction outer_from_modulus(const StepModulus& psi, int grid_size) {
    if (grid_size < 256) throw std::invalid_argument("outer_from_modulus: grid_size must be >= 256");
    return OuterFunction(psi, BoundaryGrid::circle(grid_size));
}

OuterFunction halfcircle_separator(int grid_size) {
    const double pi = std::numbers::pi;
    return outer_from_modulus(StepModulus({{0.0, pi, 1.0}, {pi, kTwoPi, std::exp(1.0)}}),
                              grid_size);
}

OuterFunction cap_oscillator(const std::vector<std::pair<double, double>>& arcs, int grid_size) {
    std::vector<Arc> levels;
    levels.reserve(arcs.size());
    for (std::size_t j = 0; j < arcs.size(); ++j) {
        levels.push_back({arcs[j].first, arcs[j].second, std::exp(j % 2 == 0 ? 1.0 : -1.0)});
    }
    return outer_from_modulus(StepModulus::with_background(levels, 1.0), grid_size);
}

}  // namespace hinf
