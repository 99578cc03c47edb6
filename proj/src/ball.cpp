#include "hinf/ball.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace hinf {

Complex hermitian_inner(const ComplexVector& z, const ComplexVector& w) {
    if (z.size() != w.size()) {
        throw std::invalid_argument("hermitian_inner: dimension mismatch (" +
                                    std::to_string(z.size()) + " vs " +
                                    std::to_string(w.size()) + ")");
    }
    Complex s = 0.0;
    for (Eigen::Index k = 0; k < z.size(); ++k) s += z(k) * std::conj(w(k));
    return s;
}

const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::interior: return "interior";
        case PointClass::boundary: return "boundary";
        case PointClass::exterior: return "exterior";
    }
    return "?";
}

PointClass classify_point(const ComplexVector& z, double tol) {
    const double r = z.norm();
    if (r < 1.0 - tol) return PointClass::interior;
    if (std::abs(r - 1.0) <= tol) return PointClass::boundary;
    return PointClass::exterior;
}

ComplexVector basis_vector(int n, int k) {
    if (n < 1 || k < 0 || k >= n) throw std::invalid_argument("basis_vector: index out of range");
    ComplexVector e = ComplexVector::Zero(n);
    e(k) = 1.0;
    return e;
}

ComplexVector one_point(int n) { return basis_vector(n, 0); }

ComplexVector make_vector(std::initializer_list<Complex> entries) {
    ComplexVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index k = 0;
    for (const auto& c : entries) v(k++) = c;
    return v;
}

BallPoint::BallPoint(ComplexVector v, double tol) : v_(std::move(v)), norm_(v_.norm()) {
    if (v_.size() < 1) throw std::invalid_argument("BallPoint: empty vector");
    if (!(norm_ < 1.0 - tol)) {
        throw std::domain_error("BallPoint: |z| = " + std::to_string(norm_) +
                                " is not interior");
    }
}

SpherePoint::SpherePoint(ComplexVector v, double tol) : v_(std::move(v)) {
    if (v_.size() < 1) throw std::invalid_argument("SpherePoint: empty vector");
    if (std::abs(v_.norm() - 1.0) > tol) {
        throw std::domain_error("SpherePoint: |z| = " + std::to_string(v_.norm()) +
                                " is not on the sphere");
    }
}

SpherePoint SpherePoint::normalized(const ComplexVector& v) {
    const double r = v.norm();
    if (r == 0.0) throw std::invalid_argument("SpherePoint::normalized: zero vector");
    return SpherePoint(v / r);
}

UnitaryRotation::UnitaryRotation(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
        throw std::invalid_argument("UnitaryRotation: matrix must be square");
    }
    const ComplexMatrix defect =
        m_ * m_.adjoint() - ComplexMatrix::Identity(m_.rows(), m_.cols());
    if (defect.cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("UnitaryRotation: matrix is not unitary");
    }
}

UnitaryRotation UnitaryRotation::identity(int n) {
    return UnitaryRotation(ComplexMatrix::Identity(n, n));
}

ComplexVector UnitaryRotation::apply(const ComplexVector& z) const {
    if (z.size() != m_.cols()) throw std::invalid_argument("UnitaryRotation: dimension mismatch");
    return m_ * z;
}

UnitaryRotation UnitaryRotation::inverse() const { return UnitaryRotation(m_.adjoint()); }

UnitaryRotation UnitaryRotation::compose(const UnitaryRotation& other) const {
    if (other.dimension() != dimension()) {
        throw std::invalid_argument("UnitaryRotation: dimension mismatch");
    }
    return UnitaryRotation(m_ * other.m_);
}

namespace {

// Unitary U with U e_1 = a for a unit vector a: a complex Householder
// reflection H sending a to c e_1 (c = -a_1/|a_1|, so <a, c e_1> is real),
// followed by diag(c, 1, ..., 1).
ComplexMatrix frame_with_first_column(const ComplexVector& a) {
    const Eigen::Index n = a.size();
    const double m = std::abs(a(0));
    const Complex phase = m > 0.0 ? a(0) / m : Complex(1.0);
    const Complex c = -phase;
    ComplexVector v = a;
    v(0) -= c;
    const double vv = v.squaredNorm();
    ComplexMatrix h = ComplexMatrix::Identity(n, n) - (2.0 / vv) * (v * v.adjoint());
    h.col(0) *= c;
    return h;
}

}  // namespace

UnitaryRotation unitary_moving(const SpherePoint& from, const SpherePoint& to, bool special) {
    const int n = from.dimension();
    if (to.dimension() != n) throw std::invalid_argument("unitary_moving: dimension mismatch");
    if (from.vector() == to.vector()) return UnitaryRotation::identity(n);

    const ComplexVector a = from.vector().normalized();
    const ComplexVector b = to.vector().normalized();
    const ComplexMatrix ua = frame_with_first_column(a);
    const ComplexMatrix ub = frame_with_first_column(b);
    ComplexMatrix sigma = ub * ua.adjoint();

    if (special) {
        if (n < 2) {
            throw std::invalid_argument(
                "unitary_moving: SU(1) is trivial, cannot move distinct points");
        }
        const Complex det = sigma.determinant();
        // The second column of ua is a unit vector orthogonal to `from`.
        const ComplexVector u = ua.col(1);
        const ComplexMatrix fix =
            ComplexMatrix::Identity(n, n) + (std::conj(det) - 1.0) * (u * u.adjoint());
        sigma = sigma * fix;
    }
    return UnitaryRotation(std::move(sigma));
}

HolomorphicFunction coordinate_function(int n, int k) {
    if (k < 0 || k >= n) throw std::invalid_argument("coordinate_function: index out of range");
    return {n, [k](const ComplexVector& z) { return z(k); }, 1.0};
}

HolomorphicFunction constant_function(int n, Complex c) {
    return {n, [c](const ComplexVector&) { return c; }, std::abs(c)};
}

HolomorphicFunction inner_with(const SpherePoint& a) {
    ComplexVector av = a.vector();
    return {a.dimension(), [av](const ComplexVector& z) { return hermitian_inner(z, av); }, 1.0};
}

HolomorphicFunction rotate_function(const HolomorphicFunction& f, const UnitaryRotation& sigma) {
    if (sigma.dimension() != f.dimension) {
        throw std::invalid_argument("rotate_function: dimension mismatch");
    }
    auto eval = f.eval;
    ComplexMatrix m = sigma.matrix();
    return {f.dimension, [eval, m](const ComplexVector& z) { return eval(m * z); }, f.sup_bound};
}

SliceFunction::SliceFunction(HolomorphicFunction parent, SpherePoint direction)
    : parent_(std::move(parent)), direction_(std::move(direction)) {
    if (parent_.dimension != direction_.dimension()) {
        throw std::invalid_argument("SliceFunction: dimension mismatch");
    }
}

Complex SliceFunction::operator()(Complex w) const { return parent_(w * direction_.vector()); }

HolomorphicFunction SliceFunction::as_function() const {
    SliceFunction self = *this;
    return {1, [self](const ComplexVector& w) { return self(w(0)); }, parent_.sup_bound};
}

SliceFunction slice_restrict(const HolomorphicFunction& f, const SpherePoint& alpha) {
    return SliceFunction(f, alpha);
}

HolomorphicFunction slice_lift(const HolomorphicFunction& g, const SpherePoint& a) {
    if (g.dimension != 1) throw std::invalid_argument("slice_lift: g must be one-variable");
    auto eval = g.eval;
    ComplexVector av = a.vector();
    return {a.dimension(),
            [eval, av](const ComplexVector& z) {
                ComplexVector w(1);
                w(0) = hermitian_inner(z, av);
                return eval(w);
            },
            g.sup_bound};
}

ComplexVector random_sphere_vector(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v(n);
    double r = 0.0;
    do {
        for (int k = 0; k < n; ++k) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            v(k) = Complex(re, im);
        }
        r = v.norm();
    } while (r == 0.0);
    return v / r;
}

ComplexVector random_ball_vector(std::mt19937_64& rng, int n, double radius) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    ComplexVector v = random_sphere_vector(rng, n);
    const double t = std::pow(unif(rng), 1.0 / (2.0 * n));
    return v * (radius * t);
}

}  // namespace hinf
