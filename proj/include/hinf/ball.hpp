#pragma once

// Geometry of the unit ball B in C^n and its boundary sphere S, unitary
// rotations, complex-line slices and evaluation-based function handles.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include <Eigen/Dense>

namespace hinf {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Default sphere-membership tolerance for every boundary check.
inline constexpr double kBoundaryTol = 1e-9;

/// Sum_k z_k * conj(w_k). Throws std::invalid_argument on length mismatch.
Complex hermitian_inner(const ComplexVector& z, const ComplexVector& w);

enum class PointClass { interior, boundary, exterior };

const char* to_string(PointClass c);

/// interior iff |z| < 1 - tol, boundary iff ||z| - 1| <= tol, exterior otherwise.
PointClass classify_point(const ComplexVector& z, double tol = kBoundaryTol);

/// k-th standard basis vector of C^n (0-based k).
ComplexVector basis_vector(int n, int k);

/// The distinguished boundary point 1 = (1, 0, ..., 0).
ComplexVector one_point(int n);

ComplexVector make_vector(std::initializer_list<Complex> entries);

/// A point of the open ball, at least `tol` away from the sphere.
class BallPoint {
public:
    explicit BallPoint(ComplexVector v, double tol = kBoundaryTol);

    const ComplexVector& vector() const { return v_; }
    double norm() const { return norm_; }
    int dimension() const { return static_cast<int>(v_.size()); }
    Complex operator[](int k) const { return v_(k); }

private:
    ComplexVector v_;
    double norm_;
};

/// A point of the unit sphere, |norm - 1| <= tol.
class SpherePoint {
public:
    explicit SpherePoint(ComplexVector v, double tol = kBoundaryTol);

    /// Normalizes a nonzero vector onto the sphere.
    static SpherePoint normalized(const ComplexVector& v);

    const ComplexVector& vector() const { return v_; }
    int dimension() const { return static_cast<int>(v_.size()); }
    Complex operator[](int k) const { return v_(k); }

private:
    ComplexVector v_;
};

class UnitaryRotation {
public:
    /// Throws std::invalid_argument unless m is square and m m* = I within 1e-12.
    explicit UnitaryRotation(ComplexMatrix m);

    static UnitaryRotation identity(int n);

    const ComplexMatrix& matrix() const { return m_; }
    int dimension() const { return static_cast<int>(m_.rows()); }

    ComplexVector apply(const ComplexVector& z) const;
    ComplexVector operator()(const ComplexVector& z) const { return apply(z); }

    UnitaryRotation inverse() const;
    /// (*this) o other, i.e. z -> this(other(z)).
    UnitaryRotation compose(const UnitaryRotation& other) const;

private:
    ComplexMatrix m_;
};

/// A unitary sigma with sigma(from) = to, built from two complex Householder
/// reflections. With `special` the result is corrected on the orthogonal
/// complement of `from` so that det = 1 (requires n >= 2 unless from == to).
UnitaryRotation unitary_moving(const SpherePoint& from, const SpherePoint& to,
                               bool special = false);

/// A function on the ball known only through evaluation, with an optional
/// declared bound on its sup norm.
struct HolomorphicFunction {
    int dimension = 1;
    std::function<Complex(const ComplexVector&)> eval;
    std::optional<double> sup_bound;

    Complex operator()(const ComplexVector& z) const { return eval(z); }
};

HolomorphicFunction coordinate_function(int n, int k);
HolomorphicFunction constant_function(int n, Complex c);
/// z -> <z, a>; |.| <= 1 on the ball for a unit vector a.
HolomorphicFunction inner_with(const SpherePoint& a);

/// (R_sigma f)(z) = f(sigma z). The declared bound carries over unchanged.
HolomorphicFunction rotate_function(const HolomorphicFunction& f, const UnitaryRotation& sigma);

/// Restriction of an n-variable function to the complex line through 0 and alpha.
class SliceFunction {
public:
    SliceFunction(HolomorphicFunction parent, SpherePoint direction);

    Complex operator()(Complex w) const;
    const SpherePoint& direction() const { return direction_; }
    const HolomorphicFunction& parent() const { return parent_; }

    /// The slice as a one-variable HolomorphicFunction (dimension 1).
    HolomorphicFunction as_function() const;

private:
    HolomorphicFunction parent_;
    SpherePoint direction_;
};

SliceFunction slice_restrict(const HolomorphicFunction& f, const SpherePoint& alpha);

/// z -> g(<z, a>) for a one-variable g (dimension 1). The bound of g carries over.
HolomorphicFunction slice_lift(const HolomorphicFunction& g, const SpherePoint& a);

// Seeded sampling helpers.

/// Uniform point of the ball of radius `radius` (< 1).
ComplexVector random_ball_vector(std::mt19937_64& rng, int n, double radius);
/// Uniform point of the unit sphere.
ComplexVector random_sphere_vector(std::mt19937_64& rng, int n);

}  // namespace hinf
