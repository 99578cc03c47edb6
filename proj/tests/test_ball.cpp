#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hinf/ball.hpp"

using namespace hinf;

namespace {
const Complex I(0.0, 1.0);
}

TEST(HermitianInner, BasisAndDiagonal) {
    EXPECT_EQ(hermitian_inner(basis_vector(2, 0), basis_vector(2, 0)), Complex(1.0));
    EXPECT_EQ(hermitian_inner(basis_vector(2, 0), basis_vector(2, 1)), Complex(0.0));
    const ComplexVector v = make_vector({1.0 / std::sqrt(2.0), I / std::sqrt(2.0)});
    EXPECT_NEAR(std::abs(hermitian_inner(v, v) - 1.0), 0.0, 1e-15);
}

TEST(HermitianInner, ConjugateSymmetricAndMismatch) {
    std::mt19937_64 rng(1);
    const ComplexVector z = random_ball_vector(rng, 3, 1.0);
    const ComplexVector w = random_ball_vector(rng, 3, 1.0);
    EXPECT_NEAR(std::abs(hermitian_inner(z, w) - std::conj(hermitian_inner(w, z))), 0.0, 1e-15);
    EXPECT_GT(hermitian_inner(z, z).real(), 0.0);
    EXPECT_THROW(hermitian_inner(z, basis_vector(2, 0)), std::invalid_argument);
}

TEST(ClassifyPoint, Examples) {
    EXPECT_EQ(classify_point(ComplexVector::Zero(2), 1e-12), PointClass::interior);
    EXPECT_EQ(classify_point(basis_vector(2, 0), 1e-12), PointClass::boundary);
    EXPECT_EQ(classify_point(2.0 * basis_vector(2, 0), 1e-12), PointClass::exterior);
    EXPECT_STREQ(to_string(PointClass::boundary), "boundary");
}

TEST(BallPoint, RejectsNonInterior) {
    EXPECT_THROW(BallPoint(basis_vector(2, 0)), std::domain_error);
    EXPECT_THROW(BallPoint((1.0 - 1e-10) * basis_vector(2, 0)), std::domain_error);
    const BallPoint p(make_vector({0.3, 0.4 * I}));
    EXPECT_NEAR(p.norm(), 0.5, 1e-15);
    EXPECT_EQ(p.dimension(), 2);
}

TEST(SpherePoint, Tolerance) {
    EXPECT_NO_THROW(SpherePoint((1.0 + 1e-10) * basis_vector(3, 2)));
    EXPECT_THROW(SpherePoint(0.5 * basis_vector(3, 2)), std::domain_error);
    EXPECT_NEAR(SpherePoint::normalized(make_vector({3.0, 4.0})).vector()(1).real(), 0.8, 1e-15);
}

TEST(UnitaryMoving, Examples) {
    const SpherePoint e1(basis_vector(2, 0)), e2(basis_vector(2, 1)), m1(-basis_vector(2, 0));
    EXPECT_TRUE(unitary_moving(e1, e1).matrix().isIdentity());
    const UnitaryRotation s = unitary_moving(e1, e2);
    EXPECT_LE((s(e1.vector()) - e2.vector()).norm(), 1e-12);
    const UnitaryRotation t = unitary_moving(e1, m1);
    EXPECT_LE((t(e1.vector()) - m1.vector()).norm(), 1e-12);
    EXPECT_LE((t.matrix() * t.matrix().adjoint() - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(),
              1e-12);
}

TEST(UnitaryMoving, RandomPairsCompositionAndSpecial) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 4;
        const SpherePoint a(random_sphere_vector(rng, n)), b(random_sphere_vector(rng, n)),
            c(random_sphere_vector(rng, n));
        const UnitaryRotation ab = unitary_moving(a, b);
        const UnitaryRotation bc = unitary_moving(b, c);
        EXPECT_LE((ab(a.vector()) - b.vector()).norm(), 1e-12);
        EXPECT_LE((bc.compose(ab)(a.vector()) - c.vector()).norm(), 1e-12);
        const ComplexVector z = random_ball_vector(rng, n, 1.0);
        EXPECT_LE((bc.compose(ab)(z) - bc(ab(z))).norm(), 1e-12);
        EXPECT_EQ(classify_point(ab(z)), classify_point(z));
        if (n >= 2) {
            const UnitaryRotation su = unitary_moving(a, b, true);
            EXPECT_LE((su(a.vector()) - b.vector()).norm(), 1e-12);
            EXPECT_NEAR(std::abs(su.matrix().determinant() - 1.0), 0.0, 1e-12);
        }
    }
    EXPECT_THROW(unitary_moving(SpherePoint(make_vector({1.0})), SpherePoint(make_vector({I})), true),
                 std::invalid_argument);
}

TEST(UnitaryRotation, RejectsNonUnitary) {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(0, 1) = 0.1;
    EXPECT_THROW(UnitaryRotation{m}, std::invalid_argument);
}

TEST(RotateFunction, Examples) {
    std::mt19937_64 rng(3);
    const HolomorphicFunction z1 = coordinate_function(2, 0);
    const HolomorphicFunction same = rotate_function(z1, UnitaryRotation::identity(2));
    ComplexMatrix swap = ComplexMatrix::Zero(2, 2);
    swap(0, 1) = swap(1, 0) = 1.0;
    const HolomorphicFunction swapped = rotate_function(z1, UnitaryRotation(swap));
    for (int k = 0; k < 10; ++k) {
        const ComplexVector z = random_ball_vector(rng, 2, 0.99);
        EXPECT_EQ(same(z), z1(z));
        EXPECT_EQ(swapped(z), z(1));
    }
    EXPECT_EQ(swapped.sup_bound, z1.sup_bound);
}

TEST(RotateFunction, SupOverTransportedGridAgrees) {
    std::mt19937_64 rng(11);
    const SpherePoint a(random_sphere_vector(rng, 2)), b(random_sphere_vector(rng, 2));
    const UnitaryRotation s = unitary_moving(a, b);
    const HolomorphicFunction f{2, [](const ComplexVector& z) { return z(0) * z(1) + 0.3 * z(0); }, {}};
    const HolomorphicFunction g = rotate_function(f, s);
    double mf = 0.0, mg = 0.0;
    for (int k = 0; k < 500; ++k) {
        const ComplexVector zeta = random_sphere_vector(rng, 2);
        mf = std::max(mf, std::abs(f(zeta)));
        mg = std::max(mg, std::abs(g(s.inverse()(zeta))));
    }
    EXPECT_NEAR(mf, mg, 1e-12);
}

TEST(Slice, Examples) {
    const SliceFunction g = slice_restrict(coordinate_function(2, 0), SpherePoint(basis_vector(2, 0)));
    for (Complex w : {Complex(0.0), Complex(0.5), 0.5 * I}) EXPECT_EQ(g(w), w);
    const SliceFunction c = slice_restrict(constant_function(2, 0.7), SpherePoint(basis_vector(2, 1)));
    EXPECT_EQ(c(0.3), Complex(0.7));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const SpherePoint a(random_sphere_vector(rng, 3));
        const Complex w = random_ball_vector(rng, 1, 1.0)(0);
        EXPECT_NEAR(std::abs(slice_restrict(inner_with(a), a)(w) - w), 0.0, 1e-13);
        const HolomorphicFunction f{3, [](const ComplexVector& z) { return z(0) * z(2) - z(1); }, {}};
        EXPECT_NEAR(std::abs(slice_restrict(f, a)(w) - f(w * a.vector())), 0.0, 1e-13);
    }
}

TEST(Slice, LiftAndAsFunction) {
    const SpherePoint a(basis_vector(2, 1));
    const HolomorphicFunction sq{1, [](const ComplexVector& w) { return w(0) * w(0); }, 1.0};
    const HolomorphicFunction lifted = slice_lift(sq, a);
    EXPECT_EQ(lifted(make_vector({0.1, 0.5})), Complex(0.25));
    EXPECT_EQ(slice_restrict(lifted, a).as_function()(make_vector({0.5})), Complex(0.25));
    EXPECT_THROW(slice_lift(lifted, a), std::invalid_argument);
}

TEST(Random, BallAndSphereSamples) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 200; ++k) {
        EXPECT_NEAR(random_sphere_vector(rng, 3).norm(), 1.0, 1e-14);
        EXPECT_LE(random_ball_vector(rng, 3, 0.9).norm(), 0.9 + 1e-15);
    }
}
