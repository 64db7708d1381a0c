#include "cyclic/algebra.hpp"
#include "cyclic/representations.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace cyclic;
using cyclic::fixtures::uniform;

namespace {

const Complex I(0, 1);

void expect_near(const CoefficientVector& got, const CoefficientVector& want, Real tol)
{
    for (Axis ax : kAxes)
        EXPECT_LE(std::abs(got[ax] - want[ax]), tol) << "axis " << name(ax);
}

} // namespace

TEST(Algebra, AxisSuccessorIsCyclic)
{
    EXPECT_EQ(successor(Axis::X), Axis::Y);
    EXPECT_EQ(successor(Axis::Y), Axis::Z);
    EXPECT_EQ(successor(Axis::Z), Axis::X);
    EXPECT_EQ(third_axis(Axis::Z, Axis::X), Axis::Y);
}

TEST(Algebra, ZeroKappaRejected)
{
    EXPECT_THROW(AlgebraSpec(Complex{}), Error);
}

TEST(Algebra, CommutatorCoefficientExamples)
{
    auto xy = commutator_coefficient(AlgebraSpec(I), Axis::X, Axis::Y);
    ASSERT_TRUE(xy);
    EXPECT_EQ(xy->axis, Axis::Z);
    EXPECT_EQ(xy->coefficient, I);

    EXPECT_FALSE(commutator_coefficient(AlgebraSpec(1), Axis::X, Axis::X));

    auto yx = commutator_coefficient(AlgebraSpec(1), Axis::Y, Axis::X);
    ASSERT_TRUE(yx);
    EXPECT_EQ(yx->axis, Axis::Z);
    EXPECT_EQ(yx->coefficient, Complex(-1));
}

TEST(Algebra, CommutatorAntisymmetry)
{
    for (Complex kappa : {Complex(1), I, Complex(2.5L), -I}) {
        const AlgebraSpec spec(kappa);
        for (Axis mu : kAxes)
            for (Axis nu : kAxes) {
                if (mu == nu)
                    continue;
                auto f = commutator_coefficient(spec, mu, nu);
                auto b = commutator_coefficient(spec, nu, mu);
                ASSERT_TRUE(f && b);
                EXPECT_EQ(f->axis, b->axis);
                EXPECT_EQ(f->coefficient, -b->coefficient);
            }
    }
}

TEST(Algebra, AdjointRotateExamples)
{
    const CoefficientVector v{1.5L, -2, 0.25L};
    EXPECT_EQ(adjoint_rotate(AlgebraSpec(1), Axis::Z, 0, v), v);

    expect_near(adjoint_rotate(AlgebraSpec(1), Axis::Z, kPi / 2, {1, 0, 0}), {0, -1, 0}, 1e-18L);
    expect_near(adjoint_rotate(AlgebraSpec(I), Axis::X, Complex(0, -kPi / 2), {0, 1, 0}), {0, 0, -1}, 1e-18L);
}

TEST(Algebra, JacobiIdentityHoldsSymbolically)
{
    for (Complex kappa : {Complex(1), I, Complex(2.5L), -I})
        EXPECT_EQ(jacobi_residual_symbolic(AlgebraSpec(kappa)), 0);
}

TEST(Algebra, RotationComposition)
{
    for (Complex kappa : {Complex(1), I, Complex(2.5L), -I}) {
        const AlgebraSpec spec(kappa);
        for (int trial = 0; trial < 50; ++trial) {
            const CoefficientVector v{uniform(-3, 3), uniform(-3, 3), uniform(-3, 3)};
            const Complex p1(uniform(-2, 2), 0);
            const Complex p2(uniform(-2, 2), 0);
            for (Axis ax : kAxes) {
                const auto twice = adjoint_rotate(spec, ax, p1, adjoint_rotate(spec, ax, p2, v));
                const auto once = adjoint_rotate(spec, ax, p1 + p2, v);
                // kappa = i with real p gives cosh/sinh growth up to e^4; scale tolerance accordingly.
                expect_near(twice, once, 1e-12L * std::max<Real>(1, once.norm()));
            }
        }
    }
}

TEST(Algebra, NormPreservedForRealAngle)
{
    for (Complex kappa : {Complex(1), I, Complex(2.5L)}) {
        const AlgebraSpec spec(kappa);
        for (int trial = 0; trial < 50; ++trial) {
            const CoefficientVector v{uniform(-3, 3), uniform(-3, 3), uniform(-3, 3)};
            const Complex p = uniform(-4, 4) / kappa; // kappa p real
            for (Axis ax : kAxes) {
                const auto w = adjoint_rotate(spec, ax, p, v);
                EXPECT_NEAR(static_cast<double>(w.norm() * w.norm()), static_cast<double>(v.norm() * v.norm()),
                            1e-12);
            }
        }
    }
}

TEST(Algebra, RotationAxisComponentBitIdentical)
{
    const AlgebraSpec spec(I);
    const CoefficientVector v{Complex(0.3L, -0.1L), Complex(-1.7L, 2), Complex(0.123456789L, 4)};
    for (Axis ax : kAxes) {
        const auto w = adjoint_rotate(spec, ax, Complex(0.7L, -1.1L), v);
        EXPECT_EQ(w[ax], v[ax]);
    }
}

// Matrix oracle: e^{-p M_axis} V e^{p M_axis} against the closed form.
TEST(Algebra, AdjointRotateMatchesMatrices)
{
    const std::vector<Representation> reps{so3_generators(), spin_generators(1), spin_generators(2),
                                           spin_generators(3)};
    for (const auto& rep : reps) {
        const AlgebraSpec spec = rep.algebra();
        const bool hermitian_basis = rep.kappa() == I;
        for (int trial = 0; trial < 30; ++trial) {
            const Real s = uniform(-4, 4);
            const Complex p = hermitian_basis ? Complex(0, s) : Complex(s, 0);
            const CoefficientVector v{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
            for (Axis ax : kAxes) {
                const Matrix g = rep.generator(ax);
                const Matrix lhs = fixtures::oracle_expm(-p * g) * rep.combine(v) * fixtures::oracle_expm(p * g);
                const Matrix rhs = rep.combine(adjoint_rotate(spec, ax, p, v));
                EXPECT_LE(frobenius_norm(lhs - rhs), 1e-10L);
            }
        }
    }
}
