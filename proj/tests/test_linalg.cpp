#include "cyclic/linalg.hpp"

#include "test_support.hpp"

#include <Eigen/LU>
#include <gtest/gtest.h>

#include <cmath>

using namespace cyclic;
using cyclic::fixtures::random_matrix;

namespace {

Matrix diag(std::initializer_list<Complex> values)
{
    Vector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const Complex& z : values)
        v(i++) = z;
    return v.asDiagonal();
}

} // namespace

TEST(Linalg, MatmulIdentityAndDiagonal)
{
    const Matrix a = random_matrix(4);
    EXPECT_EQ(matmul(identity(4), a), a);
    EXPECT_LE(frobenius_norm(matmul(diag({1, 2, Complex(0, 3)}), diag({4, -1, 2})) - diag({4, -2, Complex(0, 6)})),
              0);
}

TEST(Linalg, MatmulAgainstSolve)
{
    const Matrix a = expm(random_matrix(3, 1.5L));
    const Matrix inv = a.fullPivLu().solve(identity(3));
    EXPECT_LE(frobenius_norm(matmul(a, inv) - identity(3)), 1e-12L);
}

TEST(Linalg, ShapeErrors)
{
    const Matrix a = random_matrix(2);
    const Matrix b = random_matrix(3);
    try {
        matmul(a, b);
        FAIL() << "expected shape error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::shape);
    }
    EXPECT_THROW(commutator(a, b), Error);
    EXPECT_THROW(expm(Matrix(2, 3)), Error);
}

TEST(Linalg, CommutatorBasics)
{
    const Matrix a = random_matrix(3);
    EXPECT_EQ(frobenius_norm(commutator(a, a)), 0);
    EXPECT_EQ(frobenius_norm(commutator(identity(3), a)), 0);
}

TEST(Linalg, FrobeniusNorm)
{
    EXPECT_EQ(frobenius_norm(Matrix::Zero(3, 3)), 0);
    EXPECT_NEAR(static_cast<double>(frobenius_norm(identity(5))), std::sqrt(5.0), 1e-15);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = random_matrix(4, 3);
        const Real trace = (a.adjoint() * a).trace().real();
        EXPECT_NEAR(static_cast<double>(frobenius_norm(a) * frobenius_norm(a)), static_cast<double>(trace), 1e-13);
    }
}

TEST(Linalg, ExpmTrivialCases)
{
    EXPECT_EQ(expm(Matrix::Zero(3, 3)), identity(3));
    const Matrix d = expm(diag({1, -2, Complex(0, kPi)}));
    const Matrix want = diag({std::exp(Real{1}), std::exp(Real{-2}), Complex(-1, 0)});
    EXPECT_LE(frobenius_norm(d - want), 1e-17L);
}

TEST(Linalg, ExpmNonFiniteRejected)
{
    Matrix a = Matrix::Zero(2, 2);
    a(0, 1) = std::numeric_limits<Real>::quiet_NaN();
    try {
        expm(a);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::non_finite);
    }
}

TEST(Linalg, ExpmGroupInverse)
{
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(5, cyclic::fixtures::uniform(0.1L, 6));
        EXPECT_LE(frobenius_norm(expm(a) * expm(-a) - identity(5)), 1e-11L);
    }
}

TEST(Linalg, ExpmMatchesPadeOracle)
{
    for (Eigen::Index dim : {2, 5, 13, 25}) {
        for (Real scale : {0.01L, 1.0L, 10.0L, 50.0L}) {
            const Matrix a = random_matrix(dim, scale);
            const Matrix ours = expm(a);
            const Matrix oracle = cyclic::fixtures::oracle_expm(a);
            EXPECT_LE(frobenius_norm(ours - oracle) / frobenius_norm(oracle), 1e-13L)
                << "dim " << dim << " scale " << static_cast<double>(scale);
        }
    }
}

TEST(Linalg, ExpmAdditiveOnCommutingInputs)
{
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = random_matrix(4, 1.5L);
        const Matrix b = Complex(0.3L, -0.2L) * a * a - Complex(1.1L) * a + Complex(0.5L) * identity(4);
        EXPECT_LE(frobenius_norm(expm(a + b) - expm(a) * expm(b)), 1e-11L);
    }
}

TEST(Linalg, ExpmSimilarityCovariance)
{
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = random_matrix(4, 2);
        const Matrix s = identity(4) + random_matrix(4, 0.5L);
        const Matrix s_inv = s.inverse();
        EXPECT_LE(frobenius_norm(expm(s * a * s_inv) - s * expm(a) * s_inv), 1e-10L);
    }
}

TEST(Linalg, DeterminantOfExponential)
{
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = random_matrix(5, 3);
        const Complex det = expm(a).determinant();
        const Complex want = std::exp(a.trace());
        EXPECT_LE(std::abs(det - want) / std::abs(want), 1e-10L);
    }
}

TEST(Linalg, LogmTrivialCases)
{
    EXPECT_LE(frobenius_norm(logm_principal(identity(3))), 1e-18L);
    const Real e = std::exp(Real{1});
    EXPECT_LE(frobenius_norm(logm_principal(diag({e, e * e})) - diag({1, 2})), 1e-17L);
}

TEST(Linalg, LogmRoundTrip)
{
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix a = random_matrix(4, cyclic::fixtures::uniform(0.05L, 1));
        EXPECT_LE(frobenius_norm(logm_principal(expm(a)) - a), 1e-9L);
        const Matrix b = expm(random_matrix(3, 2));
        EXPECT_LE(frobenius_norm(expm(logm_principal(b)) - b) / frobenius_norm(b), 1e-9L);
    }
}

TEST(Linalg, LogmBranchCutRejected)
{
    for (const Matrix& bad : {diag({-1, 1}), diag({0, 1}), diag({Complex(-2, 0), Complex(3, 1)})}) {
        try {
            logm_principal(bad);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::branch);
        }
    }
}

TEST(Linalg, LogmDefectiveRejected)
{
    Matrix jordan = identity(2);
    jordan(0, 1) = 1;
    EXPECT_THROW(logm_principal(jordan), Error);
}
