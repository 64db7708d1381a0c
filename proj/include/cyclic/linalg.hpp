#pragma once

#include "cyclic/types.hpp"

#include <Eigen/Core>

namespace cyclic {

/// Dense square complex matrix, extended precision.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

Matrix identity(Eigen::Index dim);

/// Throws Error(shape) on dimension mismatch or a non-square operand.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

Real frobenius_norm(const Matrix& a);

/// e^A by scaling and squaring around a degree-18 Taylor kernel.
///
/// The scaling exponent s is the smallest with ||A||_1 / 2^s <= 1/2, for
/// which the kernel truncation error is below long double epsilon.
Matrix expm(const Matrix& a);

/// Principal logarithm V diag(log lambda) V^{-1}.
///
/// Throws Error(branch) when an eigenvalue lies on the closed negative real
/// axis or the eigenvector basis has condition number above 1e8.
Matrix logm_principal(const Matrix& a);

} // namespace cyclic
