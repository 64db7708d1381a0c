#pragma once

#include "cyclic/algebra.hpp"
#include "cyclic/linalg.hpp"

namespace cyclic {

/// Concrete matrices realizing X, Y, Z with a common structure constant.
class Representation {
public:
    /// Throws Error(shape) unless the three generators are square and equally sized.
    Representation(Matrix mx, Matrix my, Matrix mz, Complex kappa);

    Eigen::Index dim() const noexcept { return mx_.rows(); }
    Complex kappa() const noexcept { return kappa_; }
    AlgebraSpec algebra() const { return AlgebraSpec(kappa_); }

    const Matrix& generator(Axis axis) const noexcept;

    /// a mX + b mY + c mZ
    Matrix combine(const CoefficientVector& v) const;

private:
    Matrix mx_, my_, mz_;
    Complex kappa_;
};

/// Spin-J matrices in the Jz eigenbasis ordered m = J, J-1, ..., -J, with
/// kappa = i and hbar = 1. `two_j` is 2J; two_j == 0 throws Error(degenerate).
Representation spin_generators(int two_j);

/// Real 3x3 generators (K_mu)_{jk} = -eps_{mu jk}, kappa = 1.
Representation so3_generators();

/// Generators scaled by s; the structure constant becomes s * kappa.
Representation rescale_basis(const Representation& rep, Complex s);

/// max over cyclic pairs of ||[m_mu, m_nu] - kappa m_lambda||_F.
Real validate_cyclic(const Representation& rep);

} // namespace cyclic
