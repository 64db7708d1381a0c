#include "cyclic/representations.hpp"

#include <algorithm>
#include <cmath>

namespace cyclic {

Representation::Representation(Matrix mx, Matrix my, Matrix mz, Complex kappa)
    : mx_(std::move(mx)), my_(std::move(my)), mz_(std::move(mz)), kappa_(kappa)
{
    const auto n = mx_.rows();
    auto square_of = [n](const Matrix& m) { return m.rows() == n && m.cols() == n; };
    if (n == 0 || !square_of(mx_) || !square_of(my_) || !square_of(mz_))
        throw Error(ErrorCode::shape, "representation generators must be square and equally sized");
    if (kappa_ == Complex{})
        throw Error(ErrorCode::invalid_argument, "structure constant must be nonzero");
}

const Matrix& Representation::generator(Axis axis) const noexcept
{
    switch (axis) {
    case Axis::X: return mx_;
    case Axis::Y: return my_;
    default: return mz_;
    }
}

Matrix Representation::combine(const CoefficientVector& v) const
{
    return v.a * mx_ + v.b * my_ + v.c * mz_;
}

Representation spin_generators(int two_j)
{
    if (two_j < 0)
        throw Error(ErrorCode::invalid_argument, "two_j must be nonnegative");
    if (two_j == 0)
        throw Error(ErrorCode::degenerate, "trivial representation: all generators vanish");

    const int dim = two_j + 1;
    const Real j = Real(two_j) / 2;
    Matrix jz = Matrix::Zero(dim, dim);
    Matrix raise = Matrix::Zero(dim, dim);

    // Row/column k carries m = j - k.
    for (int k = 0; k < dim; ++k) {
        const Real m = j - k;
        jz(k, k) = m;
        if (k > 0)
            raise(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    const Matrix lower = raise.adjoint();
    const Matrix jx = (raise + lower) / Real(2);
    const Matrix jy = (raise - lower) / Complex(0, 2);
    return Representation(jx, jy, jz, Complex(0, 1));
}

Representation so3_generators()
{
    std::array<Matrix, 3> k;
    for (Axis mu : kAxes) {
        Matrix m = Matrix::Zero(3, 3);
        const Axis nu = successor(mu);
        const Axis lambda = successor(nu);
        // -eps_{mu nu lambda} = -1, -eps_{mu lambda nu} = +1
        m(index(nu), index(lambda)) = -1;
        m(index(lambda), index(nu)) = 1;
        k[index(mu)] = m;
    }
    return Representation(k[0], k[1], k[2], Complex(1, 0));
}

Representation rescale_basis(const Representation& rep, Complex s)
{
    if (s == Complex{})
        throw Error(ErrorCode::degenerate, "degenerate scale");
    return Representation(s * rep.generator(Axis::X), s * rep.generator(Axis::Y),
                          s * rep.generator(Axis::Z), s * rep.kappa());
}

Real validate_cyclic(const Representation& rep)
{
    Real worst = 0;
    for (Axis mu : kAxes) {
        const Axis nu = successor(mu);
        const Axis lambda = successor(nu);
        const Matrix defect = commutator(rep.generator(mu), rep.generator(nu))
                              - rep.kappa() * rep.generator(lambda);
        worst = std::max(worst, frobenius_norm(defect));
    }
    return worst;
}

} // namespace cyclic
