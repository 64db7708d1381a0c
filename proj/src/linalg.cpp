#include "cyclic/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>
#include <limits>

namespace cyclic {

namespace {

constexpr int kTaylorDegree = 18;
constexpr Real kScaledNormBound = 0.5L;
constexpr Real kMaxEigenvectorCondition = 1e8L;

void require_square(const Matrix& a)
{
    if (a.rows() != a.cols() || a.rows() == 0)
        throw Error(ErrorCode::shape, "matrix must be square and non-empty");
}

void require_same_shape(const Matrix& a, const Matrix& b)
{
    require_square(a);
    require_square(b);
    if (a.rows() != b.rows())
        throw Error(ErrorCode::shape, "dimension mismatch");
}

Real one_norm(const Matrix& a)
{
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

} // namespace

Matrix identity(Eigen::Index dim)
{
    return Matrix::Identity(dim, dim);
}

Matrix matmul(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b);
    return a * b;
}

Matrix commutator(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b);
    return a * b - b * a;
}

Real frobenius_norm(const Matrix& a)
{
    Real sum = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

Matrix expm(const Matrix& a)
{
    require_square(a);
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!is_finite(a(i, j)))
                throw Error(ErrorCode::non_finite, "expm: non-finite entry");

    const Real norm = one_norm(a);
    int squarings = 0;
    if (norm > kScaledNormBound)
        squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNormBound)));
    const Matrix scaled = a / std::ldexp(Real{1}, squarings);

    // Horner: I + B(I + B/2(I + B/3(... (I + B/18))))
    const Matrix eye = identity(a.rows());
    Matrix result = eye;
    for (int k = kTaylorDegree; k >= 1; --k)
        result = eye + (scaled * result) / static_cast<Real>(k);

    for (int i = 0; i < squarings; ++i)
        result = result * result;
    return result;
}

Matrix logm_principal(const Matrix& a)
{
    require_square(a);
    Eigen::ComplexEigenSolver<Matrix> solver(a, true);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::branch, "logm: eigensolver did not converge");

    const Vector& values = solver.eigenvalues();
    const Matrix& vectors = solver.eigenvectors();

    const Real scale = std::max<Real>(1, one_norm(a));
    const Real tiny = 64 * std::numeric_limits<Real>::epsilon() * scale;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const Complex lambda = values(i);
        if (std::abs(lambda.imag()) <= tiny && lambda.real() <= tiny)
            throw Error(ErrorCode::branch, "logm: eigenvalue on the closed negative real axis");
    }

    Eigen::FullPivLU<Matrix> lu(vectors);
    if (!lu.isInvertible())
        throw Error(ErrorCode::branch, "logm: singular eigenvector basis");
    const Matrix inverse = lu.inverse();
    const Real condition = one_norm(vectors) * one_norm(inverse);
    if (!(condition <= kMaxEigenvectorCondition))
        throw Error(ErrorCode::branch, "logm: ill-conditioned eigenvector basis");

    Vector logs(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i)
        logs(i) = std::log(values(i));
    return vectors * logs.asDiagonal() * inverse;
}

} // namespace cyclic
