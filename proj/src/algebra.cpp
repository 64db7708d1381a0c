#include "cyclic/algebra.hpp"

#include <cmath>

namespace cyclic {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::shape: return "shape";
    case ErrorCode::non_finite: return "non-finite";
    case ErrorCode::branch: return "branch/conditioning";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::variant: return "variant";
    case ErrorCode::algebra_mismatch: return "algebra mismatch";
    case ErrorCode::budget: return "budget";
    case ErrorCode::divergence: return "divergence risk";
    case ErrorCode::index: return "index";
    case ErrorCode::degenerate: return "degenerate";
    }
    return "unknown";
}

const char* name(Axis a) noexcept
{
    switch (a) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    case Axis::Z: return "Z";
    }
    return "?";
}

AlgebraSpec::AlgebraSpec(Complex kappa) : kappa_(kappa)
{
    if (!is_finite(kappa))
        throw Error(ErrorCode::non_finite, "structure constant must be finite");
    if (kappa == Complex{})
        throw Error(ErrorCode::invalid_argument, "structure constant must be nonzero");
}

Complex& CoefficientVector::operator[](Axis axis) noexcept
{
    switch (axis) {
    case Axis::X: return a;
    case Axis::Y: return b;
    default: return c;
    }
}

const Complex& CoefficientVector::operator[](Axis axis) const noexcept
{
    switch (axis) {
    case Axis::X: return a;
    case Axis::Y: return b;
    default: return c;
    }
}

bool CoefficientVector::is_zero() const noexcept
{
    return a == Complex{} && b == Complex{} && c == Complex{};
}

Real CoefficientVector::norm() const noexcept
{
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c));
}

std::optional<CommutatorTerm> commutator_coefficient(const AlgebraSpec& spec, Axis mu, Axis nu)
{
    if (mu == nu)
        return std::nullopt;
    const Axis lambda = third_axis(mu, nu);
    const bool cyclic_order = successor(mu) == nu;
    return CommutatorTerm{lambda, cyclic_order ? spec.kappa() : -spec.kappa()};
}

CoefficientVector bracket(const AlgebraSpec& spec, Axis axis, const CoefficientVector& v)
{
    CoefficientVector out;
    for (Axis nu : kAxes) {
        if (auto term = commutator_coefficient(spec, axis, nu))
            out[term->axis] += term->coefficient * v[nu];
    }
    return out;
}

CoefficientVector adjoint_rotate(const AlgebraSpec& spec, Axis axis, Complex p,
                                 const CoefficientVector& v)
{
    const Complex theta = spec.kappa() * p;
    const Complex cs = std::cos(theta);
    const Complex sn = std::sin(theta);
    const Axis n = successor(axis);
    const Axis l = successor(n);

    CoefficientVector out = v;
    out[n] = v[n] * cs + v[l] * sn;
    out[l] = -v[n] * sn + v[l] * cs;
    return out;
}

Real jacobi_residual_symbolic(const AlgebraSpec& spec)
{
    auto unit = [](Axis a) {
        CoefficientVector v;
        v[a] = 1;
        return v;
    };

    CoefficientVector total;
    for (Axis mu : kAxes) {
        const Axis nu = successor(mu);
        const Axis lambda = successor(nu);
        const CoefficientVector inner = bracket(spec, nu, unit(lambda));
        const CoefficientVector outer = bracket(spec, mu, inner);
        total.a += outer.a;
        total.b += outer.b;
        total.c += outer.c;
    }
    return total.norm();
}

} // namespace cyclic
