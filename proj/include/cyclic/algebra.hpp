#pragma once

#include "cyclic/types.hpp"

#include <array>
#include <optional>

namespace cyclic {

/// Basis label of a 3-cyclic algebra. The cyclic successor is X -> Y -> Z -> X.
enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

constexpr int index(Axis a) noexcept { return static_cast<int>(a); }
constexpr Axis successor(Axis a) noexcept { return static_cast<Axis>((index(a) + 1) % 3); }
constexpr Axis predecessor(Axis a) noexcept { return static_cast<Axis>((index(a) + 2) % 3); }

/// The axis that is neither `a` nor `b`. Requires a != b.
constexpr Axis third_axis(Axis a, Axis b) noexcept
{
    return static_cast<Axis>(3 - index(a) - index(b));
}

const char* name(Axis a) noexcept;

/// Abstract algebra with [O_mu, O_nu] = kappa * eps_{mu nu lambda} O_lambda.
class AlgebraSpec {
public:
    explicit AlgebraSpec(Complex kappa);

    Complex kappa() const noexcept { return kappa_; }
    static constexpr std::array<Axis, 3> basis() noexcept { return kAxes; }

private:
    Complex kappa_;
};

/// Coefficients (a, b, c) of aX + bY + cZ.
struct CoefficientVector {
    Complex a{};
    Complex b{};
    Complex c{};

    Complex& operator[](Axis axis) noexcept;
    const Complex& operator[](Axis axis) const noexcept;

    bool is_zero() const noexcept;
    Real norm() const noexcept;

    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// A nonzero commutator [O_mu, O_nu] = coefficient * O_axis.
struct CommutatorTerm {
    Axis axis;
    Complex coefficient;
};

/// std::nullopt is the zero marker returned for mu == nu.
std::optional<CommutatorTerm> commutator_coefficient(const AlgebraSpec& spec, Axis mu, Axis nu);

/// Coefficients of [O_axis, v] expanded in the basis.
CoefficientVector bracket(const AlgebraSpec& spec, Axis axis, const CoefficientVector& v);

/// Coefficients of e^{-p O_axis} (aX + bY + cZ) e^{p O_axis}.
///
/// With N = successor(axis), L = successor(N) and theta = kappa * p the
/// coefficients mix as
///   n' =  n cos(theta) + l sin(theta)
///   l' = -n sin(theta) + l cos(theta)
/// and the component along `axis` is copied through untouched. cos and sin
/// are the entire functions, so complex theta is allowed.
CoefficientVector adjoint_rotate(const AlgebraSpec& spec, Axis axis, Complex p,
                                 const CoefficientVector& v);

/// Norm of [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] evaluated through structure constants.
Real jacobi_residual_symbolic(const AlgebraSpec& spec);

} // namespace cyclic
