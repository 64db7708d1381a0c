#include "cyclic/dynamics.hpp"

#include "cyclic/factor.hpp"
#include "cyclic/representations.hpp"

#include <algorithm>
#include <cmath>

namespace cyclic::dynamics {

namespace {

// e^{i phase Jz}, diagonal in the m-descending basis.
Matrix jz_phase(int two_j, Real phase)
{
    const int dim = two_j + 1;
    Matrix d = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const Real m = Real(two_j) / 2 - k;
        d(k, k) = std::polar(Real{1}, phase * m);
    }
    return d;
}

void require_finite(Real t)
{
    if (!std::isfinite(t))
        throw Error(ErrorCode::non_finite, "time must be finite");
}

} // namespace

void RabiParams::validate() const
{
    if (two_j < 1)
        throw Error(ErrorCode::invalid_argument, "two_j must be at least 1");
    if (!std::isfinite(omega) || !std::isfinite(Omega) || !std::isfinite(lambda))
        throw Error(ErrorCode::non_finite, "Rabi parameters must be finite");
    if (Omega == 0)
        throw Error(ErrorCode::invalid_argument, "Omega must be nonzero");
}

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes))
{
    if (amplitudes_.size() == 0)
        throw Error(ErrorCode::shape, "empty state");
    if (std::abs(amplitudes_.norm() - 1) > 1e-10L)
        throw Error(ErrorCode::invalid_argument, "state must be normalized");
}

StateVector StateVector::basis(int two_j, int two_m)
{
    Vector v = Vector::Zero(two_j + 1);
    v(basis_index(two_j, two_m)) = 1;
    return StateVector(std::move(v));
}

int basis_index(int two_j, int two_m)
{
    if (two_j < 1 || two_m < -two_j || two_m > two_j || (two_j - two_m) % 2 != 0)
        throw Error(ErrorCode::index, "m = " + std::to_string(two_m) + "/2 is not a valid index for 2J = "
                                          + std::to_string(two_j));
    return (two_j - two_m) / 2;
}

Matrix propagator(const RabiParams& params, Real t)
{
    params.validate();
    require_finite(t);

    const Representation anti_hermitian = rescale_basis(spin_generators(params.two_j), Complex(0, -1));

    // -i[(w - W) Jz - l W Jx] t = (w - W) t K_z - l W t K_x; Z carries a, X carries b.
    const Real a = (params.omega - params.Omega) * t;
    const Real b = -params.lambda * params.Omega * t;
    // Splitting sign(a) (a, b) and negating q keeps |p| <= pi/2, so an
    // undriven spin (b = 0) gets p = 0 exactly instead of a round trip through pi.
    const Real sign = a < 0 ? -1 : 1;
    const TwoSplit split = split_two(anti_hermitian.algebra(), sign * a, sign * b, Axis::Y, Axis::Z);

    // e^{p K_y} e^{q K_z} e^{-p K_y}; e^{q K_z} = e^{-i q Jz}.
    const Matrix rot = expm(split.p * anti_hermitian.generator(Axis::Y));
    const Matrix rot_inv = rot.adjoint(); // p real, K_y real antisymmetric
    const Matrix middle = jz_phase(params.two_j, -sign * split.q.real());
    return jz_phase(params.two_j, params.omega * t) * rot * middle * rot_inv;
}

Matrix propagator_direct(const RabiParams& params, Real t)
{
    params.validate();
    require_finite(t);
    const Representation spin = spin_generators(params.two_j);
    const Complex i(0, 1);
    const Matrix first = expm(i * (params.omega * t) * spin.generator(Axis::Z));
    const Matrix exponent = -i * t
                            * ((params.omega - params.Omega) * spin.generator(Axis::Z)
                               - params.lambda * params.Omega * spin.generator(Axis::X));
    return first * expm(exponent);
}

StateVector evolve(const RabiParams& params, const StateVector& initial, Real t)
{
    if (initial.amplitudes().size() != params.dim())
        throw Error(ErrorCode::shape, "state dimension does not match 2J + 1");
    Vector out = propagator(params, t) * initial.amplitudes();
    out.normalize();
    return StateVector(std::move(out));
}

Real transition_probability(const RabiParams& params, int two_m_from, int two_m_to, Real t)
{
    params.validate();
    const int from = basis_index(params.two_j, two_m_from);
    const int to = basis_index(params.two_j, two_m_to);
    return std::norm(propagator(params, t)(to, from));
}

std::vector<SweepRow> sweep(const RabiParams& params, const std::vector<Real>& t_grid, int two_m_from,
                            int two_m_to)
{
    params.validate();
    const int from = basis_index(params.two_j, two_m_from);
    const int to = basis_index(params.two_j, two_m_to);
    for (Real t : t_grid)
        require_finite(t);
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw Error(ErrorCode::invalid_argument, "time grid must be sorted");

    std::vector<SweepRow> rows;
    rows.reserve(t_grid.size());
    for (Real t : t_grid) {
        const Matrix u = propagator(params, t);
        const Real total = u.col(from).squaredNorm();
        rows.push_back({t, std::norm(u(to, from)), std::abs(total - 1)});
    }
    return rows;
}

} // namespace cyclic::dynamics
