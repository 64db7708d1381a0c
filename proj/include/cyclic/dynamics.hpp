#pragma once

#include "cyclic/linalg.hpp"

#include <vector>

namespace cyclic::dynamics {

/// Rotating-frame parameters. Frequencies are angular, lambda is dimensionless.
struct RabiParams {
    Real omega = 0;   // carrier frequency
    Real Omega = 0;   // Larmor frequency
    Real lambda = 0;  // drive strength relative to Omega
    int two_j = 1;    // 2J

    /// Throws Error(invalid_argument) unless two_j >= 1, Omega != 0 and all finite.
    void validate() const;
    int dim() const noexcept { return two_j + 1; }
};

/// Amplitudes in the Jz eigenbasis, m = J first. Normalized to 1e-10 at construction.
class StateVector {
public:
    explicit StateVector(Vector amplitudes);

    /// |m> for the given 2m.
    static StateVector basis(int two_j, int two_m);

    const Vector& amplitudes() const noexcept { return amplitudes_; }

private:
    Vector amplitudes_;
};

/// Basis row of 2m for spin 2J; throws Error(index) if parity or range is wrong.
int basis_index(int two_j, int two_m);

/// U(t) = e^{i omega t Jz} e^{-i[(omega - Omega) Jz - lambda Omega Jx] t}
///
/// The second factor is split after re-basing to K = -iJ (kappa = 1): its
/// exponent (omega - Omega) t K_z - lambda Omega t K_x is factored as
/// e^{p K_y} e^{q K_z} e^{-p K_y} with real p, q.
Matrix propagator(const RabiParams& params, Real t);

/// The same matrix from two direct exponentials, used as a cross-check.
Matrix propagator_direct(const RabiParams& params, Real t);

/// Psi(t) = U(t) Psi(0)
StateVector evolve(const RabiParams& params, const StateVector& initial, Real t);

/// |<m_to| U(t) |m_from>|^2, with m given as 2m.
Real transition_probability(const RabiParams& params, int two_m_from, int two_m_to, Real t);

struct SweepRow {
    Real t;
    Real probability;
    Real unitarity_defect; // |sum_m P(m_from -> m) - 1|
};

/// One row per grid point, in grid order. Throws Error(non_finite) for a
/// non-finite t and Error(invalid_argument) for an unsorted grid.
std::vector<SweepRow> sweep(const RabiParams& params, const std::vector<Real>& t_grid, int two_m_from,
                            int two_m_to);

} // namespace cyclic::dynamics
