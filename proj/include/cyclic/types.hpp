#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cyclic {

// Extended precision throughout the core. Exponentials of Hermitian spin
// generators with coefficients of a few units reach magnitudes near 1e6,
// where double rounding alone exceeds an absolute 1e-10 residual budget.
using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884L;

enum class ErrorCode {
    shape = 1,
    non_finite,
    branch,
    invalid_argument,
    variant,
    algebra_mismatch,
    budget,
    divergence,
    index,
    degenerate,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline bool is_finite(const Complex& z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace cyclic
