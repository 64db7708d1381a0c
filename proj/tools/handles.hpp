#pragma once

#include "cyclic/cyclic.h"
#include "report.hpp"

#include <complex>
#include <memory>
#include <string>

namespace cli {

struct RepDeleter {
    void operator()(cyc_representation* r) const noexcept { cyc_rep_free(r); }
};
struct SeqDeleter {
    void operator()(cyc_sequence* s) const noexcept { cyc_sequence_free(s); }
};
using RepHandle = std::unique_ptr<cyc_representation, RepDeleter>;
using SeqHandle = std::unique_ptr<cyc_sequence, SeqDeleter>;

using complex = std::complex<double>;

inline cyc_complex to_c(complex z) { return {z.real(), z.imag()}; }
inline complex from_c(cyc_complex z) { return {z.re, z.im}; }

inline void check(cyc_status status)
{
    if (status != CYC_OK)
        throw UsageError(std::string(cyc_status_string(status)) + ": " + cyc_last_error());
}

inline RepHandle make_so3()
{
    cyc_representation* r = nullptr;
    check(cyc_rep_so3(&r));
    return RepHandle(r);
}

inline RepHandle make_spin(int two_j)
{
    cyc_representation* r = nullptr;
    check(cyc_rep_spin(two_j, &r));
    return RepHandle(r);
}

/// Rescales the generators so the structure constant becomes `kappa`.
inline RepHandle with_kappa(const cyc_representation* rep, complex kappa)
{
    const complex s = kappa / from_c(cyc_rep_kappa(rep));
    cyc_representation* r = nullptr;
    check(cyc_rep_rescale(rep, to_c(s), &r));
    return RepHandle(r);
}

inline const char* axis_name(cyc_axis a)
{
    switch (a) {
    case CYC_AXIS_X: return "X";
    case CYC_AXIS_Y: return "Y";
    case CYC_AXIS_Z: return "Z";
    }
    return "?";
}

} // namespace cli
