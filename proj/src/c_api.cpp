#include "cyclic/cyclic.h"

#include "cyclic/bch.hpp"
#include "cyclic/dynamics.hpp"
#include "cyclic/factor.hpp"

#include <array>
#include <new>
#include <string>

struct cyc_representation {
    cyclic::Representation rep;
};

struct cyc_sequence {
    cyclic::FactorSequence seq;
};

namespace {

thread_local std::string last_error;

cyc_status to_status(cyclic::ErrorCode code)
{
    using cyclic::ErrorCode;
    switch (code) {
    case ErrorCode::shape: return CYC_ERR_SHAPE;
    case ErrorCode::non_finite: return CYC_ERR_NON_FINITE;
    case ErrorCode::branch: return CYC_ERR_BRANCH;
    case ErrorCode::invalid_argument: return CYC_ERR_INVALID_ARGUMENT;
    case ErrorCode::variant: return CYC_ERR_VARIANT;
    case ErrorCode::algebra_mismatch: return CYC_ERR_ALGEBRA_MISMATCH;
    case ErrorCode::budget: return CYC_ERR_BUDGET;
    case ErrorCode::divergence: return CYC_ERR_DIVERGENCE;
    case ErrorCode::index: return CYC_ERR_INDEX;
    case ErrorCode::degenerate: return CYC_ERR_DEGENERATE;
    }
    return CYC_ERR_INTERNAL;
}

template <class F>
cyc_status guarded(F&& body) noexcept
{
    try {
        last_error.clear();
        body();
        return CYC_OK;
    } catch (const cyclic::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CYC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CYC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown exception";
        return CYC_ERR_INTERNAL;
    }
}

cyclic::Complex in(cyc_complex z) { return {z.re, z.im}; }

cyc_complex out(const cyclic::Complex& z)
{
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

cyclic::Axis to_axis(cyc_axis a)
{
    if (a < CYC_AXIS_X || a > CYC_AXIS_Z)
        throw cyclic::Error(cyclic::ErrorCode::invalid_argument, "axis out of range");
    return static_cast<cyclic::Axis>(a);
}

cyclic::VariantId to_variant(int variant)
{
    const auto& ids = cyclic::all_variant_ids();
    if (variant < 0 || variant >= static_cast<int>(ids.size()))
        throw cyclic::Error(cyclic::ErrorCode::variant, "variant index out of range");
    return ids[static_cast<std::size_t>(variant)];
}

cyclic::Matrix matrix_in(std::size_t dim, const cyc_complex* data)
{
    if (dim == 0)
        throw cyclic::Error(cyclic::ErrorCode::shape, "dimension must be positive");
    const auto n = static_cast<Eigen::Index>(dim);
    cyclic::Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = in(data[i * n + j]);
    return m;
}

void matrix_out(const cyclic::Matrix& m, cyc_complex* data)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            data[i * m.cols() + j] = out(m(i, j));
}

cyclic::dynamics::RabiParams params_in(const cyc_rabi_params& p)
{
    return {p.omega, p.Omega, p.lambda, p.two_j};
}

} // namespace

extern "C" {

const char* cyc_last_error(void) { return last_error.c_str(); }

const char* cyc_status_string(cyc_status status)
{
    switch (status) {
    case CYC_OK: return "ok";
    case CYC_ERR_SHAPE: return "shape";
    case CYC_ERR_NON_FINITE: return "non-finite";
    case CYC_ERR_BRANCH: return "branch/conditioning";
    case CYC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CYC_ERR_VARIANT: return "variant";
    case CYC_ERR_ALGEBRA_MISMATCH: return "algebra mismatch";
    case CYC_ERR_BUDGET: return "budget";
    case CYC_ERR_DIVERGENCE: return "divergence risk";
    case CYC_ERR_INDEX: return "index";
    case CYC_ERR_DEGENERATE: return "degenerate";
    case CYC_ERR_NULL_ARGUMENT: return "null argument";
    case CYC_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

cyc_status cyc_adjoint_rotate(cyc_complex kappa, cyc_axis axis, cyc_complex p, const cyc_complex v_in[3],
                              cyc_complex v_out[3])
{
    if (!v_in || !v_out)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const cyclic::AlgebraSpec spec(in(kappa));
        const cyclic::CoefficientVector v{in(v_in[0]), in(v_in[1]), in(v_in[2])};
        const auto r = cyclic::adjoint_rotate(spec, to_axis(axis), in(p), v);
        v_out[0] = out(r.a);
        v_out[1] = out(r.b);
        v_out[2] = out(r.c);
    });
}

cyc_status cyc_rep_spin(int two_j, cyc_representation** result)
{
    if (!result)
        return CYC_ERR_NULL_ARGUMENT;
    *result = nullptr;
    return guarded([&] { *result = new cyc_representation{cyclic::spin_generators(two_j)}; });
}

cyc_status cyc_rep_so3(cyc_representation** result)
{
    if (!result)
        return CYC_ERR_NULL_ARGUMENT;
    *result = nullptr;
    return guarded([&] { *result = new cyc_representation{cyclic::so3_generators()}; });
}

cyc_status cyc_rep_rescale(const cyc_representation* rep, cyc_complex s, cyc_representation** result)
{
    if (!rep || !result)
        return CYC_ERR_NULL_ARGUMENT;
    *result = nullptr;
    return guarded([&] { *result = new cyc_representation{cyclic::rescale_basis(rep->rep, in(s))}; });
}

void cyc_rep_free(cyc_representation* rep) { delete rep; }

size_t cyc_rep_dim(const cyc_representation* rep)
{
    return rep ? static_cast<size_t>(rep->rep.dim()) : 0;
}

cyc_complex cyc_rep_kappa(const cyc_representation* rep)
{
    return rep ? out(rep->rep.kappa()) : cyc_complex{0, 0};
}

cyc_status cyc_rep_generator(const cyc_representation* rep, cyc_axis axis, cyc_complex* result)
{
    if (!rep || !result)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] { matrix_out(rep->rep.generator(to_axis(axis)), result); });
}

cyc_status cyc_rep_validate_cyclic(const cyc_representation* rep, double* result)
{
    if (!rep || !result)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] { *result = static_cast<double>(cyclic::validate_cyclic(rep->rep)); });
}

int cyc_variant_count(void) { return static_cast<int>(cyclic::all_variant_ids().size()); }

const char* cyc_variant_name(int variant)
{
    static const auto names = [] {
        std::array<std::string, 12> n;
        for (std::size_t i = 0; i < n.size(); ++i)
            n[i] = cyclic::all_variant_ids()[i].name();
        return n;
    }();
    if (variant < 0 || variant >= static_cast<int>(names.size()))
        return nullptr;
    return names[static_cast<std::size_t>(variant)].c_str();
}

cyc_status cyc_variant_parse(const char* name, int* result)
{
    if (!name || !result)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const cyclic::VariantId id = cyclic::VariantId::parse(name);
        const auto& ids = cyclic::all_variant_ids();
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (ids[i] == id)
                *result = static_cast<int>(i);
    });
}

cyc_status cyc_split_two(cyc_complex kappa, cyc_complex a, cyc_complex b, cyc_axis conjugating_axis,
                         cyc_axis inner_axis, cyc_complex* p, cyc_complex* q, cyc_sequence** result)
{
    if (result)
        *result = nullptr;
    return guarded([&] {
        const cyclic::AlgebraSpec spec(in(kappa));
        auto split = cyclic::split_two(spec, in(a), in(b), to_axis(conjugating_axis), to_axis(inner_axis));
        if (p)
            *p = out(split.p);
        if (q)
            *q = out(split.q);
        if (result)
            *result = new cyc_sequence{std::move(split.sequence)};
    });
}

cyc_status cyc_split_three(cyc_complex kappa, cyc_complex a, cyc_complex b, cyc_complex c, int variant,
                           cyc_complex* p, cyc_complex* q, cyc_complex* r, cyc_sequence** result)
{
    if (result)
        *result = nullptr;
    return guarded([&] {
        const cyclic::AlgebraSpec spec(in(kappa));
        auto split = cyclic::split_three(spec, {in(a), in(b), in(c)}, to_variant(variant));
        if (p)
            *p = out(split.p);
        if (q)
            *q = out(split.q);
        if (r)
            *r = out(split.r);
        if (result)
            *result = new cyc_sequence{std::move(split.sequence)};
    });
}

cyc_status cyc_sequence_create(cyc_complex kappa, const cyc_axis* axes, const cyc_complex* coefficients, size_t n,
                               cyc_sequence** result)
{
    if (!result || (n > 0 && (!axes || !coefficients)))
        return CYC_ERR_NULL_ARGUMENT;
    *result = nullptr;
    return guarded([&] {
        std::vector<cyclic::ExpFactor> factors;
        factors.reserve(n);
        for (size_t i = 0; i < n; ++i)
            factors.push_back({to_axis(axes[i]), in(coefficients[i])});
        *result = new cyc_sequence{cyclic::FactorSequence(in(kappa), std::move(factors))};
    });
}

void cyc_sequence_free(cyc_sequence* seq) { delete seq; }

size_t cyc_sequence_length(const cyc_sequence* seq) { return seq ? seq->seq.size() : 0; }

cyc_status cyc_sequence_factor(const cyc_sequence* seq, size_t index, cyc_axis* axis, cyc_complex* coefficient)
{
    if (!seq || !axis || !coefficient)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] {
        if (index >= seq->seq.size())
            throw cyclic::Error(cyclic::ErrorCode::index, "factor index out of range");
        const auto& f = seq->seq[index];
        *axis = static_cast<cyc_axis>(cyclic::index(f.axis));
        *coefficient = out(f.coefficient);
    });
}

cyc_status cyc_evaluate(const cyc_representation* rep, const cyc_sequence* seq, cyc_complex* result)
{
    if (!rep || !seq || !result)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] { matrix_out(cyclic::evaluate(rep->rep, seq->seq), result); });
}

cyc_status cyc_residual(const cyc_representation* rep, cyc_complex a, cyc_complex b, cyc_complex c,
                        const cyc_sequence* seq, double* result)
{
    if (!rep || !seq || !result)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] {
        *result = static_cast<double>(cyclic::residual(rep->rep, {in(a), in(b), in(c)}, seq->seq));
    });
}

cyc_status cyc_printed_form_residual(const cyc_representation* rep, cyc_complex a, cyc_complex b, cyc_complex c,
                                     int variant, int* differs, double* result)
{
    if (!rep || !differs || !result)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const auto r = cyclic::printed_form_residual(rep->rep, {in(a), in(b), in(c)}, to_variant(variant));
        *differs = r.has_value() ? 1 : 0;
        *result = r ? static_cast<double>(*r) : 0.0;
    });
}

cyc_status cyc_bch_truncation_curve(size_t dim, const cyc_complex* x, const cyc_complex* y, const int* degrees,
                                    size_t n, double* errors_out)
{
    if (!x || !y || (n > 0 && (!degrees || !errors_out)))
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const std::vector<int> requested(degrees, degrees + n);
        const auto curve = cyclic::bch::truncation_error_curve(matrix_in(dim, x), matrix_in(dim, y), requested);
        for (size_t i = 0; i < n; ++i)
            for (const auto& [degree, error] : curve)
                if (degree == requested[i])
                    errors_out[i] = static_cast<double>(error);
    });
}

cyc_status cyc_bch_dynkin_sum(size_t dim, const cyc_complex* x, const cyc_complex* y, int max_degree,
                              cyc_complex* result)
{
    if (!x || !y || !result)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] {
        matrix_out(cyclic::bch::dynkin_sum(matrix_in(dim, x), matrix_in(dim, y), max_degree), result);
    });
}

cyc_status cyc_rabi_propagator(const cyc_rabi_params* params, double t, cyc_complex* result)
{
    if (!params || !result)
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] { matrix_out(cyclic::dynamics::propagator(params_in(*params), t), result); });
}

cyc_status cyc_rabi_sweep(const cyc_rabi_params* params, const double* t, size_t n, int two_m_from, int two_m_to,
                          double* probability_out, double* unitarity_defect_out)
{
    if (!params || (n > 0 && (!t || !probability_out)))
        return CYC_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const std::vector<cyclic::Real> grid(t, t + n);
        const auto rows = cyclic::dynamics::sweep(params_in(*params), grid, two_m_from, two_m_to);
        for (size_t i = 0; i < rows.size(); ++i) {
            probability_out[i] = static_cast<double>(rows[i].probability);
            if (unitarity_defect_out)
                unitarity_defect_out[i] = static_cast<double>(rows[i].unitarity_defect);
        }
    });
}

} // extern "C"
