#include "cyclic/factor.hpp"

#include <cmath>
#include <limits>

namespace cyclic {

namespace {

// Rotation angle theta = kappa * p that maps the pair (alpha, beta) on
// (N, L) = (successor(axis), successor(successor(axis))) onto a single axis,
// together with the surviving coefficient rho.
struct PlaneRotation {
    Complex theta;
    Complex rho;
};

bool is_real(const Complex& z) noexcept { return z.imag() == 0; }

PlaneRotation rotate_onto(Complex alpha, Complex beta, bool keep_successor)
{
    if (alpha == Complex{} && beta == Complex{})
        return {Complex{}, Complex{}};

    // keep N: cos = alpha / rho, sin =  beta / rho
    // keep L: cos =  beta / rho, sin = -alpha / rho
    const Complex cos_num = keep_successor ? alpha : beta;
    const Complex sin_num = keep_successor ? beta : -alpha;

    if (is_real(alpha) && is_real(beta)) {
        const Real theta = std::atan2(sin_num.real(), cos_num.real());
        return {Complex(theta, 0), Complex(std::hypot(alpha.real(), beta.real()), 0)};
    }

    const Complex rho_sq = alpha * alpha + beta * beta;
    const Real scale = std::norm(alpha) + std::norm(beta);
    if (std::abs(rho_sq) <= 64 * std::numeric_limits<Real>::epsilon() * scale)
        throw Error(ErrorCode::degenerate,
                    "isotropic coefficient pair (sum of squares vanishes): no conjugated split exists");

    const Complex rho = std::sqrt(rho_sq);
    const Complex cs = cos_num / rho;
    const Complex sn = sin_num / rho;
    // e^{i theta} = cos + i sin; principal branch.
    const Complex theta = Complex(0, -1) * std::log(cs + Complex(0, 1) * sn);
    return {theta, rho};
}

void check_finite(const Complex& z, const char* what)
{
    if (!is_finite(z))
        throw Error(ErrorCode::non_finite, std::string(what) + " must be finite");
}

struct VariantRow {
    const char* name;
    VariantId id;
};

constexpr std::array<VariantRow, 12> kVariantRows{{
    {"t2r1", {Axis::Z, Axis::Y, Axis::X}},
    {"t2r2", {Axis::Z, Axis::Y, Axis::Z}},
    {"t2r3", {Axis::Z, Axis::X, Axis::Y}},
    {"t2r4", {Axis::Z, Axis::X, Axis::Z}},
    {"t3r1", {Axis::X, Axis::Z, Axis::Y}},
    {"t3r2", {Axis::X, Axis::Z, Axis::X}},
    {"t3r3", {Axis::X, Axis::Y, Axis::Z}},
    {"t3r4", {Axis::X, Axis::Y, Axis::X}},
    {"t3r5", {Axis::Y, Axis::X, Axis::Z}},
    {"t3r6", {Axis::Y, Axis::X, Axis::Y}},
    {"t3r7", {Axis::Y, Axis::Z, Axis::X}},
    {"t3r8", {Axis::Y, Axis::Z, Axis::Y}},
}};

} // namespace

FactorSequence::FactorSequence(Complex kappa, std::vector<ExpFactor> factors)
    : kappa_(kappa), factors_(std::move(factors))
{
    check_finite(kappa_, "structure constant");
    const std::size_t n = factors_.size();
    for (std::size_t k = 0; k < n; ++k) {
        check_finite(factors_[k].coefficient, "factor coefficient");
        const std::size_t mirror = n - 1 - k;
        if (mirror == k)
            continue;
        if (factors_[k].axis != factors_[mirror].axis
            || factors_[k].coefficient != -factors_[mirror].coefficient)
            throw Error(ErrorCode::invalid_argument,
                        "factor sequence is not conjugation-symmetric at position " + std::to_string(k));
    }
}

bool VariantId::is_valid() const noexcept
{
    return first_axis != first_zeroed
           && (center_axis == first_axis || center_axis == third_axis(first_axis, first_zeroed));
}

std::string VariantId::name() const
{
    for (const auto& row : kVariantRows)
        if (row.id == *this)
            return row.name;
    throw Error(ErrorCode::variant, "invalid variant id");
}

VariantId VariantId::parse(std::string_view name)
{
    for (const auto& row : kVariantRows)
        if (name == row.name)
            return row.id;
    throw Error(ErrorCode::variant, "unknown variant '" + std::string(name) + "'");
}

const std::array<VariantId, 12>& all_variant_ids() noexcept
{
    static const std::array<VariantId, 12> ids = [] {
        std::array<VariantId, 12> out{};
        for (std::size_t i = 0; i < kVariantRows.size(); ++i)
            out[i] = kVariantRows[i].id;
        return out;
    }();
    return ids;
}

TwoSplit split_two(const AlgebraSpec& spec, Complex a, Complex b, Axis conjugating_axis,
                   Axis inner_axis)
{
    check_finite(a, "coefficient a");
    check_finite(b, "coefficient b");
    if (inner_axis == conjugating_axis)
        throw Error(ErrorCode::invalid_argument, "inner axis must differ from the conjugating axis");

    const bool keep_successor = inner_axis == successor(conjugating_axis);
    const PlaneRotation rot = rotate_onto(a, b, keep_successor);
    const Complex p = rot.theta / spec.kappa();
    FactorSequence seq(spec.kappa(), {{conjugating_axis, p}, {inner_axis, rot.rho}, {conjugating_axis, -p}});
    return {p, rot.rho, std::move(seq)};
}

ThreeSplit split_three(const AlgebraSpec& spec, const CoefficientVector& v, VariantId variant)
{
    if (!variant.is_valid())
        throw Error(ErrorCode::variant, "invalid variant id");
    check_finite(v.a, "coefficient a");
    check_finite(v.b, "coefficient b");
    check_finite(v.c, "coefficient c");

    const Axis first = variant.first_axis;
    const Axis zeroed = variant.first_zeroed;
    const Axis survivor = third_axis(first, zeroed);

    // First rotation about `first`: keep `survivor`, kill `zeroed`.
    const Axis n1 = successor(first);
    const PlaneRotation rot1 = rotate_onto(v[n1], v[successor(n1)], survivor == n1);

    // Second rotation about `zeroed` acts on (first, survivor).
    CoefficientVector w;
    w[first] = v[first];
    w[survivor] = rot1.rho;
    const Axis n2 = successor(zeroed);
    const PlaneRotation rot2 = rotate_onto(w[n2], w[successor(n2)], variant.center_axis == n2);

    const Complex p = rot1.theta / spec.kappa();
    const Complex q = rot2.theta / spec.kappa();
    const Complex r = rot2.rho;
    FactorSequence seq(spec.kappa(), {{first, p},
                                      {zeroed, q},
                                      {variant.center_axis, r},
                                      {zeroed, -q},
                                      {first, -p}});
    return {p, q, r, std::move(seq)};
}

std::vector<VariantSplit> all_variants(const AlgebraSpec& spec, const CoefficientVector& v)
{
    std::vector<VariantSplit> out;
    out.reserve(12);
    for (const VariantId& id : all_variant_ids())
        out.push_back({id, split_three(spec, v, id)});
    return out;
}

Matrix evaluate(const Representation& rep, const FactorSequence& seq)
{
    const Complex diff = rep.kappa() - seq.kappa();
    if (std::abs(diff) > 1e-12L * std::max<Real>(1, std::abs(seq.kappa())))
        throw Error(ErrorCode::algebra_mismatch,
                    "representation structure constant differs from the sequence's algebra");

    Matrix product = identity(rep.dim());
    for (const ExpFactor& f : seq.factors())
        product = product * expm(f.coefficient * rep.generator(f.axis));
    return product;
}

Real residual(const Representation& rep, const CoefficientVector& v, const FactorSequence& seq)
{
    const Matrix factored = evaluate(rep, seq);
    return frobenius_norm(factored - expm(rep.combine(v)));
}

std::optional<Real> printed_form_residual(const Representation& rep, const CoefficientVector& v,
                                          VariantId variant)
{
    if (variant != VariantId::parse("t3r1") && variant != VariantId::parse("t3r2"))
        return std::nullopt;

    const AlgebraSpec spec = rep.algebra();
    const ThreeSplit symmetric = split_three(spec, v, variant);
    // p2 of the Z-first rows that zero X.
    const Complex p2 = split_two(spec, v.a, v.b, Axis::Z, Axis::Y).p;

    Matrix product = identity(rep.dim());
    const auto& f = symmetric.sequence.factors();
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
        product = product * expm(f[k].coefficient * rep.generator(f[k].axis));
    product = product * expm(-p2 * rep.generator(Axis::X));
    return frobenius_norm(product - expm(rep.combine(v)));
}

} // namespace cyclic
