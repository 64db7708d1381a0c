#pragma once

#include "cyclic/algebra.hpp"
#include "cyclic/representations.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclic {

/// One factor e^{coefficient * O_axis}.
struct ExpFactor {
    Axis axis;
    Complex coefficient;
};

/// Ordered product of single-generator exponentials, multiplied left to right.
///
/// Every sequence is conjugation-symmetric: factor k and factor n-1-k share an
/// axis and carry negated coefficients, except the center of an odd-length
/// sequence. The structure constant of the algebra that produced the
/// sequence travels with it so evaluation can reject a mismatched
/// representation.
class FactorSequence {
public:
    /// Throws Error(invalid_argument) if the symmetry is violated or a
    /// coefficient is not finite.
    FactorSequence(Complex kappa, std::vector<ExpFactor> factors);

    Complex kappa() const noexcept { return kappa_; }
    const std::vector<ExpFactor>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    bool empty() const noexcept { return factors_.empty(); }
    const ExpFactor& operator[](std::size_t i) const { return factors_[i]; }

private:
    Complex kappa_;
    std::vector<ExpFactor> factors_;
};

/// One of the twelve five-factor orderings of e^{aX+bY+cZ}.
///
/// The first rotation is about `first_axis` and zeroes the `first_zeroed`
/// component; the second rotation is about `first_zeroed` and leaves only
/// `center_axis`, which is either `first_axis` or the third axis.
struct VariantId {
    Axis first_axis;
    Axis first_zeroed;
    Axis center_axis;

    bool is_valid() const noexcept;

    /// Short name, "t2r1".."t2r4" or "t3r1".."t3r8".
    std::string name() const;

    /// Throws Error(variant) for an unknown name.
    static VariantId parse(std::string_view name);

    friend bool operator==(const VariantId&, const VariantId&) = default;
};

/// The twelve variants in canonical order: t2r1..t2r4 then t3r1..t3r8.
const std::array<VariantId, 12>& all_variant_ids() noexcept;

struct TwoSplit {
    Complex p;
    Complex q;
    FactorSequence sequence;
};

struct ThreeSplit {
    Complex p;
    Complex q;
    Complex r;
    FactorSequence sequence;
};

struct VariantSplit {
    VariantId id;
    ThreeSplit split;
};

/// e^{a N + b L} = e^{p C} e^{q I} e^{-p C}.
///
/// C is `conjugating_axis`, N = successor(C) carries `a` and L = successor(N)
/// carries `b`. `inner_axis` selects which of N, L survives the conjugation.
/// For real a, b and inner N, kappa p = atan2(b, a); for inner L,
/// kappa p = -atan2(a, b). q is the principal square root of a^2 + b^2.
///
/// Complex pairs with a^2 + b^2 = 0 but (a, b) != 0 admit no such split and
/// throw Error(degenerate). inner_axis == conjugating_axis throws
/// Error(invalid_argument).
TwoSplit split_two(const AlgebraSpec& spec, Complex a, Complex b, Axis conjugating_axis,
                   Axis inner_axis);

/// e^{aX+bY+cZ} = e^{p F} e^{q Z1} e^{r C} e^{-q Z1} e^{-p F} for the given
/// variant, with r the principal square root of a^2 + b^2 + c^2. When the pair
/// entering the first rotation is zero, p = 0. A zero vector yields five zero
/// coefficients.
ThreeSplit split_three(const AlgebraSpec& spec, const CoefficientVector& v, VariantId variant);

std::vector<VariantSplit> all_variants(const AlgebraSpec& spec, const CoefficientVector& v);

/// Left-to-right product of expm(coefficient * m_axis). Throws
/// Error(algebra_mismatch) if the structure constants differ.
Matrix evaluate(const Representation& rep, const FactorSequence& seq);

/// ||evaluate(rep, seq) - expm(a mX + b mY + c mZ)||_F
Real residual(const Representation& rep, const CoefficientVector& v, const FactorSequence& seq);

/// Orderings t3r1 and t3r2 are sometimes written closing with e^{-p2 X}, p2
/// being the two-term angle of (a, b), instead of e^{-p X}. Returns the
/// residual of that literal product, or nullopt for the other variants.
std::optional<Real> printed_form_residual(const Representation& rep, const CoefficientVector& v,
                                          VariantId variant);

} // namespace cyclic
