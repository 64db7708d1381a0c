#pragma once

#include "cyclic/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cyclic::bch {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxDegree = 10;

struct DynkinBlock {
    int m; // power of X
    int n; // power of Y

    friend bool operator==(const DynkinBlock&, const DynkinBlock&) = default;
};

/// One composition (m1, n1, ..., mk, nk) of the Dynkin double sum.
struct DynkinTerm {
    std::vector<DynkinBlock> blocks;
    Rational coefficient; // (-1)^{k-1} / (k * degree * prod m_i! n_i!)

    int k() const noexcept { return static_cast<int>(blocks.size()); }
    int degree() const noexcept;

    /// Letters X^{m1} Y^{n1} ... X^{mk} Y^{nk}, e.g. "XXY".
    std::string word() const;
};

/// A right-nested bracket [w0, [w1, [..., w_last]]] with its net coefficient.
struct WordTerm {
    std::string word;
    Rational coefficient;
};

/// All terms of total degree <= max_degree, ordered by degree, then k, then
/// lexicographically by exponents. Throws Error(budget) above kMaxDegree.
std::vector<DynkinTerm> enumerate_terms(int max_degree);

/// Net coefficients of the distinct brackets through max_degree.
///
/// Words whose innermost bracket repeats a generator vanish and are dropped.
/// A word ending in "YX" is folded onto the same word ending in "XY" with its
/// sign flipped, so degree 2 reduces to the single bracket [X,Y] and degree 3
/// to [X,[X,Y]] and [Y,[X,Y]]. Zero net coefficients are dropped. Ordered by
/// word length, then lexicographically.
std::vector<WordTerm> word_coefficients(int max_degree);

/// The right-nested bracket of `word` evaluated on X and Y.
Matrix nested_bracket(const std::string& word, const Matrix& x, const Matrix& y);

/// Truncated series H_N(X, Y) through total degree max_degree.
Matrix dynkin_sum(const Matrix& x, const Matrix& y, int max_degree);

/// (N, ||expm(H_N) - expm(X) expm(Y)||_F) for each requested N, ascending.
///
/// Requires ||X||_F + ||Y||_F <= 1; otherwise throws Error(divergence).
std::vector<std::pair<int, Real>> truncation_error_curve(const Matrix& x, const Matrix& y,
                                                         std::vector<int> degrees);

} // namespace cyclic::bch
