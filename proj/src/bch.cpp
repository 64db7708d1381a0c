#include "cyclic/bch.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace cyclic::bch {

namespace {

void check_degree(int max_degree)
{
    if (max_degree < 1)
        throw Error(ErrorCode::invalid_argument, "max degree must be at least 1");
    if (max_degree > kMaxDegree)
        throw Error(ErrorCode::budget, "max degree " + std::to_string(max_degree) + " exceeds the ceiling of "
                                           + std::to_string(kMaxDegree));
}

boost::multiprecision::cpp_int factorial(int n)
{
    boost::multiprecision::cpp_int f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Rational coefficient_of(const std::vector<DynkinBlock>& blocks, int degree)
{
    boost::multiprecision::cpp_int denom = static_cast<int>(blocks.size()) * degree;
    for (const auto& b : blocks)
        denom *= factorial(b.m) * factorial(b.n);
    Rational c(boost::multiprecision::cpp_int(1), denom);
    return blocks.size() % 2 == 1 ? c : Rational(-c);
}

// Appends every sequence of `k_left` more blocks whose degrees sum to `remaining`.
void compose(int remaining, int k_left, std::vector<DynkinBlock>& prefix, int degree,
             std::vector<DynkinTerm>& out)
{
    if (k_left == 0) {
        if (remaining == 0)
            out.push_back({prefix, coefficient_of(prefix, degree)});
        return;
    }
    // Each later block needs at least one letter.
    for (int m = 0; m <= remaining - (k_left - 1); ++m) {
        for (int n = (m == 0 ? 1 : 0); m + n <= remaining - (k_left - 1); ++n) {
            prefix.push_back({m, n});
            compose(remaining - m - n, k_left - 1, prefix, degree, out);
            prefix.pop_back();
        }
    }
}

std::vector<DynkinTerm> terms_of_degree(int degree)
{
    std::vector<DynkinTerm> out;
    std::vector<DynkinBlock> prefix;
    for (int k = 1; k <= degree; ++k)
        compose(degree, k, prefix, degree, out);
    return out;
}

std::vector<WordTerm> words_of_degree(int degree)
{
    std::map<std::string, Rational> net;
    for (const DynkinTerm& t : terms_of_degree(degree)) {
        std::string w = t.word();
        Rational c = t.coefficient;
        if (w.size() >= 2) {
            const std::size_t n = w.size();
            if (w[n - 1] == w[n - 2])
                continue;
            if (w[n - 2] == 'Y') {
                std::swap(w[n - 2], w[n - 1]);
                c = -c;
            }
        }
        net[w] += c;
    }
    std::vector<WordTerm> out;
    for (auto& [w, c] : net)
        if (c != 0)
            out.push_back({w, c});
    return out;
}

const std::vector<WordTerm>& cached_words_of_degree(int degree)
{
    static std::mutex mutex;
    static std::array<std::vector<WordTerm>, kMaxDegree + 1> cache;
    static std::array<bool, kMaxDegree + 1> ready{};
    std::lock_guard lock(mutex);
    if (!ready[degree]) {
        cache[degree] = words_of_degree(degree);
        ready[degree] = true;
    }
    return cache[degree];
}

void require_pair(const Matrix& x, const Matrix& y)
{
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows() || x.rows() == 0)
        throw Error(ErrorCode::shape, "X and Y must be square of equal dimension");
}

// Homogeneous components H_1 .. H_max (index d-1).
std::vector<Matrix> homogeneous_components(const Matrix& x, const Matrix& y, int max_degree)
{
    std::vector<Matrix> parts;
    parts.reserve(max_degree);
    for (int d = 1; d <= max_degree; ++d) {
        Matrix h = Matrix::Zero(x.rows(), x.cols());
        for (const WordTerm& t : cached_words_of_degree(d))
            h += static_cast<Real>(t.coefficient) * nested_bracket(t.word, x, y);
        parts.push_back(std::move(h));
    }
    return parts;
}

} // namespace

int DynkinTerm::degree() const noexcept
{
    int d = 0;
    for (const auto& b : blocks)
        d += b.m + b.n;
    return d;
}

std::string DynkinTerm::word() const
{
    std::string w;
    for (const auto& b : blocks) {
        w.append(static_cast<std::size_t>(b.m), 'X');
        w.append(static_cast<std::size_t>(b.n), 'Y');
    }
    return w;
}

std::vector<DynkinTerm> enumerate_terms(int max_degree)
{
    check_degree(max_degree);
    std::vector<DynkinTerm> out;
    for (int d = 1; d <= max_degree; ++d) {
        auto level = terms_of_degree(d);
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
}

std::vector<WordTerm> word_coefficients(int max_degree)
{
    check_degree(max_degree);
    std::vector<WordTerm> out;
    for (int d = 1; d <= max_degree; ++d) {
        const auto& level = cached_words_of_degree(d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Matrix nested_bracket(const std::string& word, const Matrix& x, const Matrix& y)
{
    require_pair(x, y);
    if (word.empty())
        throw Error(ErrorCode::invalid_argument, "empty bracket word");
    auto letter = [&](char c) -> const Matrix& { return c == 'X' ? x : y; };
    Matrix inner = letter(word.back());
    for (std::size_t i = word.size() - 1; i-- > 0;)
        inner = commutator(letter(word[i]), inner);
    return inner;
}

Matrix dynkin_sum(const Matrix& x, const Matrix& y, int max_degree)
{
    check_degree(max_degree);
    require_pair(x, y);
    Matrix h = Matrix::Zero(x.rows(), x.cols());
    for (const Matrix& part : homogeneous_components(x, y, max_degree))
        h += part;
    return h;
}

std::vector<std::pair<int, Real>> truncation_error_curve(const Matrix& x, const Matrix& y,
                                                         std::vector<int> degrees)
{
    require_pair(x, y);
    for (int d : degrees)
        check_degree(d);
    if (frobenius_norm(x) + frobenius_norm(y) > 1)
        throw Error(ErrorCode::divergence, "||X||_F + ||Y||_F must not exceed 1");

    std::sort(degrees.begin(), degrees.end());
    std::vector<std::pair<int, Real>> curve;
    if (degrees.empty())
        return curve;

    const Matrix target = expm(x) * expm(y);
    const auto parts = homogeneous_components(x, y, degrees.back());
    Matrix h = Matrix::Zero(x.rows(), x.cols());
    int summed = 0;
    for (int d : degrees) {
        for (; summed < d; ++summed)
            h += parts[summed];
        curve.emplace_back(d, frobenius_norm(expm(h) - target));
    }
    return curve;
}

} // namespace cyclic::bch
