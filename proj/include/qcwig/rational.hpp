#pragma once

// Exact rational scalars, vectors and small dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcwig {

using Integer = mpz_class;
using Rational = mpq_class;
using RVec = std::vector<Rational>;
using MultiIndex = std::vector<int>;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
/// num/den in lowest terms. mpq_class(num, den) skips the reduction.
Rational ratio(long num, long den);

Integer floor(const Rational& r);
/// Representative of r modulo 1 in [0, 1).
Rational frac(const Rational& r);
double to_double(const Rational& r);
Rational abs(const Rational& r);

RVec rvec(std::initializer_list<long> values);
RVec operator+(const RVec& a, const RVec& b);
RVec operator-(const RVec& a, const RVec& b);
RVec operator-(const RVec& a);
RVec operator*(const Rational& s, const RVec& a);
Rational dot(const RVec& a, const RVec& b);
Rational sup_norm(const RVec& a);
std::vector<double> to_double(const RVec& v);

/// Lexicographic order, used to sort points deterministically.
bool lex_less(const RVec& a, const RVec& b);

int total(const MultiIndex& alpha);

/// Dense row-major rational matrix. Dimensions here never exceed 4x4 in the
/// exact engine, so everything is plain O(n^3) arithmetic.
class RMat {
public:
    RMat() = default;
    RMat(std::size_t rows, std::size_t cols);
    RMat(std::initializer_list<std::initializer_list<Rational>> rows);

    static RMat identity(std::size_t n);
    static RMat diagonal(const RVec& diag);
    /// Matrix whose columns are the given vectors (all of equal length).
    static RMat from_columns(const std::vector<RVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RVec column(std::size_t j) const;
    RVec row(std::size_t i) const;
    void set_column(std::size_t j, const RVec& v);

    RMat transpose() const;
    RMat operator*(const RMat& other) const;
    RVec operator*(const RVec& v) const;
    RMat operator+(const RMat& other) const;
    RMat operator-() const;
    RMat scaled(const Rational& s) const;

    Rational det() const;
    /// Exact inverse; throws std::domain_error when singular.
    RMat inverse() const;
    std::size_t rank() const;

    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    RMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    static RMat from_blocks(const RMat& a, const RMat& b, const RMat& c, const RMat& d);
    /// Horizontal concatenation [this | other]; rows must agree.
    RMat hcat(const RMat& other) const;

    bool operator==(const RMat& other) const;
    bool operator!=(const RMat& other) const { return !(*this == other); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

bool lex_less(const RMat& a, const RMat& b);

/// Solves G x = y for x when G has full column rank and y lies in its column
/// span. Returns nullopt otherwise.
std::optional<RVec> solve_in_span(const RMat& g, const RVec& y);

}  // namespace qcwig
