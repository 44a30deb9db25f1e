#include "qcwig/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcwig {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num), d(den);
    if (n[0] == '+') n.erase(0, 1);
    if (d[0] == '+') d.erase(0, 1);
    Integer zn(n), zd(d);
    if (zd == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(zn, zd);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational frac(const Rational& r) {
    Rational f = r - Rational(floor(r));
    f.canonicalize();
    return f;
}

double to_double(const Rational& r) { return r.get_d(); }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

RVec rvec(std::initializer_list<long> values) {
    RVec v;
    for (long x : values) v.emplace_back(x);
    return v;
}

RVec operator+(const RVec& a, const RVec& b) {
    RVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RVec operator-(const RVec& a, const RVec& b) {
    RVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RVec operator-(const RVec& a) {
    RVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

RVec operator*(const Rational& s, const RVec& a) {
    RVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

Rational dot(const RVec& a, const RVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational sup_norm(const RVec& a) {
    Rational m = 0;
    for (const auto& x : a) m = std::max(m, abs(x));
    return m;
}

std::vector<double> to_double(const RVec& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
    return out;
}

bool lex_less(const RVec& a, const RVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int total(const MultiIndex& alpha) {
    int s = 0;
    for (int a : alpha) s += a;
    return s;
}

RMat::RMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RMat::RMat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RMat RMat::identity(std::size_t n) {
    RMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RMat RMat::diagonal(const RVec& diag) {
    RMat m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

RMat RMat::from_columns(const std::vector<RVec>& cols, std::size_t rows) {
    RMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

RVec RMat::column(std::size_t j) const {
    RVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RVec RMat::row(std::size_t i) const {
    return RVec(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

void RMat::set_column(std::size_t j, const RVec& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RMat RMat::transpose() const {
    RMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RMat RMat::operator*(const RMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    RMat p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
        }
    return p;
}

RVec RMat::operator*(const RVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    RVec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

RMat RMat::operator+(const RMat& o) const {
    RMat s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
    return s;
}

RMat RMat::operator-() const { return scaled(-1); }

RMat RMat::scaled(const Rational& s) const {
    RMat m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = s * data_[i];
    return m;
}

Rational RMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    RMat a = *this;
    Rational d = 1;
    const std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return d;
}

RMat RMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    RMat a = *this;
    RMat inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::size_t RMat::rank() const {
    RMat a = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t p = rank;
        while (p < rows_ && a(p, c) == 0) ++p;
        if (p == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(rank, j));
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (a(r, c) == 0) continue;
            Rational f = a(r, c) / a(rank, c);
            for (std::size_t j = c; j < cols_; ++j) a(r, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

RMat RMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    RMat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

RMat RMat::from_blocks(const RMat& a, const RMat& b, const RMat& c, const RMat& d) {
    const std::size_t n = a.rows();
    RMat m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = a(i, j);
            m(i, n + j) = b(i, j);
            m(n + i, j) = c(i, j);
            m(n + i, n + j) = d(i, j);
        }
    return m;
}

RMat RMat::hcat(const RMat& o) const {
    if (rows_ != o.rows_ && !empty() && !o.empty()) throw std::invalid_argument("hcat row mismatch");
    const std::size_t r = std::max(rows_, o.rows_);
    RMat m(r, cols_ + o.cols_);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
    }
    return m;
}

bool RMat::operator==(const RMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool lex_less(const RMat& a, const RMat& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    return false;
}

std::optional<RVec> solve_in_span(const RMat& g, const RVec& y) {
    const std::size_t n = g.rows(), k = g.cols();
    // Augmented elimination on [G | y].
    RMat a(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a(i, j) = g(i, j);
        a(i, k) = y[i];
    }
    std::vector<std::size_t> pivot_row(k);
    std::size_t r = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = r;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return std::nullopt;  // rank deficient
        for (std::size_t j = 0; j <= k; ++j) std::swap(a(p, j), a(r, j));
        Rational piv = a(r, c);
        for (std::size_t j = 0; j <= k; ++j) a(r, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j <= k; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_row[c] = r++;
    }
    for (std::size_t i = r; i < n; ++i)
        if (a(i, k) != 0) return std::nullopt;
    RVec x(k);
    for (std::size_t c = 0; c < k; ++c) x[c] = a(pivot_row[c], k);
    return x;
}

}  // namespace qcwig
