#include "qcwig/lattice.hpp"

#include <stdexcept>

namespace qcwig {

namespace {

void column_axpy(RMat& m, std::size_t dst, std::size_t src, const Rational& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void column_swap(RMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void column_negate(RMat& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

Rational ceil_q(const Rational& r) { return Rational(-floor(Rational(-r))); }

}  // namespace

Hnf column_hnf(const RMat& g) {
    const std::size_t n = g.rows(), k = g.cols();
    Integer den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Integer d = g(i, j).get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
    RMat a = g.scaled(Rational(den));
    RMat u = RMat::identity(k);
    Hnf out;
    std::size_t j = 0;
    for (std::size_t r = 0; r < n && j < k; ++r) {
        // Euclid across columns j..k-1 on row r.
        while (true) {
            std::size_t best = k;
            for (std::size_t c = j; c < k; ++c)
                if (a(r, c) != 0 && (best == k || abs(a(r, c)) < abs(a(r, best)))) best = c;
            if (best == k) break;
            column_swap(a, best, j);
            column_swap(u, best, j);
            bool done = true;
            for (std::size_t c = j + 1; c < k; ++c) {
                if (a(r, c) == 0) continue;
                Rational q(floor(a(r, c) / a(r, j)));
                column_axpy(a, c, j, q);
                column_axpy(u, c, j, q);
                if (a(r, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a(r, j) == 0) continue;
        if (a(r, j) < 0) {
            column_negate(a, j);
            column_negate(u, j);
        }
        for (std::size_t i = 0; i < j; ++i) {
            Rational q(floor(a(r, i) / a(r, j)));
            if (q == 0) continue;
            column_axpy(a, i, j, q);
            column_axpy(u, i, j, q);
        }
        out.pivots.push_back(r);
        ++j;
    }
    out.rank = j;
    out.h = a.block(0, 0, n, j).scaled(Rational(1) / Rational(den));
    out.u = std::move(u);
    return out;
}

RMat Hnf::kernel() const { return u.block(0, rank, u.rows(), u.cols() - rank); }

RMat lattice_basis(const RMat& g) { return column_hnf(g).h; }

RMat lattice_sum(const RMat& a, const RMat& b) { return lattice_basis(a.hcat(b)); }

RMat dual_basis(const RMat& basis) { return basis.inverse().transpose(); }

RMat lattice_intersection(const RMat& a, const RMat& b) {
    return lattice_basis(dual_basis(lattice_sum(dual_basis(a), dual_basis(b))));
}

bool is_integral(const RVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

bool is_integral(const RMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

bool in_lattice(const RMat& basis, const RVec& v) {
    Hnf h = column_hnf(basis);
    if (h.rank == 0) return sup_norm(v) == 0;
    auto x = solve_in_span(h.h, v);
    return x && is_integral(*x);
}

RVec reduce_offset(RVec& offset, const RMat& basis, const std::vector<std::size_t>& pivots) {
    RVec shift(basis.cols(), Rational(0));
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        const std::size_t p = pivots[j];
        Rational v(floor(offset[p] / basis(p, j)));
        if (v == 0) continue;
        shift[j] = v;
        for (std::size_t i = 0; i < offset.size(); ++i) offset[i] -= v * basis(i, j);
    }
    return shift;
}

std::vector<RVec> coset_representatives(const RMat& m) {
    Hnf h = column_hnf(m);
    const std::size_t k = m.cols();
    if (h.rank != k || m.rows() != k) throw std::invalid_argument("coset_representatives: singular matrix");
    std::vector<long> bound(k);
    for (std::size_t j = 0; j < k; ++j) bound[j] = h.h(h.pivots[j], j).get_num().get_si();
    std::vector<RVec> reps;
    std::vector<long> idx(k, 0);
    while (true) {
        RVec r(k);
        for (std::size_t j = 0; j < k; ++j) r[j] = idx[j];
        reps.push_back(std::move(r));
        std::size_t j = 0;
        while (j < k && ++idx[j] == bound[j]) idx[j++] = 0;
        if (j == k) break;
    }
    return reps;
}

void enumerate_box(const RVec& offset, const RMat& basis, const std::vector<std::size_t>& pivots,
                   const RVec& lo, const RVec& hi,
                   const std::function<void(const std::vector<long>&)>& visit) {
    const std::size_t r = basis.cols();
    std::vector<long> n(r, 0);
    std::function<void(std::size_t, const RVec&)> rec = [&](std::size_t j, const RVec& base) {
        if (j == r) {
            visit(n);
            return;
        }
        const std::size_t p = pivots[j];
        const Rational& g = basis(p, j);
        Rational a = (lo[p] - base[p]) / g, b = (hi[p] - base[p]) / g;
        long n0 = ceil_q(a).get_num().get_si();
        long n1 = floor(b).get_si();
        for (long m = n0; m <= n1; ++m) {
            n[j] = m;
            RVec next = base;
            for (std::size_t i = 0; i < base.size(); ++i) next[i] += Rational(m) * basis(i, j);
            rec(j + 1, next);
        }
    };
    rec(0, offset);
}

std::optional<Rational> min_nonzero_norm(const RVec& offset, const RMat& basis) {
    Hnf h = column_hnf(basis);
    RVec off = offset;
    reduce_offset(off, h.h, h.pivots);
    std::optional<Rational> bound;
    auto consider = [&](const RVec& v) {
        Rational s = sup_norm(v);
        if (s != 0 && (!bound || s < *bound)) bound = s;
    };
    consider(off);
    for (std::size_t j = 0; j < h.rank; ++j) {
        consider(off + h.h.column(j));
        consider(off - h.h.column(j));
    }
    if (!bound) return std::nullopt;
    const std::size_t n = off.size();
    RVec lo(n, -*bound), hi(n, *bound);
    std::optional<Rational> best;
    enumerate_box(off, h.h, h.pivots, lo, hi, [&](const std::vector<long>& idx) {
        RVec p = off;
        for (std::size_t j = 0; j < idx.size(); ++j)
            if (idx[j] != 0)
                for (std::size_t i = 0; i < n; ++i) p[i] += Rational(idx[j]) * h.h(i, j);
        Rational s = sup_norm(p);
        if (s != 0 && (!best || s < *best)) best = s;
    });
    return best ? best : bound;
}

Rational rational_lcm(const std::vector<Rational>& values) {
    Integer num = 1, den = 0;
    for (const auto& v : values) {
        Rational a = abs(v);
        if (a == 0) throw std::invalid_argument("rational_lcm of zero");
        mpz_lcm(num.get_mpz_t(), num.get_mpz_t(), a.get_num_mpz_t());
        mpz_gcd(den.get_mpz_t(), den.get_mpz_t(), a.get_den_mpz_t());
    }
    if (den == 0) throw std::invalid_argument("rational_lcm of empty list");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace qcwig
