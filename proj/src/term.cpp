#include "qcwig/term.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <tuple>

#include "qcwig/errors.hpp"

namespace qcwig {

namespace {

constexpr double kPi = std::numbers::pi;

int compare(const Rational& a, const Rational& b) { return a < b ? -1 : (b < a ? 1 : 0); }

int compare(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (int c = compare(a[i], b[i])) return c;
    return 0;
}

int compare(const RMat& a, const RMat& b) {
    if (lex_less(a, b)) return -1;
    if (lex_less(b, a)) return 1;
    return 0;
}

template <class T>
int compare_vec(const std::vector<T>& a, const std::vector<T>& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

int compare_shape(const Term& a, const Term& b) {
    if (int c = compare_vec(a.mode, b.mode)) return c;
    if (int c = compare(a.gens, b.gens)) return c;
    if (int c = compare(a.offset, b.offset)) return c;
    if (int c = compare(a.character, b.character)) return c;
    if (int c = compare_vec(a.order, b.order)) return c;
    return compare_vec(a.monomial, b.monomial);
}

// Radius beyond which a Gaussian of the given width, times a polynomial of
// the given degree, is below ~1e-20 of its peak.
double tail_radius(double width, int degree, double center) {
    double r = width * std::sqrt(46.0 / kPi);
    for (int it = 0; it < 4; ++it) {
        double poly = degree * std::log(10.0 + 2.0 * kPi * (std::abs(center) + r + 1.0) * (1.0 + 1.0 / (width * width)));
        r = width * std::sqrt((46.0 + poly) / kPi);
    }
    return r;
}

Complex ipow(Complex z, int n) {
    Complex r(1.0);
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

}  // namespace

Term Term::atom(RVec point, MultiIndex ord, Weight w) {
    Term t;
    const std::size_t d = point.size();
    t.offset = std::move(point);
    t.gens = RMat(d, 0);
    t.weight = std::move(w);
    t.order = ord.empty() ? MultiIndex(d, 0) : std::move(ord);
    t.monomial = MultiIndex(d, 0);
    t.mode = std::vector<Mode>(d, Mode::atomic);
    return t;
}

Term Term::family(RVec off, RMat g, RVec chi, Weight w) {
    Term t = atom(std::move(off), {}, std::move(w));
    t.gens = std::move(g);
    t.character = std::move(chi);
    canonicalize(t);
    return t;
}

bool Term::same_shape(const Term& o) const { return compare_shape(*this, o) == 0; }

std::vector<std::size_t> Term::pivots() const {
    std::vector<std::size_t> p;
    for (std::size_t j = 0; j < gens.cols(); ++j) {
        std::size_t r = 0;
        while (r < gens.rows() && gens(r, j) == 0) ++r;
        p.push_back(r);
    }
    return p;
}

void canonicalize(Term& t) {
    const std::size_t k = t.gens.cols();
    if (t.character.size() != k) throw std::invalid_argument("term character length mismatch");
    if (k > 0) {
        Hnf h = column_hnf(t.gens);
        if (h.rank != k) throw std::invalid_argument("term generators are linearly dependent");
        t.gens = h.h;
        t.character = h.u.transpose() * t.character;
        RVec shift = reduce_offset(t.offset, t.gens, h.pivots);
        for (auto& c : t.character) c = frac(c);
        t.weight.phase = frac(t.weight.phase - dot(t.character, shift));
    }
    t.weight.phase = frac(t.weight.phase);
}

bool term_less(const Term& a, const Term& b) {
    if (int c = compare_shape(a, b)) return c < 0;
    if (int c = compare(a.weight.scale, b.weight.scale)) return c < 0;
    if (int c = compare(a.weight.phase, b.weight.phase)) return c < 0;
    return std::make_tuple(a.weight.value.real(), a.weight.value.imag()) <
           std::make_tuple(b.weight.value.real(), b.weight.value.imag());
}

std::vector<Term> normalize(std::vector<Term> terms) {
    std::vector<Term> live;
    for (auto& t : terms) {
        if (t.weight.is_zero()) continue;
        canonicalize(t);
        live.push_back(std::move(t));
    }
    std::sort(live.begin(), live.end(), term_less);
    std::vector<Term> out;
    for (auto& t : live) {
        if (!out.empty() && out.back().same_shape(t) && out.back().weight.try_add(t.weight)) continue;
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.weight.is_zero(); });
    return out;
}

Complex pair(const Term& t, const TestFunction& phi) {
    const std::size_t D = t.dim();
    if (total(t.order) > kMaxOrder || total(t.monomial) > kMaxOrder)
        throw OrderCapExceeded("derivative order exceeds cap of " + std::to_string(kMaxOrder));
    if (phi.dim() != D && !phi.terms.empty()) throw DimensionMismatch("test function dimension mismatch");

    const std::size_t k = t.rank();
    const auto piv = t.pivots();
    std::vector<long double> off(D);
    std::vector<std::vector<long double>> g(D, std::vector<long double>(k));
    for (std::size_t i = 0; i < D; ++i) {
        off[i] = t.offset[i].get_d();
        for (std::size_t j = 0; j < k; ++j) g[i][j] = t.gens(i, j).get_d();
    }
    std::vector<long double> u(k);
    for (std::size_t j = 0; j < k; ++j) u[j] = t.character[j].get_d();
    const long double phase0 = t.weight.phase.get_d();

    Complex total_sum(0.0);
    for (const auto& s : phi.terms) {
        // Per-coordinate evaluators and boxes.
        std::vector<GaussAtom> fac(D);
        std::vector<double> lo(D), hi(D);
        for (std::size_t c = 0; c < D; ++c) {
            const GaussAtom& gc = s.factors[c];
            if (t.mode[c] == Mode::atomic) {
                fac[c] = gc;
                double r = tail_radius(gc.width, t.order[c] + t.monomial[c], gc.shift.get_d());
                lo[c] = gc.shift.get_d() - r;
                hi[c] = gc.shift.get_d() + r;
            } else {
                fac[c] = gc.fourier();
                double r = tail_radius(fac[c].width, t.monomial[c], fac[c].shift.get_d());
                lo[c] = fac[c].shift.get_d() - r;
                hi[c] = fac[c].shift.get_d() + r;
            }
        }
        auto value_at = [&](const std::vector<long double>& p) {
            Complex v(1.0);
            for (std::size_t c = 0; c < D; ++c) {
                const double x = static_cast<double>(p[c]);
                if (t.mode[c] == Mode::atomic) {
                    Complex f = std::conj(fac[c].derivative(t.order[c], x));
                    if (t.order[c] % 2) f = -f;
                    if (t.monomial[c]) f *= ipow(Complex(0.0, 2.0 * kPi * x), t.monomial[c]);
                    v *= f;
                } else {
                    v *= std::conj(fac[c].derivative(t.monomial[c], x));
                }
                if (v == Complex(0.0)) break;
            }
            return v;
        };

        Complex acc(0.0);
        std::vector<long> n(k, 0);
        std::function<void(std::size_t, std::vector<long double>&, long double)> rec =
            [&](std::size_t j, std::vector<long double>& base, long double ph) {
                if (j == k) {
                    acc += unit_phase(ph) * value_at(base);
                    return;
                }
                const std::size_t p = piv[j];
                const long double step = g[p][j];
                const long n0 = static_cast<long>(std::ceil((lo[p] - base[p]) / step));
                const long n1 = static_cast<long>(std::floor((hi[p] - base[p]) / step));
                std::vector<long double> next(D);
                for (long m = n0; m <= n1; ++m) {
                    for (std::size_t i = 0; i < D; ++i) next[i] = base[i] + g[i][j] * m;
                    long double frac_u = u[j] * m;
                    frac_u -= std::floor(frac_u);
                    rec(j + 1, next, ph + frac_u);
                }
            };
        std::vector<long double> start = off;
        rec(0, start, phase0);
        total_sum += std::conj(s.coeff) * acc;
    }
    return total_sum * t.weight.value * t.weight.scale.get_d();
}

Complex pair(const std::vector<Term>& terms, const TestFunction& phi) {
    Complex s(0.0);
    for (const auto& t : terms) s += pair(t, phi);
    return s;
}

Term permute_coordinates(const Term& t, const std::vector<std::size_t>& perm) {
    Term out = t;
    const std::size_t D = perm.size(), k = t.rank();
    out.gens = RMat(D, k);
    for (std::size_t i = 0; i < D; ++i) {
        out.offset[i] = t.offset[perm[i]];
        for (std::size_t j = 0; j < k; ++j) out.gens(i, j) = t.gens(perm[i], j);
        out.order[i] = t.order[perm[i]];
        out.monomial[i] = t.monomial[perm[i]];
        out.mode[i] = t.mode[perm[i]];
    }
    return out;
}

}  // namespace qcwig
