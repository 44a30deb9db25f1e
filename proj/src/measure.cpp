#include "qcwig/measure.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <stdexcept>

#include "qcwig/errors.hpp"

namespace qcwig {

namespace {

bool atom_less(const DeltaAtom& a, const DeltaAtom& b) {
    if (a.location != b.location) return lex_less(a.location, b.location);
    return a.order < b.order;
}

bool comb_shape_less(const CombTerm& a, const CombTerm& b) {
    if (a.step != b.step) return lex_less(a.step, b.step);
    if (a.shift != b.shift) return lex_less(a.shift, b.shift);
    return lex_less(a.modulation, b.modulation);
}

bool comb_same_shape(const CombTerm& a, const CombTerm& b) {
    return a.step == b.step && a.shift == b.shift && a.modulation == b.modulation;
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

PointSet::PointSet(std::vector<RationalPoint> pts) : points(std::move(pts)) {
    std::vector<RationalPoint> sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](const RVec& a, const RVec& b) { return lex_less(a, b); });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].size() != sorted[0].size()) throw std::invalid_argument("point set mixes dimensions");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw std::invalid_argument("duplicate point in point set");
    }
}

CombTerm comb(const Rational& a, const Rational& shift, const Rational& modulation, Weight coeff) {
    return CombTerm{RMat{{a}}, RVec{shift}, RVec{modulation}, std::move(coeff)};
}

bool AtomicDistribution::is_measure() const {
    return std::all_of(atoms.begin(), atoms.end(), [](const DeltaAtom& a) { return total(a.order) == 0; });
}

std::vector<Term> AtomicDistribution::terms() const {
    std::vector<Term> out;
    for (const auto& a : atoms) {
        if (a.location.size() != dim) throw DimensionMismatch("atom dimension mismatch");
        out.push_back(Term::atom(a.location, a.order, a.coeff));
    }
    for (const auto& c : combs) {
        if (c.step.rows() != dim || c.step.cols() != dim) throw DimensionMismatch("comb step dimension mismatch");
        Weight w = c.coeff * Weight::unit_phase(dot(c.modulation, c.shift));
        out.push_back(Term::family(c.shift, c.step, c.step.transpose() * c.modulation, w));
    }
    return out;
}

AtomicDistribution AtomicDistribution::delta(RationalPoint p, MultiIndex order, Weight c) {
    AtomicDistribution mu;
    mu.dim = p.size();
    if (order.empty()) order.assign(p.size(), 0);
    mu.atoms.push_back(DeltaAtom{std::move(p), std::move(order), std::move(c)});
    return mu;
}

AtomicDistribution AtomicDistribution::of_comb(CombTerm c) {
    AtomicDistribution mu;
    mu.dim = c.shift.size();
    mu.combs.push_back(std::move(c));
    return mu;
}

AtomicDistribution AtomicDistribution::operator+(const AtomicDistribution& o) const {
    if (dim != o.dim) throw DimensionMismatch("sum of distributions of different dimension");
    AtomicDistribution s = *this;
    s.atoms.insert(s.atoms.end(), o.atoms.begin(), o.atoms.end());
    s.combs.insert(s.combs.end(), o.combs.begin(), o.combs.end());
    s.growth = std::max(growth, o.growth);
    return s;
}

std::optional<Rational> min_gap(const PointSet& s) {
    if (s.size() <= 1) return std::nullopt;
    std::vector<RationalPoint> p = s.points;
    std::sort(p.begin(), p.end(), [](const RVec& a, const RVec& b) { return lex_less(a, b); });
    std::optional<Rational> best;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (best && p[j][0] - p[i][0] >= *best) break;
            Rational d = sup_norm(p[j] - p[i]);
            if (!best || d < *best) best = d;
        }
    return best;
}

bool is_uniformly_discrete(const PointSet& s, const Rational& delta) {
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    auto g = min_gap(s);
    return !g || *g >= delta;
}

Complex pair(const AtomicDistribution& mu, const TestFunction& phi) { return pair(mu.terms(), phi); }

Complex pair(const AtomicDistribution& mu, const std::vector<GaussAtom>& phi) {
    if (mu.dim != 1) throw DimensionMismatch("atom-list test functions are one-dimensional");
    return pair(mu, TestFunction::from_atoms(phi));
}

CombTerm canonicalize(CombTerm c) {
    Hnf h = column_hnf(c.step);
    if (h.rank != c.step.cols() || c.step.rows() != c.step.cols()) throw std::invalid_argument("comb step is singular");
    c.step = h.h;
    reduce_offset(c.shift, c.step, h.pivots);
    Hnf dual = column_hnf(dual_basis(c.step));
    RVec before = c.modulation;
    reduce_offset(c.modulation, dual.h, dual.pivots);
    c.coeff.phase = frac(c.coeff.phase + dot(before - c.modulation, c.shift));
    return c;
}

AtomicDistribution canonicalize(AtomicDistribution mu) {
    std::vector<DeltaAtom> atoms;
    for (auto& a : mu.atoms) {
        if (a.order.empty()) a.order.assign(mu.dim, 0);
        if (!a.coeff.is_zero()) atoms.push_back(std::move(a));
    }
    std::sort(atoms.begin(), atoms.end(), [](const DeltaAtom& a, const DeltaAtom& b) {
        if (atom_less(a, b)) return true;
        if (atom_less(b, a)) return false;
        return std::make_tuple(Rational(a.coeff.scale), Rational(a.coeff.phase)) <
               std::make_tuple(Rational(b.coeff.scale), Rational(b.coeff.phase));
    });
    mu.atoms.clear();
    for (auto& a : atoms) {
        auto& last = mu.atoms;
        if (!last.empty() && last.back().location == a.location && last.back().order == a.order &&
            last.back().coeff.try_add(a.coeff))
            continue;
        last.push_back(std::move(a));
    }
    std::erase_if(mu.atoms, [](const DeltaAtom& a) { return a.coeff.is_zero(); });

    std::vector<CombTerm> combs;
    for (auto& c : mu.combs)
        if (!c.coeff.is_zero()) combs.push_back(canonicalize(std::move(c)));
    std::sort(combs.begin(), combs.end(), [](const CombTerm& a, const CombTerm& b) {
        if (comb_shape_less(a, b)) return true;
        if (comb_shape_less(b, a)) return false;
        return std::make_tuple(Rational(a.coeff.scale), Rational(a.coeff.phase)) <
               std::make_tuple(Rational(b.coeff.scale), Rational(b.coeff.phase));
    });
    mu.combs.clear();
    for (auto& c : combs) {
        if (!mu.combs.empty() && comb_same_shape(mu.combs.back(), c) && mu.combs.back().coeff.try_add(c.coeff)) continue;
        mu.combs.push_back(std::move(c));
    }
    std::erase_if(mu.combs, [](const CombTerm& c) { return c.coeff.is_zero(); });
    return mu;
}

AtomicDistribution translate_modulate(const AtomicDistribution& mu, const RationalPoint& alpha,
                                      const RationalPoint& beta) {
    if (alpha.size() != mu.dim || beta.size() != mu.dim) throw DimensionMismatch("shift dimension mismatch");
    AtomicDistribution out;
    out.dim = mu.dim;
    out.growth = mu.growth;
    const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
    for (const auto& a : mu.atoms) {
        const RVec r = a.location + alpha;
        const MultiIndex& ord = a.order.empty() ? MultiIndex(mu.dim, 0) : a.order;
        // e^{2 pi i beta t} delta_r^{(ord)} expanded by Leibniz into lower orders.
        MultiIndex gamma(mu.dim, 0);
        while (true) {
            Complex v(1.0);
            Rational s = 1;
            for (std::size_t i = 0; i < mu.dim; ++i) {
                int e = ord[i] - gamma[i];
                v *= static_cast<double>(binomial(ord[i], gamma[i]) * (e % 2 ? -1 : 1));
                for (int m = 0; m < e; ++m) {
                    v *= two_pi_i;
                    s *= beta[i];
                }
            }
            if (s != 0) {
                Weight w = a.coeff * Weight(v, s, dot(beta, r));
                out.atoms.push_back(DeltaAtom{r, gamma, w});
            }
            std::size_t i = 0;
            while (i < mu.dim && ++gamma[i] > ord[i]) gamma[i++] = 0;
            if (i == mu.dim) break;
        }
    }
    for (const auto& c : mu.combs) {
        CombTerm t = c;
        t.shift = c.shift + alpha;
        t.coeff = c.coeff * Weight::unit_phase(-dot(c.modulation, alpha));
        t.modulation = c.modulation + beta;
        out.combs.push_back(std::move(t));
    }
    return canonicalize(std::move(out));
}

PointSet atom_support(const AtomicDistribution& mu) {
    std::set<RVec, decltype([](const RVec& a, const RVec& b) { return lex_less(a, b); })> pts;
    for (const auto& a : mu.atoms)
        if (!a.coeff.is_zero()) pts.insert(a.location);
    return PointSet(std::vector<RationalPoint>(pts.begin(), pts.end()));
}

}  // namespace qcwig
