#include "qcwig/quasicrystal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "qcwig/errors.hpp"
#include "qcwig/lattice.hpp"

namespace qcwig {

SetDescriptor half_sumset(const SetDescriptor& a) {
    if (a.full_line) return make_descriptor(a.dim, {}, true);
    std::vector<Coset> cs;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < a.cosets.size(); ++i)
        for (std::size_t j = i; j < a.cosets.size(); ++j) {
            const Coset &p = a.cosets[i], &q = a.cosets[j];
            RMat gens = p.basis.hcat(q.basis);
            cs.push_back(Coset{half * (p.offset + q.offset), gens.scaled(half)});
        }
    return make_descriptor(a.dim, std::move(cs));
}

bool midpoint_closure_check(const PhaseSpace& w, const SetDescriptor& a) {
    auto inside = half_sumset(a).includes(project(w, 1));
    if (!inside) throw std::domain_error("midpoint check: cosets of intermediate rank");
    return *inside;
}

std::optional<Rational> half_sumset_min_gap(const PointSet& a) {
    std::set<RVec, bool (*)(const RVec&, const RVec&)> mids(
        static_cast<bool (*)(const RVec&, const RVec&)>(lex_less));
    const Rational half(1, 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j) mids.insert(half * (a.points[i] + a.points[j]));
    return min_gap(PointSet(std::vector<RVec>(mids.begin(), mids.end())));
}

PointSet reciprocal_perturbed_integers(int k) {
    std::vector<RVec> pts;
    for (int n = -k; n <= k; ++n)
        if (n != 0) pts.push_back({Rational(n) + Rational(1, std::abs(n))});
    return PointSet(std::move(pts));
}

// ---- canonical form ----

AtomicDistribution CanonicalForm::synthesize() const {
    AtomicDistribution mu;
    for (const auto& c : cosets)
        for (const auto& t : c.terms) mu.combs.push_back(comb(step, c.shift, t.frequency, Weight(t.coeff)));
    return mu;
}

namespace {

void require_order_zero(const AtomicDistribution& mu) {
    if (mu.dim != 1) throw NotLatticeSupported("canonical form is one-dimensional");
    if (!mu.is_measure()) throw NotLatticeSupported("derivative atoms have no canonical form");
}

// Adds coeff * e^{2 pi i f x} on the coset shift + step Z.
void add_term(std::map<Rational, std::map<Rational, Complex>>& acc, const Rational& step, Rational shift,
              Rational f, Complex coeff) {
    shift -= step * Rational(floor(shift / step));
    Integer q = floor(f * step);
    f -= Rational(q) / step;
    // On shift + step Z the dropped part e^{2 pi i q x / step} is constant.
    coeff *= unit_phase(Rational(q) * shift / step);
    acc[shift][f] += coeff;
}

CanonicalForm collect(const Rational& step, const std::map<Rational, std::map<Rational, Complex>>& acc, double tol) {
    double scale = 0.0;
    for (const auto& [s, m] : acc)
        for (const auto& [f, c] : m) scale = std::max(scale, std::abs(c));
    CanonicalForm out;
    out.step = step;
    for (const auto& [s, m] : acc) {
        CosetPolynomial p{s, {}};
        for (const auto& [f, c] : m)
            if (std::abs(c) > tol * std::max(1.0, scale)) p.terms.push_back(TrigTerm{f, c});
        if (!p.terms.empty()) out.cosets.push_back(std::move(p));
    }
    return out;
}

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(a)); }

CanonicalForm fit_combs(const AtomicDistribution& mu, double tol) {
    std::vector<Rational> steps;
    for (const auto& c : mu.combs) steps.push_back(c.step(0, 0));
    const Rational a = rational_lcm(steps);
    std::map<Rational, std::map<Rational, Complex>> acc;
    for (const auto& c : mu.combs) {
        const Rational ak = abs(c.step(0, 0));
        Integer parts = Integer(a / ak);
        Complex w = c.coeff.materialize();
        for (Integer m = 0; m < parts; ++m)
            add_term(acc, a, c.shift[0] + Rational(m) * ak, c.modulation[0], w);
    }
    return collect(a, acc, tol);
}

CanonicalForm fit_atoms(const AtomicDistribution& mu, double tol) {
    std::map<Rational, Complex> vals;
    for (const auto& at : mu.atoms) vals[at.location[0]] += at.coeff.materialize();
    for (auto it = vals.begin(); it != vals.end();)
        it = std::abs(it->second) == 0.0 ? vals.erase(it) : std::next(it);
    if (vals.size() < 2) throw NotLatticeSupported("fewer than two support points");

    const Rational lo = vals.begin()->first, hi = vals.rbegin()->first;
    // Smallest positive a such that the support is invariant under +-a inside
    // the window.
    Rational a;
    for (auto it = std::next(vals.begin()); it != vals.end(); ++it) {
        const Rational cand = it->first - lo;
        bool ok = true;
        for (const auto& [x, v] : vals) {
            if (x + cand <= hi && !vals.count(x + cand)) ok = false;
            if (x - cand >= lo && !vals.count(x - cand)) ok = false;
            if (!ok) break;
        }
        if (ok) {
            a = cand;
            break;
        }
    }

    std::map<Rational, std::vector<std::pair<Rational, Complex>>> cosets;
    for (const auto& [x, v] : vals) {
        Rational r = x - a * Rational(floor(x / a));
        cosets[r].push_back({x, v});
    }
    std::map<Rational, std::map<Rational, Complex>> acc;
    for (const auto& [shift, seq] : cosets) {
        const std::size_t len = seq.size();
        std::size_t period = 0;
        for (std::size_t p = 1; 2 * p <= len && !period; ++p) {
            bool ok = true;
            for (std::size_t n = 0; n + p < len && ok; ++n) ok = close(seq[n].second, seq[n + p].second, tol);
            if (ok) period = p;
        }
        if (!period) throw AperiodicCoefficients("coefficients along coset " + to_string(shift) + " are not periodic");
        const Rational x0 = seq.front().first;
        const Rational base = Rational(static_cast<long>(period)) * a;
        for (std::size_t k = 0; k < period; ++k) {
            Complex dk = 0.0;
            for (std::size_t n = 0; n < period; ++n)
                dk += seq[n].second * unit_phase(Rational(-static_cast<long>(k * n), static_cast<long>(period)));
            dk /= static_cast<double>(period);
            const Rational f = Rational(static_cast<long>(k)) / base;
            acc[shift][f] += dk * unit_phase(-f * x0);
        }
    }
    return collect(a, acc, tol);
}

}  // namespace

CanonicalForm fit_canonical_form(const AtomicDistribution& mu, double tol) {
    require_order_zero(mu);
    if (!mu.atoms.empty() && !mu.combs.empty())
        throw NotLatticeSupported("mixed finite atoms and combs");
    if (mu.atoms.empty() && mu.combs.empty()) return CanonicalForm{1, {}};
    return mu.combs.empty() ? fit_atoms(mu, tol) : fit_combs(mu, tol);
}

std::map<Rational, Complex> window_values(const AtomicDistribution& mu, const Rational& lo, const Rational& hi) {
    require_order_zero(mu);
    std::map<Rational, Complex> out;
    for (const auto& at : mu.atoms)
        if (at.location[0] >= lo && at.location[0] <= hi) out[at.location[0]] += at.coeff.materialize();
    for (const auto& c : mu.combs) {
        const Rational a = abs(c.step(0, 0));
        const Complex w = c.coeff.materialize();
        for (Integer n = -floor((c.shift[0] - lo) / a); ; ++n) {
            const Rational x = c.shift[0] + Rational(n) * a;
            if (x > hi) break;
            if (x < lo) continue;
            out[x] += w * unit_phase(c.modulation[0] * x);
        }
    }
    return out;
}

bool resynthesis_matches(const AtomicDistribution& mu, const CanonicalForm& form, const Rational& lo,
                         const Rational& hi, double tol) {
    auto prune = [tol](std::map<Rational, Complex> m) {
        for (auto it = m.begin(); it != m.end();) it = std::abs(it->second) <= tol ? m.erase(it) : std::next(it);
        return m;
    };
    auto a = prune(window_values(mu, lo, hi));
    auto b = prune(window_values(form.synthesize(), lo, hi));
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
        if (ia->first != ib->first || !close(ia->second, ib->second, tol)) return false;
    return true;
}

// ---- F_gamma ----

namespace {

void compositions(std::size_t d, int n, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (cur.size() + 1 == d) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = n; k >= 0; --k) {
        cur.push_back(k);
        compositions(d, n - k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> multi_indices(std::size_t d, int n) {
    std::vector<MultiIndex> out;
    if (d == 0 || n < 0) return out;
    MultiIndex cur;
    compositions(d, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

MultiIndexPairSet enumerate_F_gamma(const MultiIndex& gamma) {
    MultiIndexPairSet s{gamma, {}};
    const int n = total(gamma);
    MultiIndex alpha(gamma.size(), 0);
    // alpha_i ranges over [0, 2 gamma_i]; keep those with |alpha| = |gamma|.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == gamma.size()) {
            if (used != n) return;
            MultiIndex beta(gamma.size());
            for (std::size_t k = 0; k < gamma.size(); ++k) beta[k] = 2 * gamma[k] - alpha[k];
            s.pairs.push_back({alpha, beta});
            return;
        }
        for (int v = 0; v <= 2 * gamma[i] && used + v <= n; ++v) {
            alpha[i] = v;
            rec(i + 1, used + v);
        }
    };
    rec(0, 0);
    return s;
}

LemmaReport lemma_several_check(const CoefficientFamily& coeffs, std::size_t d, int n, double tol) {
    LemmaReport r;
    auto coef = [&](const MultiIndex& a) {
        auto it = coeffs.find(a);
        return it == coeffs.end() ? Complex(0.0) : it->second;
    };
    double top = 0.0;
    for (const auto& g : multi_indices(d, n)) top = std::max(top, std::abs(coef(g)));
    for (const auto& g : multi_indices(d, n)) {
        Complex sum = 0.0;
        for (const auto& [al, be] : enumerate_F_gamma(g).pairs) sum += coef(al) * std::conj(coef(be));
        r.max_condition = std::max(r.max_condition, std::abs(sum));
        ++r.conditions;
    }
    r.top_coefficients_vanish = top <= tol;
    r.all_conditions_vanish = r.max_condition <= tol * std::max(1.0, top * top);
    r.consistent = !r.all_conditions_vanish || r.top_coefficients_vanish;
    return r;
}

LemmaSearchReport lemma_random_search(std::size_t d, int n, std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    const auto idx = multi_indices(d, n);
    LemmaSearchReport r;
    for (std::size_t t = 0; t < trials; ++t) {
        CoefficientFamily f;
        // Sparse families too: each coefficient is zero with probability 1/2,
        // but at least one survives.
        std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
        const std::size_t forced = pick(rng);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const bool keep = k == forced || (rng() & 1u);
            const Complex c(g(rng), g(rng));
            if (keep) f[idx[k]] = c;
        }
        ++r.families;
        if (lemma_several_check(f, d, n).all_conditions_vanish) ++r.counterexamples;
    }
    return r;
}

LemmaSearchReport lemma_exhaustive_search(std::size_t d, int n) {
    const auto idx = multi_indices(d, n);
    const std::size_t m = idx.size();
    if (m > 13) throw std::invalid_argument("exhaustive lemma search limited to 13 coefficients");
    std::map<MultiIndex, std::size_t> pos;
    for (std::size_t k = 0; k < m; ++k) pos[idx[k]] = k;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> conds;
    for (const auto& g : idx) {
        std::vector<std::pair<std::size_t, std::size_t>> c;
        for (const auto& [al, be] : enumerate_F_gamma(g).pairs) c.push_back({pos.at(al), pos.at(be)});
        conds.push_back(std::move(c));
    }
    LemmaSearchReport r;
    std::vector<int> a(m, -1);
    std::size_t count = 1;
    for (std::size_t k = 0; k < m; ++k) count *= 3;
    for (std::size_t code = 0; code < count; ++code) {
        std::size_t c = code;
        bool nonzero = false;
        for (std::size_t k = 0; k < m; ++k) {
            a[k] = static_cast<int>(c % 3) - 1;
            c /= 3;
            nonzero = nonzero || a[k] != 0;
        }
        if (!nonzero) continue;
        ++r.families;
        bool all_zero = true;
        for (const auto& cond : conds) {
            long s = 0;
            for (const auto& [i, j] : cond) s += a[i] * a[j];
            if (s != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) ++r.counterexamples;
    }
    return r;
}

// ---- theorem harness ----

std::string to_string(HarnessVerdict v) {
    switch (v) {
        case HarnessVerdict::hypothesis_failed: return "hypothesis-failed";
        case HarnessVerdict::conclusions_hold: return "conclusions-hold";
        case HarnessVerdict::violation: return "violation";
        case HarnessVerdict::not_applicable: return "not-applicable";
    }
    return "?";
}

namespace {

bool ud_at(const SetDescriptor& s, const std::optional<Rational>& delta) {
    if (s.full_line) return false;
    if (s.kind() == SetDescriptor::Kind::lattice_union || !delta) return true;
    auto g = s.min_gap();
    return !g || *g >= *delta;
}

// mu^ is a measure on a u.d. set.
bool spectrum_ok(const AtomicDistribution& mu, const std::optional<Rational>& delta) {
    Spectrum s = fourier(mu);
    return s.is_atomic() && s.atomic_part.is_measure() && ud_at(support(s), delta);
}

}  // namespace

HarnessReport theorem_harness(const AtomicDistribution& mu, const AtomicDistribution& nu, const NamedTransform& t,
                              const std::optional<Rational>& delta) {
    HarnessReport r;
    const std::size_t d = t.map.dim();
    if (mu.dim != d || nu.dim != d) throw DimensionMismatch("harness: measure and transform dimensions differ");
    if (mu.is_zero() || nu.is_zero()) {
        r.branch = "none";
        r.note = "zero input";
        return r;
    }
    const bool same = canonicalize(mu) == canonicalize(nu);
    const RMat& inv = t.map.inverse();
    if (t.kind == TransformKind::classical && same) {
        r.branch = "classical";
    } else if (d == 1 && inv(0, 0) != 0 && inv(0, 1) != 0) {
        r.branch = "matrix";
    } else {
        r.branch = "none";
        r.note = d == 1 ? "ab = 0" : "d > 1 outside the classical auto-Wigner case";
        return r;
    }

    PhaseSpace w = matrix_wigner(t.map, mu, nu);
    SetDescriptor p1 = project(w, 1), p2 = project(w, 2);
    r.delta_A = p1.full_line ? std::optional<Rational>(Rational(0)) : p1.min_gap();
    r.delta_B = p2.full_line ? std::optional<Rational>(Rational(0)) : p2.min_gap();
    // Support is contained in p1 x p2, so the product hypothesis reduces to
    // both projections being atomic and u.d.
    r.hypothesis_product_support = w.is_resolved() && !w.terms.empty() && ud_at(p1, delta) && ud_at(p2, delta);

    r.mu_is_measure = mu.is_measure() && ud_at(support(mu), delta);
    r.nu_is_measure = nu.is_measure() && ud_at(support(nu), delta);
    r.spectra_ud = spectrum_ok(mu, delta) && spectrum_ok(nu, delta);
    bool ok = r.mu_is_measure && r.nu_is_measure && r.spectra_ud;
    if (r.branch == "classical") {
        auto a = p1.includes(support(mu));
        Spectrum s = fourier(mu);
        auto b = s.is_atomic() ? p2.includes(support(s)) : std::optional<bool>(false);
        if (a && b) r.supports_contained = *a && *b;
        if (r.supports_contained) ok = ok && *r.supports_contained;
    }
    if (!r.hypothesis_product_support)
        r.verdict = HarnessVerdict::hypothesis_failed;
    else
        r.verdict = ok ? HarnessVerdict::conclusions_hold : HarnessVerdict::violation;
    return r;
}

}  // namespace qcwig
