#include "qcwig/phase_space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qcwig/errors.hpp"

namespace qcwig {

namespace {

RMat rows_of(const RMat& m, std::size_t r0, std::size_t n) { return m.block(r0, 0, n, m.cols()); }

RVec slice(const RVec& v, std::size_t first, std::size_t n) {
    return RVec(v.begin() + static_cast<long>(first), v.begin() + static_cast<long>(first + n));
}

RVec concat(const RVec& a, const RVec& b) {
    RVec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

RMat block_diag(const RMat& a, const RMat& b) {
    RMat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

bool slot_is(const Term& t, std::size_t first, std::size_t d, Mode m) {
    for (std::size_t c = first; c < first + d; ++c)
        if (t.mode[c] != m) return false;
    return true;
}

int slot_total(const MultiIndex& v, std::size_t first, std::size_t d) {
    int s = 0;
    for (std::size_t c = first; c < first + d; ++c) s += v[c];
    return s;
}

void negate_rows(Term& t, std::size_t first, std::size_t d) {
    for (std::size_t c = first; c < first + d; ++c) {
        t.offset[c] = -t.offset[c];
        for (std::size_t j = 0; j < t.rank(); ++j) t.gens(c, j) = -t.gens(c, j);
    }
}

Weight sign_weight(int n) { return Weight::rational(n % 2 ? -1 : 1); }

// Pieces of a term whose lattice splits as (x-lattice) + (second-slot
// lattice of full rank d). Each piece carries generators [G_x | G_t] in
// block form; k1 is the number of x columns.
struct Piece {
    Term term;
    std::size_t k1;
};

std::optional<std::vector<Piece>> split_full_second_slot(const Term& t, std::size_t d) {
    const std::size_t k = t.rank();
    Hnf hx = column_hnf(rows_of(t.gens, 0, d));
    if (k - hx.rank != d) return std::nullopt;
    RMat k2 = hx.kernel();
    RMat k1 = column_hnf(rows_of(t.gens, d, d)).kernel();
    RMat m = k1.hcat(k2);
    std::vector<Piece> out;
    for (const RVec& r : coset_representatives(m)) {
        Term p = t;
        p.offset = t.offset + t.gens * r;
        p.gens = t.gens * m;
        p.character = m.transpose() * t.character;
        p.weight = t.weight * Weight::unit_phase(dot(t.character, r));
        out.push_back(Piece{std::move(p), k1.cols()});
    }
    return out;
}

// Poisson summation in the second slot of a split piece. forward: atomic
// t-lattice with derivative orders -> omega-lattice with monomials; inverse:
// the mirror image.
Term poisson(const Piece& piece, std::size_t d, bool forward) {
    const Term& t = piece.term;
    const std::size_t k1 = piece.k1;
    RMat l = t.gens.block(d, k1, d, d);
    RVec c = slice(t.offset, d, d);
    RVec u2 = slice(t.character, k1, d);
    RMat linv = l.inverse();
    RMat lt = linv.transpose();
    Term o = t;
    RVec new_off, new_char;
    Rational phase_shift;
    if (forward) {
        new_off = lt * u2;
        new_char = -(linv * c);
        phase_shift = -dot(new_off, c);
    } else {
        new_off = -(lt * u2);
        new_char = linv * c;
        phase_shift = dot(c, new_off);
    }
    o.offset = concat(slice(t.offset, 0, d), new_off);
    o.gens = block_diag(t.gens.block(0, 0, d, k1), lt);
    o.character = concat(slice(t.character, 0, k1), new_char);
    o.weight = t.weight * Weight(Complex(1.0), Rational(1) / abs(l.det()), phase_shift);
    for (std::size_t c2 = d; c2 < 2 * d; ++c2) {
        if (forward) {
            o.monomial[c2] = t.order[c2];
            o.order[c2] = 0;
        } else {
            o.order[c2] = t.monomial[c2];
            o.monomial[c2] = 0;
        }
    }
    return o;
}

void forward_term(const Term& t, std::size_t d, std::vector<Term>& out, bool& unresolved) {
    if (slot_is(t, d, d, Mode::exponential)) {
        // (2 pi i t)^b e^{2 pi i v t} -> (-1)^b delta_v^{(b)}
        Term o = t;
        for (std::size_t c = d; c < 2 * d; ++c) {
            o.order[c] = t.monomial[c];
            o.monomial[c] = 0;
            o.mode[c] = Mode::atomic;
        }
        o.weight *= sign_weight(slot_total(t.monomial, d, d));
        out.push_back(std::move(o));
        return;
    }
    if (slot_total(t.monomial, d, d) != 0)
        throw std::domain_error("partial transform of an atomic slot carrying a monomial");
    if (auto pieces = split_full_second_slot(t, d)) {
        for (const auto& p : *pieces) out.push_back(poisson(p, d, true));
        return;
    }
    // delta_c^{(a)} -> (2 pi i w)^a e^{-2 pi i w c}
    Term o = t;
    negate_rows(o, d, d);
    for (std::size_t c = d; c < 2 * d; ++c) {
        o.monomial[c] = t.order[c];
        o.order[c] = 0;
        o.mode[c] = Mode::exponential;
    }
    if (!rows_of(t.gens, d, d).empty() && rows_of(t.gens, d, d).rank() > 0) unresolved = true;
    out.push_back(std::move(o));
}

void inverse_term(const Term& t, std::size_t d, std::vector<Term>& out, bool& unresolved) {
    if (slot_is(t, d, d, Mode::exponential)) {
        // (2 pi i w)^b e^{2 pi i q w} -> delta_{-q}^{(b)}
        Term o = t;
        negate_rows(o, d, d);
        for (std::size_t c = d; c < 2 * d; ++c) {
            o.order[c] = t.monomial[c];
            o.monomial[c] = 0;
            o.mode[c] = Mode::atomic;
        }
        out.push_back(std::move(o));
        return;
    }
    const int ord = slot_total(t.order, d, d), mono = slot_total(t.monomial, d, d);
    if (ord == 0) {
        if (auto pieces = split_full_second_slot(t, d)) {
            for (const auto& p : *pieces) out.push_back(poisson(p, d, false));
            return;
        }
    }
    if (mono != 0) throw std::domain_error("inverse partial transform of a monomial-weighted family that is not a full coset");
    // delta_c^{(a)} -> (-1)^a (2 pi i t)^a e^{2 pi i c t}
    Term o = t;
    for (std::size_t c = d; c < 2 * d; ++c) {
        o.monomial[c] = t.order[c];
        o.order[c] = 0;
        o.mode[c] = Mode::exponential;
    }
    o.weight *= sign_weight(ord);
    if (rows_of(t.gens, d, d).rank() > 0) unresolved = true;
    out.push_back(std::move(o));
}

std::vector<std::size_t> swap_permutation(std::size_t d) {
    std::vector<std::size_t> p(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        p[i] = d + i;
        p[d + i] = i;
    }
    return p;
}

// Chain rule: d^alpha (phi o S) = sum_gamma c_gamma (d^gamma phi) o S.
std::map<MultiIndex, Rational> chain_rule(const RMat& s, const MultiIndex& alpha) {
    const std::size_t n = alpha.size();
    std::map<MultiIndex, Rational> poly{{MultiIndex(n, 0), Rational(1)}};
    for (std::size_t i = 0; i < n; ++i)
        for (int rep = 0; rep < alpha[i]; ++rep) {
            std::map<MultiIndex, Rational> next;
            for (const auto& [mi, c] : poly)
                for (std::size_t j = 0; j < n; ++j) {
                    if (s(j, i) == 0) continue;
                    MultiIndex m = mi;
                    ++m[j];
                    next[m] += c * s(j, i);
                }
            poly = std::move(next);
        }
    std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
    return poly;
}

}  // namespace

bool PhaseSpace::is_resolved() const {
    for (const auto& t : terms)
        for (Mode m : t.mode)
            if (m != Mode::atomic) return false;
    return true;
}

LinearMap2d LinearMap2d::from_matrix(RMat t) {
    if (t.rows() != t.cols() || t.rows() % 2 != 0 || t.rows() == 0)
        throw std::invalid_argument("transform must be a square matrix of even size");
    LinearMap2d m;
    m.inv_ = t.inverse();
    m.t_ = std::move(t);
    m.d_ = m.t_.rows() / 2;
    return m;
}

LinearMap2d LinearMap2d::from_inverse(const RMat& inv) { return from_matrix(inv.inverse()); }

PhaseSpace normalize(PhaseSpace psi) {
    psi.terms = normalize(std::move(psi.terms));
    return psi;
}

PhaseSpace tensor(const AtomicDistribution& mu, const AtomicDistribution& nu) {
    if (mu.dim != nu.dim) throw DimensionMismatch("tensor of distributions of different dimension");
    PhaseSpace out;
    out.dim = mu.dim;
    const auto a = mu.terms();
    const auto b = nu.terms();
    for (const auto& s : a)
        for (const auto& t : b) {
            Term p;
            p.offset = concat(s.offset, t.offset);
            p.gens = block_diag(s.gens, t.gens);
            p.character = concat(s.character, -t.character);
            p.weight = s.weight * t.weight.conj();
            p.order = s.order;
            p.order.insert(p.order.end(), t.order.begin(), t.order.end());
            p.monomial = s.monomial;
            p.monomial.insert(p.monomial.end(), t.monomial.begin(), t.monomial.end());
            p.mode = s.mode;
            p.mode.insert(p.mode.end(), t.mode.begin(), t.mode.end());
            out.terms.push_back(std::move(p));
        }
    return normalize(std::move(out));
}

PhaseSpace pullback(const LinearMap2d& tm, const PhaseSpace& psi) {
    if (tm.dim() != psi.dim) throw DimensionMismatch("transform dimension mismatch");
    const RMat& s = tm.inverse();
    const Rational jac = abs(s.det());
    PhaseSpace out;
    out.dim = psi.dim;
    out.unresolved_poisson = psi.unresolved_poisson;
    for (const auto& t : psi.terms) {
        for (Mode m : t.mode)
            if (m != Mode::atomic) throw std::domain_error("pullback of a non-atomic term");
        if (total(t.monomial) != 0) throw std::domain_error("pullback of a monomial-weighted term");
        for (const auto& [gamma, c] : chain_rule(s, t.order)) {
            Term o = t;
            o.offset = s * t.offset;
            o.gens = s * t.gens;
            o.order = gamma;
            o.weight = t.weight * Weight::rational(jac * c);
            out.terms.push_back(std::move(o));
        }
    }
    return normalize(std::move(out));
}

PhaseSpace partial_fourier_2(const PhaseSpace& psi) {
    PhaseSpace out;
    out.dim = psi.dim;
    out.unresolved_poisson = psi.unresolved_poisson;
    for (const auto& t : psi.terms) forward_term(t, psi.dim, out.terms, out.unresolved_poisson);
    return normalize(std::move(out));
}

PhaseSpace inverse_partial_fourier_2(const PhaseSpace& psi) {
    PhaseSpace out;
    out.dim = psi.dim;
    bool unresolved = false;
    for (const auto& t : psi.terms) inverse_term(t, psi.dim, out.terms, unresolved);
    out.unresolved_poisson = false;
    return normalize(std::move(out));
}

PhaseSpace swap_slots(const PhaseSpace& psi) {
    PhaseSpace out = psi;
    const auto perm = swap_permutation(psi.dim);
    for (auto& t : out.terms) t = permute_coordinates(t, perm);
    return normalize(std::move(out));
}

PhaseSpace partial_fourier_1(const PhaseSpace& psi) { return swap_slots(partial_fourier_2(swap_slots(psi))); }

PhaseSpace inverse_partial_fourier_1(const PhaseSpace& psi) {
    return swap_slots(inverse_partial_fourier_2(swap_slots(psi)));
}

Complex pair(const PhaseSpace& psi, const TestFunction& phi) { return pair(psi.terms, phi); }

// --- set descriptors -------------------------------------------------------

namespace {

Coset make_coset(RVec offset, const RMat& gens) {
    Hnf h = column_hnf(gens);
    reduce_offset(offset, h.h, h.pivots);
    return Coset{std::move(offset), h.h};
}

bool coset_less(const Coset& a, const Coset& b) {
    if (a.basis.cols() != b.basis.cols()) return a.basis.cols() > b.basis.cols();
    if (a.basis != b.basis) return lex_less(a.basis, b.basis);
    return lex_less(a.offset, b.offset);
}

// Coset bases are stored in Hermite normal form, so their columns are independent.
bool coset_contains(const Coset& c, const RVec& p) {
    if (c.basis.cols() == 0) return c.offset == p;
    auto x = solve_in_span(c.basis, p - c.offset);
    return x && is_integral(*x);
}

}  // namespace

SetDescriptor make_descriptor(std::size_t dim, std::vector<Coset> cosets, bool full_line) {
    SetDescriptor s;
    s.dim = dim;
    s.full_line = full_line;
    for (auto& c : cosets) s.cosets.push_back(make_coset(std::move(c.offset), c.basis));
    s.simplify();
    return s;
}

SetDescriptor::Kind SetDescriptor::kind() const {
    if (full_line) return Kind::full_line;
    for (const auto& c : cosets)
        if (c.basis.cols() > 0) return Kind::lattice_union;
    return Kind::finite;
}

std::optional<Rational> SetDescriptor::min_gap() const {
    if (full_line) return Rational(0);
    std::optional<Rational> best;
    for (std::size_t i = 0; i < cosets.size(); ++i)
        for (std::size_t j = i; j < cosets.size(); ++j) {
            RMat lat = lattice_sum(cosets[i].basis.hcat(RMat(dim, 0)), cosets[j].basis.hcat(RMat(dim, 0)));
            auto g = min_nonzero_norm(cosets[i].offset - cosets[j].offset, lat);
            if (g && (!best || *g < *best)) best = g;
        }
    return best;
}

bool SetDescriptor::contains(const RVec& p) const {
    if (full_line) return true;
    return std::any_of(cosets.begin(), cosets.end(), [&](const Coset& c) { return coset_contains(c, p); });
}

std::optional<bool> SetDescriptor::includes(const SetDescriptor& other) const {
    if (full_line) return true;
    if (other.full_line) return false;
    std::vector<const Coset*> full;
    for (const auto& c : cosets)
        if (c.basis.cols() == dim) full.push_back(&c);
    for (const auto& oc : other.cosets) {
        const std::size_t r = oc.basis.cols();
        if (r == 0) {
            if (!contains(oc.offset)) return false;
            continue;
        }
        if (r != dim) return std::nullopt;
        // Split oc into cosets of the common refinement; each piece is either
        // inside a full-rank coset of this set or disjoint from all of them.
        RMat m = oc.basis;
        for (const Coset* c : full) m = lattice_intersection(m, c->basis);
        RMat index = oc.basis.inverse() * m;
        for (const RVec& rep : coset_representatives(index)) {
            RVec p = oc.offset + oc.basis * rep;
            bool inside = std::any_of(full.begin(), full.end(), [&](const Coset* c) { return coset_contains(*c, p); });
            if (!inside) return false;
        }
    }
    return true;
}

void SetDescriptor::simplify() {
    std::vector<Coset> cs;
    for (auto& c : cosets) cs.push_back(make_coset(c.offset, c.basis));
    std::sort(cs.begin(), cs.end(), coset_less);
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

    // Merge same-lattice cosets whose offsets form a coset of a finite group.
    // Offsets are kept reduced modulo their lattice, so membership in a
    // union of cosets of one lattice is a set lookup.
    auto vec_less = [](const RVec& a, const RVec& b) { return lex_less(a, b); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < cs.size() && !changed; ++i) {
            if (cs[i].basis.cols() != dim) continue;
            std::vector<std::size_t> group;
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (cs[j].basis == cs[i].basis) group.push_back(j);
            if (group.size() < 2 || group[0] != i) continue;
            const Hnf h = column_hnf(cs[i].basis);
            auto reduced = [&](RVec v) {
                reduce_offset(v, h.h, h.pivots);
                return v;
            };
            const RVec& o0 = cs[group[0]].offset;
            std::vector<RVec> diffs;
            std::set<RVec, decltype(vec_less)> members(vec_less);
            for (std::size_t j : group) {
                diffs.push_back(reduced(cs[j].offset - o0));
                members.insert(diffs.back());
            }
            bool closed = true;
            for (std::size_t a = 0; a < diffs.size() && closed; ++a)
                for (std::size_t b = a; b < diffs.size() && closed; ++b)
                    closed = members.count(reduced(diffs[a] + diffs[b])) > 0;
            if (!closed) continue;
            RMat gens = cs[i].basis;
            for (const auto& v : diffs) gens = gens.hcat(RMat::from_columns({v}, dim));
            Coset merged = make_coset(o0, gens);
            std::vector<Coset> next;
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (!std::binary_search(group.begin(), group.end(), j)) next.push_back(cs[j]);
            next.push_back(merged);
            cs = std::move(next);
            changed = true;
        }
    }
    // Drop cosets covered by a single other coset.
    std::vector<Coset> kept;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < cs.size() && !covered; ++j) {
            if (i == j || cs[j].basis.cols() < cs[i].basis.cols()) continue;
            if (!coset_contains(cs[j], cs[i].offset)) continue;
            bool lattice_inside = true;
            for (std::size_t c = 0; c < cs[i].basis.cols(); ++c)
                if (!in_lattice(cs[j].basis, cs[i].basis.column(c))) lattice_inside = false;
            if (lattice_inside && !(cs[j] == cs[i])) covered = true;
        }
        if (!covered) kept.push_back(cs[i]);
    }
    std::sort(kept.begin(), kept.end(), coset_less);
    cosets = std::move(kept);
}

std::string SetDescriptor::describe() const {
    if (full_line) return "full line";
    std::ostringstream os;
    os << (kind() == Kind::finite ? "finite" : "lattice union") << " {";
    for (std::size_t i = 0; i < cosets.size(); ++i) {
        if (i) os << ", ";
        const auto& c = cosets[i];
        os << "(";
        for (std::size_t k = 0; k < c.offset.size(); ++k) os << (k ? "," : "") << to_string(c.offset[k]);
        os << ")";
        for (std::size_t j = 0; j < c.basis.cols(); ++j) {
            os << " + Z(";
            for (std::size_t k = 0; k < c.basis.rows(); ++k) os << (k ? "," : "") << to_string(c.basis(k, j));
            os << ")";
        }
    }
    os << "}";
    return os.str();
}

SetDescriptor support(const PhaseSpace& psi) {
    std::vector<Coset> cs;
    bool line = false;
    for (const auto& t : psi.terms) {
        if (t.weight.is_zero()) continue;
        if (!slot_is(t, 0, 2 * psi.dim, Mode::atomic)) {
            line = true;
            continue;
        }
        cs.push_back(Coset{t.offset, t.gens});
    }
    return make_descriptor(2 * psi.dim, std::move(cs), line);
}

SetDescriptor project(const PhaseSpace& psi, int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("projection axis must be 1 or 2");
    const std::size_t d = psi.dim, first = axis == 1 ? 0 : d;
    std::vector<Coset> cs;
    bool line = false;
    for (const auto& t : psi.terms) {
        if (t.weight.is_zero()) continue;
        if (!slot_is(t, first, d, Mode::atomic)) {
            line = true;
            continue;
        }
        cs.push_back(Coset{slice(t.offset, first, d), rows_of(t.gens, first, d)});
    }
    return make_descriptor(d, std::move(cs), line);
}

SetDescriptor support(const AtomicDistribution& mu) {
    std::vector<Coset> cs;
    for (const auto& t : mu.terms())
        if (!t.weight.is_zero()) cs.push_back(Coset{t.offset, t.gens});
    return make_descriptor(mu.dim, std::move(cs));
}

SetDescriptor support(const Spectrum& s) {
    SetDescriptor d = support(s.atomic_part);
    if (!s.exponentials.empty()) d.full_line = true;
    return d;
}

SetDescriptor linear_image(const RMat& s, const SetDescriptor& set) {
    std::vector<Coset> cs;
    for (const auto& c : set.cosets) cs.push_back(Coset{s * c.offset, s * c.basis});
    return make_descriptor(set.dim, std::move(cs), set.full_line);
}

ProjectionLemmaReport projection_lemma_check(const PhaseSpace& psi, const Rational& delta) {
    ProjectionLemmaReport r;
    r.before = project(psi, 1);
    if (r.before.full_line) throw IndeterminateProjection("first projection is a full line");
    r.gap = r.before.min_gap();
    if (r.gap && *r.gap < delta) {
        r.verdict = ProjectionLemmaReport::Verdict::hypothesis_not_met;
        return r;
    }
    r.after = project(partial_fourier_2(psi), 1);
    auto fwd = r.before.includes(r.after);
    auto back = r.after.includes(r.before);
    bool same = (fwd && back) ? (*fwd && *back) : r.before == r.after;
    r.verdict = same ? ProjectionLemmaReport::Verdict::holds : ProjectionLemmaReport::Verdict::violated;
    return r;
}

std::string to_string(ProjectionLemmaReport::Verdict v) {
    switch (v) {
        case ProjectionLemmaReport::Verdict::holds: return "holds";
        case ProjectionLemmaReport::Verdict::violated: return "violated";
        case ProjectionLemmaReport::Verdict::hypothesis_not_met: return "hypothesis_not_met";
    }
    return "?";
}

}  // namespace qcwig
