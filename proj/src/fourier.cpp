#include "qcwig/fourier.hpp"

#include "qcwig/errors.hpp"

namespace qcwig {

Lattice dual(const Lattice& l) { return Lattice{dual_basis(l.basis)}; }

const AtomicDistribution& Spectrum::atomic() const {
    if (!is_atomic()) throw NonAtomicSpectrum("Fourier transform of finitely many atoms is not atomic");
    return atomic_part;
}

std::vector<Term> Spectrum::terms() const {
    std::vector<Term> out = atomic_part.terms();
    out.insert(out.end(), exponentials.begin(), exponentials.end());
    return out;
}

CombTerm fourier(const CombTerm& c) {
    // Poisson summation: the comb over theta + L Z^d with coordinate
    // modulation nu becomes a comb over nu + L^{-T} Z^d modulated by -theta.
    Rational det = abs(c.step.det());
    Weight w = c.coeff * Weight(Complex(1.0), Rational(1) / det, dot(c.modulation, c.shift));
    return canonicalize(CombTerm{dual_basis(c.step), c.modulation, -c.shift, w});
}

Spectrum fourier(const AtomicDistribution& mu) {
    Spectrum s;
    s.dim = mu.dim;
    s.atomic_part.dim = mu.dim;
    for (const auto& c : mu.combs) s.atomic_part.combs.push_back(fourier(c));
    s.atomic_part = canonicalize(std::move(s.atomic_part));
    for (const auto& a : mu.atoms) {
        // (2 pi i xi)^alpha e^{-2 pi i xi.r}
        Term t = Term::atom(-a.location, MultiIndex(mu.dim, 0), a.coeff);
        t.mode.assign(mu.dim, Mode::exponential);
        t.monomial = a.order.empty() ? MultiIndex(mu.dim, 0) : a.order;
        s.exponentials.push_back(std::move(t));
    }
    return s;
}

AtomicDistribution fourier_atomic(const AtomicDistribution& mu) { return fourier(mu).atomic(); }

Complex pair(const Spectrum& s, const TestFunction& phi) { return pair(s.terms(), phi); }

AtomicDistribution reflect(const AtomicDistribution& mu) {
    AtomicDistribution out = mu;
    for (auto& a : out.atoms) {
        a.location = -a.location;
        if (total(a.order) % 2) a.coeff = a.coeff * Weight::rational(-1);
    }
    for (auto& c : out.combs) {
        c.shift = -c.shift;
        c.modulation = -c.modulation;
    }
    return canonicalize(std::move(out));
}

}  // namespace qcwig
