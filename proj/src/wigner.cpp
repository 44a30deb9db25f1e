#include "qcwig/wigner.hpp"

#include <cmath>

#include "qcwig/errors.hpp"

namespace qcwig {

namespace {

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct AtomView {
    std::vector<double> point;
    MultiIndex order;
    Complex coeff;
};

std::vector<AtomView> finite_atoms(const AtomicDistribution& mu) {
    if (!mu.combs.empty()) throw std::invalid_argument("pairing expansion needs finitely many atoms");
    std::vector<AtomView> out;
    for (const auto& a : mu.atoms) {
        MultiIndex ord = a.order.empty() ? MultiIndex(mu.dim, 0) : a.order;
        if (total(ord) > kMaxOrder) throw OrderCapExceeded("derivative order exceeds cap");
        out.push_back(AtomView{to_double(a.location), ord, a.coeff.materialize()});
    }
    return out;
}

}  // namespace

LinearMap2d symmetric_map(std::size_t d) {
    RMat i = RMat::identity(d);
    return LinearMap2d::from_inverse(RMat::from_blocks(i.scaled(Rational(1, 2)), i.scaled(Rational(1, 2)), i, -i));
}

PhaseSpace cross_wigner(const AtomicDistribution& mu, const AtomicDistribution& nu) {
    if (mu.dim != nu.dim) throw DimensionMismatch("cross-Wigner of distributions of different dimension");
    if (mu.dim != 1 && mu.dim != 2) throw DimensionMismatch("exact engine supports d = 1, 2");
    return partial_fourier_2(pullback(symmetric_map(mu.dim), tensor(mu, nu)));
}

PhaseSpace wigner(const AtomicDistribution& mu) { return cross_wigner(mu, mu); }

Atomic2D wigner_comb_closed_form(const Rational& a) {
    if (a <= 0) throw std::invalid_argument("comb step must be positive");
    const Rational c = Rational(1) / (2 * a);
    RMat g{{a, 0}, {0, c}};
    PhaseSpace w;
    w.dim = 1;
    w.terms.push_back(Term::family(RVec{0, 0}, g, RVec{0, 0}, Weight::rational(c)));
    w.terms.push_back(Term::family(RVec{a / 2, 0}, g, RVec{0, Rational(1, 2)}, Weight::rational(c)));
    return normalize(std::move(w));
}

LambdaCoeff LambdaCoeff::make(int j, int k, int l, int m) {
    if (l < 0 || l > j || m < 0 || m > k) throw std::invalid_argument("lambda indices out of range");
    Rational v(binomial(j, l) * binomial(k, m));
    if ((k - m) % 2) v = -v;
    v /= Rational(Integer(1) << static_cast<unsigned>(l + m));
    return LambdaCoeff{j, k, l, m, v};
}

Complex pairing_expansion(const AtomicDistribution& mu, const AtomicDistribution& nu, const TestFunction& phi1,
                          const TestFunction& phi2) {
    if (mu.dim != nu.dim) throw DimensionMismatch("dimension mismatch");
    const std::size_t d = mu.dim;
    const auto us = finite_atoms(mu);   // paired with the u slot, unconjugated
    const auto vs = finite_atoms(nu);   // v slot, conjugated
    Complex sum(0.0);
    for (const auto& f1 : phi1.terms)
        for (const auto& f2 : phi2.terms) {
            std::vector<GaussAtom> g2hat;
            for (const auto& g : f2.factors) g2hat.push_back(g.fourier());
            const Complex pre = std::conj(f1.coeff) * std::conj(f2.coeff);
            for (const auto& s : us)
                for (const auto& r : vs) {
                    const int jk = total(r.order) + total(s.order);
                    Complex prod = (jk % 2 ? -1.0 : 1.0) * s.coeff * std::conj(r.coeff);
                    for (std::size_t i = 0; i < d && prod != Complex(0.0); ++i) {
                        const int j = r.order[i], k = s.order[i];
                        const double mid = 0.5 * (r.point[i] + s.point[i]);
                        const double diff = r.point[i] - s.point[i];
                        Complex inner(0.0);
                        for (int l = 0; l <= j; ++l)
                            for (int m = 0; m <= k; ++m) {
                                double lam = LambdaCoeff::make(j, k, l, m).value.get_d();
                                inner += lam * std::conj(f1.factors[i].derivative(l + m, mid)) *
                                         std::conj(g2hat[i].derivative(j + k - l - m, diff));
                            }
                        prod *= inner;
                    }
                    sum += pre * prod;
                }
        }
    return sum;
}

Complex pairing_expansion(const AtomicDistribution& mu, const TestFunction& phi1, const TestFunction& phi2) {
    return pairing_expansion(mu, mu, phi1, phi2);
}

TestFunction phase_space_shift(const TestFunction& phi, const RVec& alpha, const RVec& beta) {
    const std::size_t d = alpha.size();
    TestFunction out = phi;
    for (auto& s : out.terms)
        for (std::size_t c = 0; c < 2 * d; ++c)
            s.factors[c] = s.factors[c].advanced(c < d ? alpha[c] : beta[c - d]);
    return out;
}

TestFunction quarter_turn(const TestFunction& phi) {
    TestFunction out = phi;
    for (auto& s : out.terms) {
        const std::size_t d = s.factors.size() / 2;
        std::vector<GaussAtom> f(2 * d);
        for (std::size_t c = 0; c < d; ++c) {
            f[c] = s.factors[d + c].reflect();
            f[d + c] = s.factors[c];
        }
        s.factors = std::move(f);
    }
    return out;
}

TestFunction quarter_turn_inverse(const TestFunction& phi) {
    TestFunction out = phi;
    for (auto& s : out.terms) {
        const std::size_t d = s.factors.size() / 2;
        std::vector<GaussAtom> f(2 * d);
        for (std::size_t c = 0; c < d; ++c) {
            f[c] = s.factors[d + c];
            f[d + c] = s.factors[c].reflect();
        }
        s.factors = std::move(f);
    }
    return out;
}

double covariance_check(const AtomicDistribution& mu, const RVec& alpha, const RVec& beta, const TestFunction& phi) {
    Complex lhs = pair(wigner(translate_modulate(mu, alpha, beta)), phi);
    Complex rhs = pair(wigner(mu), phase_space_shift(phi, alpha, beta));
    return std::abs(lhs - rhs);
}

TestFunction gaussian_wigner(const SepGauss& phi, const SepGauss& psi) {
    const std::size_t d = phi.factors.size();
    if (psi.factors.size() != d) throw DimensionMismatch("Gaussian dimension mismatch");
    SepGauss w;
    w.coeff = phi.coeff * std::conj(psi.coeff);
    w.factors.resize(2 * d);
    for (std::size_t c = 0; c < d; ++c) {
        const GaussAtom& f = phi.factors[c];
        const GaussAtom& g = psi.factors[c];
        if (f.width != g.width) throw std::invalid_argument("closed-form Gaussian Wigner needs equal widths");
        const double s = f.width;
        const Rational abar = (f.shift + g.shift) / 2, bbar = (f.modulation + g.modulation) / 2;
        const Rational delta = f.shift - g.shift;
        w.coeff *= f.coeff * std::conj(g.coeff) * std::sqrt(2.0) * s * unit_phase(delta * bbar);
        w.factors[c] = GaussAtom(abar, f.modulation - g.modulation, s / std::sqrt(2.0));
        w.factors[d + c] = GaussAtom(bbar, -delta, 1.0 / (s * std::sqrt(2.0)));
    }
    TestFunction out;
    out.terms.push_back(std::move(w));
    return out;
}

TestFunction gaussian_wigner(const GaussAtom& phi, const GaussAtom& psi) {
    return gaussian_wigner(SepGauss{Complex(1.0), {phi}}, SepGauss{Complex(1.0), {psi}});
}

double moyal_check(const AtomicDistribution& mu, const AtomicDistribution& nu, const SepGauss& phi,
                   const SepGauss& psi) {
    TestFunction fphi, fpsi;
    fphi.terms.push_back(phi);
    fpsi.terms.push_back(psi);
    Complex lhs = pair(cross_wigner(mu, nu), gaussian_wigner(phi, psi));
    Complex rhs = pair(mu, fphi) * std::conj(pair(nu, fpsi));
    return std::abs(lhs - rhs);
}

double fourier_flip_check(const AtomicDistribution& mu, const TestFunction& phi) {
    AtomicDistribution muhat = fourier_atomic(mu);
    Complex lhs = pair(wigner(muhat), phi);
    Complex rhs = pair(wigner(mu), quarter_turn(phi));
    return std::abs(lhs - rhs);
}

}  // namespace qcwig
