#pragma once

// Cross-Wigner distribution of atomic distributions and the identities it
// satisfies, evaluated against Gaussian test functions.

#include "qcwig/phase_space.hpp"

namespace qcwig {

/// The symmetric coordinate change with T^{-1} = (Id/2 Id/2; Id -Id).
LinearMap2d symmetric_map(std::size_t d);

/// F_2 of the pullback of mu (x) conj(nu) under the symmetric map.
PhaseSpace cross_wigner(const AtomicDistribution& mu, const AtomicDistribution& nu);
PhaseSpace wigner(const AtomicDistribution& mu);

/// W of the unit comb on aZ written down directly:
///   1/(2a) sum_{l in aZ} delta_l (x) sum_{m in Z} delta_{m/(2a)}
/// + 1/(2a) sum_{l in aZ} delta_{l+a/2} (x) sum_{m in Z} (-1)^m delta_{m/(2a)}
Atomic2D wigner_comb_closed_form(const Rational& a);

/// C(j,l) C(k,m) (-1)^{k-m} 2^{-(l+m)}
struct LambdaCoeff {
    int j = 0, k = 0, l = 0, m = 0;
    Rational value;

    static LambdaCoeff make(int j, int k, int l, int m);
};

/// <W(mu,nu), phi1 (x) phi2> from the explicit double series over atom pairs.
/// Finite atoms only.
Complex pairing_expansion(const AtomicDistribution& mu, const AtomicDistribution& nu,
                          const TestFunction& phi1, const TestFunction& phi2);
Complex pairing_expansion(const AtomicDistribution& mu, const TestFunction& phi1, const TestFunction& phi2);

/// phi(. + alpha, . + beta) for phi on R^{2d}.
TestFunction phase_space_shift(const TestFunction& phi, const RVec& alpha, const RVec& beta);
/// (x,w) -> phi(w, -x)
TestFunction quarter_turn(const TestFunction& phi);
/// (x,w) -> phi(-w, x)
TestFunction quarter_turn_inverse(const TestFunction& phi);

/// |<W(M_b T_a mu), phi> - <W(mu), phi(.+a, .+b)>|
double covariance_check(const AtomicDistribution& mu, const RVec& alpha, const RVec& beta,
                        const TestFunction& phi);

/// Closed-form W(phi, psi) of separable Gaussians whose factors share widths
/// coordinate by coordinate.
TestFunction gaussian_wigner(const SepGauss& phi, const SepGauss& psi);
TestFunction gaussian_wigner(const GaussAtom& phi, const GaussAtom& psi);

/// |<W(mu,nu), W(phi,psi)> - <mu,phi> conj(<nu,psi>)|
double moyal_check(const AtomicDistribution& mu, const AtomicDistribution& nu, const SepGauss& phi,
                   const SepGauss& psi);

/// |<W(mu^), phi> - <W(mu), phi(w, -x)>| for comb-type mu.
double fourier_flip_check(const AtomicDistribution& mu, const TestFunction& phi);

}  // namespace qcwig
