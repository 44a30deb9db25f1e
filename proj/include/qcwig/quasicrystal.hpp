#pragma once

// Structure checks around Fourier quasicrystals: midpoint closure,
// half-sumsets, canonical comb forms, the F_gamma combinatorics and the
// theorem harness.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcwig/matrix_wigner.hpp"

namespace qcwig {

/// (A + A)/2 for a coset union A.
SetDescriptor half_sumset(const SetDescriptor& a);

/// Every x-point of W lies in (A + A)/2. Throws std::domain_error when the
/// inclusion involves cosets of intermediate rank.
bool midpoint_closure_check(const PhaseSpace& w, const SetDescriptor& a);

/// Exact min_gap of {(r+s)/2 : r, s in A}; nullopt when A has one point.
std::optional<Rational> half_sumset_min_gap(const PointSet& a);

/// {n + 1/|n| : 1 <= |n| <= k}
PointSet reciprocal_perturbed_integers(int k);

struct TrigTerm {
    Rational frequency;
    Complex coeff;
};

struct CosetPolynomial {
    Rational shift;
    std::vector<TrigTerm> terms;
};

/// mu = sum_j P_j(x) sum_{l in aZ + theta_j} delta_l
struct CanonicalForm {
    Rational step;
    std::vector<CosetPolynomial> cosets;

    /// The form written back as comb terms.
    AtomicDistribution synthesize() const;
};

/// 1D measures on finitely many cosets of a lattice with periodic
/// coefficients along each coset: comb sums, or atoms read as a window of
/// such a measure. Throws NotLatticeSupported / AperiodicCoefficients.
CanonicalForm fit_canonical_form(const AtomicDistribution& mu, double tol = 1e-12);

/// Atom values of mu on [lo, hi], combs enumerated (1D).
std::map<Rational, Complex> window_values(const AtomicDistribution& mu, const Rational& lo, const Rational& hi);

/// Resynthesis agrees with mu point by point on [lo, hi] (within tol on the
/// complex amplitudes; the point sets must agree exactly).
bool resynthesis_matches(const AtomicDistribution& mu, const CanonicalForm& form, const Rational& lo,
                         const Rational& hi, double tol = 1e-12);

struct MultiIndexPairSet {
    MultiIndex gamma;
    std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
};

/// All multi-indices of length d and total n, in lexicographic order.
std::vector<MultiIndex> multi_indices(std::size_t d, int n);

/// {(alpha, beta) : |alpha| = |beta| = |gamma|, alpha + beta = 2 gamma}
MultiIndexPairSet enumerate_F_gamma(const MultiIndex& gamma);

using CoefficientFamily = std::map<MultiIndex, Complex>;

struct LemmaReport {
    std::size_t conditions = 0;
    double max_condition = 0.0;       // max |sum_{F_gamma} a^alpha conj(a^beta)|
    bool all_conditions_vanish = false;
    bool top_coefficients_vanish = false;
    /// The implication "all conditions vanish => a^gamma = 0 for |gamma| = N".
    bool consistent = false;
};

LemmaReport lemma_several_check(const CoefficientFamily& coeffs, std::size_t d, int n, double tol = 1e-12);

struct LemmaSearchReport {
    std::size_t families = 0;
    /// Nonzero families that satisfy every condition.
    std::size_t counterexamples = 0;
};

LemmaSearchReport lemma_random_search(std::size_t d, int n, std::size_t trials, std::uint64_t seed);
/// All families with entries in {-1, 0, 1}, exact integer arithmetic.
LemmaSearchReport lemma_exhaustive_search(std::size_t d, int n);

enum class HarnessVerdict { hypothesis_failed, conclusions_hold, violation, not_applicable };
std::string to_string(HarnessVerdict v);

struct HarnessReport {
    std::string branch;  // "classical", "matrix" or "none"
    bool hypothesis_product_support = false;
    std::optional<Rational> delta_A, delta_B;  // nullopt: +infinity
    bool mu_is_measure = false, nu_is_measure = false;
    bool spectra_ud = false;
    std::optional<bool> supports_contained;  // classical branch only
    HarnessVerdict verdict = HarnessVerdict::not_applicable;
    std::string note;
};

/// Computes W_T(mu,nu) and, when its support is a product of u.d. sets,
/// checks the measure and spectrum conclusions.
HarnessReport theorem_harness(const AtomicDistribution& mu, const AtomicDistribution& nu, const NamedTransform& t,
                              const std::optional<Rational>& delta = std::nullopt);

}  // namespace qcwig
