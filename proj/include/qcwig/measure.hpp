#pragma once

// Atomic tempered distributions on R^d, d in {1,2}: finite sums of delta
// derivatives plus modulated shifted Dirac combs.

#include <optional>
#include <vector>

#include "qcwig/gauss.hpp"
#include "qcwig/term.hpp"

namespace qcwig {

using RationalPoint = RVec;

struct PointSet {
    std::vector<RationalPoint> points;

    PointSet() = default;
    /// Throws std::invalid_argument on duplicates or mixed dimensions.
    explicit PointSet(std::vector<RationalPoint> pts);
    std::size_t size() const { return points.size(); }
};

struct DeltaAtom {
    RationalPoint location;
    MultiIndex order;
    Weight coeff;

    bool operator==(const DeltaAtom&) const = default;
};

/// coeff * sum_n e^{2 pi i nu.(theta + L n)} delta_{theta + L n}
struct CombTerm {
    RMat step;  // L, d x d invertible (1x1 positive in 1D)
    RationalPoint shift;
    RationalPoint modulation;
    Weight coeff;

    bool operator==(const CombTerm&) const = default;
};

/// Unit comb sum_n delta_{a n} in 1D.
CombTerm comb(const Rational& a, const Rational& shift = 0, const Rational& modulation = 0,
              Weight coeff = Weight());

struct AtomicDistribution {
    std::size_t dim = 1;
    std::vector<DeltaAtom> atoms;
    std::vector<CombTerm> combs;
    int growth = 0;

    bool is_measure() const;
    bool is_zero() const { return atoms.empty() && combs.empty(); }
    bool comb_only() const { return atoms.empty(); }
    bool operator==(const AtomicDistribution&) const = default;

    /// Lattice-family form used by the phase-space engine.
    std::vector<Term> terms() const;

    static AtomicDistribution delta(RationalPoint p, MultiIndex order = {}, Weight c = Weight());
    static AtomicDistribution of_comb(CombTerm c);
    AtomicDistribution operator+(const AtomicDistribution& o) const;
};

/// Exact minimum pairwise sup-norm distance; nullopt encodes +infinity.
std::optional<Rational> min_gap(const PointSet& s);
bool is_uniformly_discrete(const PointSet& s, const Rational& delta);

/// Conjugate-linear in phi. The 1D overload treats phi as a sum of atoms.
Complex pair(const AtomicDistribution& mu, const TestFunction& phi);
Complex pair(const AtomicDistribution& mu, const std::vector<GaussAtom>& phi);

/// Canonical representation: comb steps in Hermite form, shifts reduced
/// modulo the lattice, modulations reduced modulo the dual lattice; atoms
/// merged and sorted.
AtomicDistribution canonicalize(AtomicDistribution mu);
CombTerm canonicalize(CombTerm c);

/// M_beta T_alpha mu, canonicalized.
AtomicDistribution translate_modulate(const AtomicDistribution& mu, const RationalPoint& alpha,
                                      const RationalPoint& beta);

/// Support points of the atoms (combs are not enumerated).
PointSet atom_support(const AtomicDistribution& mu);

}  // namespace qcwig
