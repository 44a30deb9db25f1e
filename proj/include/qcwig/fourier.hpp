#pragma once

// Lattices, duals and exact Fourier transforms of comb-type distributions.

#include "qcwig/measure.hpp"

namespace qcwig {

struct Lattice {
    RMat basis;  // invertible d x d
    bool operator==(const Lattice&) const = default;
};

/// Basis L^{-T}.
Lattice dual(const Lattice& l);

/// Fourier transform of a distribution. Combs map to combs; finite atoms map
/// to exponential sums that are only usable through pairing.
struct Spectrum {
    std::size_t dim = 1;
    AtomicDistribution atomic_part;  // transformed combs
    std::vector<Term> exponentials;  // transformed atoms

    bool is_atomic() const { return exponentials.empty(); }
    /// Throws NonAtomicSpectrum when exponential terms are present.
    const AtomicDistribution& atomic() const;
    std::vector<Term> terms() const;
};

CombTerm fourier(const CombTerm& c);
Spectrum fourier(const AtomicDistribution& mu);
/// Fourier transform demanded as an atomic distribution.
AtomicDistribution fourier_atomic(const AtomicDistribution& mu);

Complex pair(const Spectrum& s, const TestFunction& phi);

/// mu(-x)
AtomicDistribution reflect(const AtomicDistribution& mu);

}  // namespace qcwig
