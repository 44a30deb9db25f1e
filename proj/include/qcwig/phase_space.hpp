#pragma once

// Objects on R^d x R^d and the operations the Wigner pipeline runs through.

#include <optional>
#include <string>
#include <vector>

#include "qcwig/fourier.hpp"

namespace qcwig {

/// Sum of lattice families on R^{2d}. Coordinates [0,d) form the first slot
/// (x), [d,2d) the second (t before the partial transform, omega after). A
/// slot is either atomic or exponential in each term.
struct PhaseSpace {
    std::size_t dim = 1;  // d
    std::vector<Term> terms;
    /// Some lattice family in the second slot was not a full coset and stayed
    /// an exponential family.
    bool unresolved_poisson = false;

    /// Every term is atomic in both slots.
    bool is_resolved() const;
    bool operator==(const PhaseSpace& o) const { return dim == o.dim && terms == o.terms; }
};

/// The fully resolved case.
using Atomic2D = PhaseSpace;

/// Invertible 2d x 2d rational map with the blocks of its inverse,
/// T^{-1} = (A B; C D).
class LinearMap2d {
public:
    static LinearMap2d from_matrix(RMat t);
    static LinearMap2d from_inverse(const RMat& inv);

    std::size_t dim() const { return d_; }
    const RMat& matrix() const { return t_; }
    const RMat& inverse() const { return inv_; }
    RMat A() const { return inv_.block(0, 0, d_, d_); }
    RMat B() const { return inv_.block(0, d_, d_, d_); }
    RMat C() const { return inv_.block(d_, 0, d_, d_); }
    RMat D() const { return inv_.block(d_, d_, d_, d_); }
    bool operator==(const LinearMap2d& o) const { return t_ == o.t_; }

private:
    RMat t_, inv_;
    std::size_t d_ = 1;
};

/// mu (x) conj(nu)
PhaseSpace tensor(const AtomicDistribution& mu, const AtomicDistribution& nu);
/// psi o T: points move to T^{-1} p, weights scale by |det T^{-1}|, derivative
/// orders recombine by the chain rule. Requires atomic slots without monomials.
PhaseSpace pullback(const LinearMap2d& t, const PhaseSpace& psi);

/// Fourier transform in the second slot. Full lattice cosets in that slot
/// resolve by Poisson summation; other atomic families become exponentials.
PhaseSpace partial_fourier_2(const PhaseSpace& psi);
PhaseSpace inverse_partial_fourier_2(const PhaseSpace& psi);
PhaseSpace partial_fourier_1(const PhaseSpace& psi);
PhaseSpace inverse_partial_fourier_1(const PhaseSpace& psi);
PhaseSpace swap_slots(const PhaseSpace& psi);

PhaseSpace normalize(PhaseSpace psi);
Complex pair(const PhaseSpace& psi, const TestFunction& phi);

/// theta + L Z^r with L in canonical Hermite form.
struct Coset {
    RVec offset;
    RMat basis;
    bool operator==(const Coset&) const = default;
};

/// Finite set, union of lattice cosets, or all of R^dim ("full line").
struct SetDescriptor {
    enum class Kind { finite, lattice_union, full_line };

    std::size_t dim = 1;
    bool full_line = false;
    std::vector<Coset> cosets;

    Kind kind() const;
    /// Exact; nullopt is +infinity. Zero for full-line descriptors.
    std::optional<Rational> min_gap() const;
    bool is_ud() const { return !full_line; }
    bool contains(const RVec& p) const;
    /// Inclusion of other in this; nullopt when other has cosets of
    /// intermediate rank that the exact test does not cover.
    std::optional<bool> includes(const SetDescriptor& other) const;
    /// Canonical, deduplicated form with cosets merged where possible.
    void simplify();
    std::string describe() const;
    bool operator==(const SetDescriptor&) const = default;
};

SetDescriptor make_descriptor(std::size_t dim, std::vector<Coset> cosets, bool full_line = false);
SetDescriptor support(const PhaseSpace& psi);
/// axis 1 is x, axis 2 is the second slot.
SetDescriptor project(const PhaseSpace& psi, int axis);
SetDescriptor support(const AtomicDistribution& mu);
SetDescriptor support(const Spectrum& s);
SetDescriptor linear_image(const RMat& s, const SetDescriptor& set);

struct ProjectionLemmaReport {
    enum class Verdict { holds, violated, hypothesis_not_met };
    Verdict verdict = Verdict::hypothesis_not_met;
    std::optional<Rational> gap;  // of the first projection of psi
    SetDescriptor before, after;
};

/// The first projection of psi and of its second partial transform agree
/// when the former is uniformly discrete at threshold delta.
ProjectionLemmaReport projection_lemma_check(const PhaseSpace& psi, const Rational& delta);

std::string to_string(ProjectionLemmaReport::Verdict v);

}  // namespace qcwig
