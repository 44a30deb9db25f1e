#pragma once

// Rational lattices: Hermite normal form, sums, intersections, duals and
// coset enumeration.

#include <functional>
#include <optional>
#include <vector>

#include "qcwig/rational.hpp"

namespace qcwig {

/// Column Hermite normal form of a rational generator matrix G (n x k):
/// G * u = [h | 0] with u unimodular, h lower echelon with positive pivots and
/// entries left of each pivot reduced into [0, pivot).
struct Hnf {
    RMat h;                           // n x rank
    RMat u;                           // k x k, integer, det +-1
    std::vector<std::size_t> pivots;  // pivot row of each column of h
    std::size_t rank = 0;

    /// Integer basis of {n in Z^k : G n = 0}, as columns.
    RMat kernel() const;
};

Hnf column_hnf(const RMat& g);

/// Canonical basis of the group generated by the columns of g.
RMat lattice_basis(const RMat& g);
RMat lattice_sum(const RMat& a, const RMat& b);
/// Both arguments must have full rank.
RMat lattice_intersection(const RMat& a, const RMat& b);
/// Inverse transpose; full rank required.
RMat dual_basis(const RMat& basis);

bool is_integral(const RVec& v);
bool is_integral(const RMat& m);
/// Whether v lies in the group generated by the columns of basis.
bool in_lattice(const RMat& basis, const RVec& v);

/// Reduces offset modulo the lattice spanned by an echelon basis so that its
/// pivot coordinates land in [0, pivot). Returns the integer shift v with
/// reduced = offset - basis * v.
RVec reduce_offset(RVec& offset, const RMat& basis, const std::vector<std::size_t>& pivots);

/// Complete residue system of Z^k / M Z^k for integer M of full rank.
std::vector<RVec> coset_representatives(const RMat& m);

/// Visits every n with offset + basis*n inside the box [lo, hi] (per
/// coordinate, checked on pivot rows only, so callers filter if needed).
/// basis must be in echelon form with the given pivots.
void enumerate_box(const RVec& offset, const RMat& basis, const std::vector<std::size_t>& pivots,
                   const RVec& lo, const RVec& hi,
                   const std::function<void(const std::vector<long>&)>& visit);

/// Smallest nonzero sup-norm over offset + basis Z^r; nullopt when the coset
/// is {0}.
std::optional<Rational> min_nonzero_norm(const RVec& offset, const RMat& basis);

/// Smallest positive rational that is an integer multiple of every entry.
Rational rational_lcm(const std::vector<Rational>& values);

}  // namespace qcwig
