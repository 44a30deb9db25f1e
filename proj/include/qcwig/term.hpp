#pragma once

// A lattice family of elementary distributions on R^D:
//
//   sum_{n in Z^k} w e^{2 pi i u.n} E(P + G n)
//
// where E(p) is, coordinate by coordinate, either a delta derivative at p_c
// (atomic mode, optionally times the monomial (2 pi i p_c)^beta) or the
// exponential (2 pi i y)^beta e^{2 pi i y p_c} (exponential mode). Finite atoms
// have k = 0. Everything that is not a coefficient is exact.

#include <vector>

#include "qcwig/gauss.hpp"
#include "qcwig/lattice.hpp"
#include "qcwig/weight.hpp"

namespace qcwig {

inline constexpr int kMaxOrder = 8;

enum class Mode { atomic, exponential };

struct Term {
    RVec offset;                // P, length D
    RMat gens;                  // G, D x k, canonical column HNF after canonicalize()
    RVec character;             // u, length k, entries in [0,1)
    Weight weight;
    MultiIndex order;           // derivative orders, atomic coordinates only
    MultiIndex monomial;        // beta
    std::vector<Mode> mode;

    std::size_t dim() const { return offset.size(); }
    std::size_t rank() const { return gens.cols(); }

    /// Single atom w * delta_p^{(order)}, all coordinates atomic.
    static Term atom(RVec point, MultiIndex order, Weight w);
    /// Lattice family with the given generators (need not be canonical).
    static Term family(RVec offset, RMat gens, RVec character, Weight w);

    /// Everything except the weight.
    bool same_shape(const Term& o) const;
    bool operator==(const Term& o) const { return same_shape(o) && weight == o.weight; }
    bool operator!=(const Term& o) const { return !(*this == o); }

    /// First nonzero row of each generator column.
    std::vector<std::size_t> pivots() const;
};

/// Brings gens into canonical HNF (adjusting the character), reduces the
/// offset at pivot rows and the character into [0,1).
void canonicalize(Term& t);

/// Strict weak order on shape, then weight; gives deterministic output order.
bool term_less(const Term& a, const Term& b);

/// Canonicalizes, drops zero weights, sorts and merges terms whose shapes and
/// exact weight parts agree.
std::vector<Term> normalize(std::vector<Term> terms);

/// <t, phi>, conjugate-linear in phi.
Complex pair(const Term& t, const TestFunction& phi);
Complex pair(const std::vector<Term>& terms, const TestFunction& phi);

/// Coordinate i of the result is coordinate perm[i] of t. Not canonicalized.
Term permute_coordinates(const Term& t, const std::vector<std::size_t>& perm);

}  // namespace qcwig
