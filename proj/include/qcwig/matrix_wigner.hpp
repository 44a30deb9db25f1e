#pragma once

// Matrix-Wigner transforms W_T(mu,nu) = F_2((mu (x) conj nu) o T).

#include <optional>
#include <string>

#include "qcwig/wigner.hpp"

namespace qcwig {

enum class TransformKind { classical, rihaczek, ambiguity, custom };

std::string to_string(TransformKind k);
/// Throws std::invalid_argument on unknown names.
TransformKind parse_transform_kind(const std::string& name);

struct NamedTransform {
    TransformKind kind = TransformKind::custom;
    LinearMap2d map;

    /// classical: T^{-1} = (Id/2 Id/2; Id -Id); rihaczek: T = (Id 0; 0 -Id);
    /// ambiguity: T = (Id/2 Id; -Id/2 Id).
    static NamedTransform make(TransformKind kind, std::size_t d);
    static NamedTransform custom(RMat t);
};

PhaseSpace matrix_wigner(const LinearMap2d& t, const AtomicDistribution& mu, const AtomicDistribution& nu);

/// R = (Id 0; 0 -Id) (T^{-1})^t (0 Id; Id 0), so that
/// W_T(mu,nu)(x,w) = |det T|^{-1} W_R(mu^,nu^)(w,-x).
LinearMap2d fourier_side_R(const LinearMap2d& t);

/// Residual of the identity above paired against phi, for comb-type inputs.
double fourier_side_residual(const LinearMap2d& t, const AtomicDistribution& mu, const AtomicDistribution& nu,
                             const TestFunction& phi);

struct SupportPredicates {
    bool pi1_ud = false, pi2_ud = false;
    std::optional<Rational> gap1, gap2;  // nullopt: fewer than two points
    bool det_a = false, det_b = false, det_c = false, det_d = false;
    bool mu_ud_forced = false, nu_ud_forced = false;
    bool muhat_ud_forced = false, nuhat_ud_forced = false;
};

/// Which supports are forced uniformly discrete by u.d. projections of psi.
/// Lattice unions are decided exactly; finite sets use min_gap >= delta.
/// Throws IndeterminateProjection when the first projection is a full line.
SupportPredicates support_predicates(const LinearMap2d& t, const PhaseSpace& psi,
                                     const std::optional<Rational>& delta = std::nullopt);

/// Z = (Y U; V W), Z^{-1} = (E F; G H).
struct BlockDetReport {
    Rational det_y, det_u, det_v, det_w;
    Rational det_e, det_f, det_g, det_h;
    /// Y -> H, W -> E, U -> F, V -> G (nonsingular implies nonsingular).
    bool implications_hold = false;
};

BlockDetReport block_det_implications(const RMat& z);

}  // namespace qcwig
