#include "qcwig/matrix_wigner.hpp"

#include <stdexcept>

#include "qcwig/errors.hpp"

namespace qcwig {

std::string to_string(TransformKind k) {
    switch (k) {
        case TransformKind::classical: return "classical";
        case TransformKind::rihaczek: return "rihaczek";
        case TransformKind::ambiguity: return "ambiguity";
        case TransformKind::custom: return "custom";
    }
    return "?";
}

TransformKind parse_transform_kind(const std::string& name) {
    if (name == "classical" || name == "wigner") return TransformKind::classical;
    if (name == "rihaczek") return TransformKind::rihaczek;
    if (name == "ambiguity") return TransformKind::ambiguity;
    if (name == "custom") return TransformKind::custom;
    throw std::invalid_argument("unknown transform kind '" + name + "'");
}

NamedTransform NamedTransform::make(TransformKind kind, std::size_t d) {
    RMat i = RMat::identity(d), z(d, d);
    const Rational half(1, 2);
    switch (kind) {
        case TransformKind::classical: return {kind, symmetric_map(d)};
        case TransformKind::rihaczek: return {kind, LinearMap2d::from_matrix(RMat::from_blocks(i, z, z, -i))};
        case TransformKind::ambiguity:
            return {kind, LinearMap2d::from_matrix(RMat::from_blocks(i.scaled(half), i, i.scaled(-half), i))};
        case TransformKind::custom: break;
    }
    throw std::invalid_argument("custom transforms need an explicit matrix");
}

NamedTransform NamedTransform::custom(RMat t) { return {TransformKind::custom, LinearMap2d::from_matrix(std::move(t))}; }

PhaseSpace matrix_wigner(const LinearMap2d& t, const AtomicDistribution& mu, const AtomicDistribution& nu) {
    if (mu.dim != nu.dim || t.dim() != mu.dim) throw DimensionMismatch("matrix-Wigner dimension mismatch");
    return partial_fourier_2(pullback(t, tensor(mu, nu)));
}

LinearMap2d fourier_side_R(const LinearMap2d& t) {
    const std::size_t d = t.dim();
    RMat i = RMat::identity(d), z(d, d);
    RMat flip = RMat::from_blocks(i, z, z, -i);
    RMat swap = RMat::from_blocks(z, i, i, z);
    return LinearMap2d::from_matrix(flip * t.inverse().transpose() * swap);
}

double fourier_side_residual(const LinearMap2d& t, const AtomicDistribution& mu, const AtomicDistribution& nu,
                             const TestFunction& phi) {
    LinearMap2d r = fourier_side_R(t);
    Complex lhs = pair(matrix_wigner(t, mu, nu), phi);
    Complex rhs = pair(matrix_wigner(r, fourier_atomic(mu), fourier_atomic(nu)), quarter_turn_inverse(phi)) /
                  abs(t.matrix().det()).get_d();
    return std::abs(lhs - rhs);
}

namespace {

bool projection_ud(const SetDescriptor& s, const std::optional<Rational>& gap, const std::optional<Rational>& delta) {
    if (s.full_line) return false;
    if (s.kind() == SetDescriptor::Kind::lattice_union || !delta) return true;
    return !gap || *gap >= *delta;
}

}  // namespace

SupportPredicates support_predicates(const LinearMap2d& t, const PhaseSpace& psi, const std::optional<Rational>& delta) {
    SetDescriptor p1 = project(psi, 1), p2 = project(psi, 2);
    if (p1.full_line) throw IndeterminateProjection("first projection is a full line");
    SupportPredicates r;
    r.gap1 = p1.min_gap();
    r.gap2 = p2.full_line ? std::optional<Rational>(Rational(0)) : p2.min_gap();
    r.pi1_ud = projection_ud(p1, r.gap1, delta);
    r.pi2_ud = projection_ud(p2, r.gap2, delta);
    r.det_a = t.A().det() != 0;
    r.det_b = t.B().det() != 0;
    r.det_c = t.C().det() != 0;
    r.det_d = t.D().det() != 0;
    r.mu_ud_forced = r.pi1_ud && r.det_a;
    r.nu_ud_forced = r.pi1_ud && r.det_b;
    r.nuhat_ud_forced = r.pi2_ud && r.det_a;
    r.muhat_ud_forced = r.pi2_ud && r.det_b;
    return r;
}

BlockDetReport block_det_implications(const RMat& z) {
    if (z.rows() != z.cols() || z.rows() % 2) throw std::invalid_argument("block matrix must be square of even size");
    const std::size_t d = z.rows() / 2;
    RMat zi = z.inverse();
    BlockDetReport r;
    r.det_y = z.block(0, 0, d, d).det();
    r.det_u = z.block(0, d, d, d).det();
    r.det_v = z.block(d, 0, d, d).det();
    r.det_w = z.block(d, d, d, d).det();
    r.det_e = zi.block(0, 0, d, d).det();
    r.det_f = zi.block(0, d, d, d).det();
    r.det_g = zi.block(d, 0, d, d).det();
    r.det_h = zi.block(d, d, d, d).det();
    auto implies = [](const Rational& a, const Rational& b) { return a == 0 || b != 0; };
    r.implications_hold = implies(r.det_y, r.det_h) && implies(r.det_w, r.det_e) && implies(r.det_u, r.det_f) &&
                          implies(r.det_v, r.det_g);
    return r;
}

}  // namespace qcwig
