#include <doctest.h>

#include "helpers.hpp"

using namespace qcwig;
using namespace qcwig::test;

TEST_CASE("named transforms") {
    const auto c = NamedTransform::make(TransformKind::classical, 1);
    CHECK(c.map.inverse() == RMat{{Rational(1, 2), Rational(1, 2)}, {1, -1}});
    const auto r = NamedTransform::make(TransformKind::rihaczek, 1);
    CHECK(r.map.matrix() == RMat{{1, 0}, {0, -1}});
    const auto a = NamedTransform::make(TransformKind::ambiguity, 1);
    CHECK(a.map.matrix() == RMat{{Rational(1, 2), 1}, {Rational(-1, 2), 1}});
    CHECK(parse_transform_kind("wigner") == TransformKind::classical);
    CHECK_THROWS_AS(parse_transform_kind("spectrogram"), std::invalid_argument);
}

TEST_CASE("classical kind specializes to the cross-Wigner") {
    const auto t = NamedTransform::make(TransformKind::classical, 1).map;
    const auto mu = comb_of(1), nu = comb_of(Rational(1, 2), Rational(1, 4));
    CHECK(matrix_wigner(t, mu, nu) == cross_wigner(mu, nu));
    CHECK(matrix_wigner(t, mu, mu) == normalize(wigner_comb_closed_form(1)));
    const auto d = AtomicDistribution::delta({Rational(1, 3)}, {1});
    CHECK(matrix_wigner(t, d, AtomicDistribution::delta({1})) == cross_wigner(d, AtomicDistribution::delta({1})));
}

TEST_CASE("Rihaczek factorization") {
    const auto t = NamedTransform::make(TransformKind::rihaczek, 1).map;
    const GaussAtom g1(Rational(1, 4), 0, 0.9, 1.0), g2(Rational(-1, 3), Rational(1, 2), 1.2, 1.0);
    const auto w = matrix_wigner(t, AtomicDistribution::delta({0}), comb_of(1));
    const Complex lhs = pair(w, separable({g1, g2}));
    // mu(x) conj(nu^(w)); conj(g2) is g2 with conjugated coefficient and negated modulation.
    GaussAtom g2c = g2;
    g2c.modulation = -g2c.modulation;
    g2c.coeff = std::conj(g2c.coeff);
    const Complex rhs =
        pair(AtomicDistribution::delta({0}), {g1}) * std::conj(pair(fourier(comb_of(1)), TestFunction::from_atoms({g2c})));
    CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("ambiguity of equal atoms sits at x = 0") {
    const auto t = NamedTransform::make(TransformKind::ambiguity, 1).map;
    const auto a = AtomicDistribution::delta({Rational(3, 2)});
    const auto w = matrix_wigner(t, a, a);
    REQUIRE(w.terms.size() == 1);
    CHECK(w.terms[0].offset[0] == 0);
    CHECK(project(w, 1) == make_descriptor(1, {Coset{{0}, RMat(1, 0)}}));
}

TEST_CASE("Fourier-side R") {
    const auto rih = fourier_side_R(NamedTransform::make(TransformKind::rihaczek, 1).map);
    CHECK(rih.matrix() == RMat{{0, 1}, {1, 0}});

    // d = 1: with T^{-1} = (A B; C D), R = (C A; -D -B).
    const RMat t{{2, Rational(1, 3)}, {-1, Rational(3, 4)}};
    const auto map = LinearMap2d::from_matrix(t);
    const RMat& inv = map.inverse();
    CHECK(fourier_side_R(map).matrix() == RMat{{inv(1, 0), inv(0, 0)}, {-inv(1, 1), -inv(0, 1)}});
    CHECK(fourier_side_R(map).matrix().det() != 0);
    CHECK(fourier_side_R(fourier_side_R(map)) == map);

    const auto phi = separable({GaussAtom(Rational(1, 5), 0, 0.9, 1.0), GaussAtom(0, Rational(1, 4), 1.1, 1.0)});
    CHECK(fourier_side_residual(map, comb_of(1), comb_of(2, Rational(1, 2)), phi) < 1e-9);
    CHECK(fourier_side_residual(NamedTransform::make(TransformKind::ambiguity, 1).map, comb_of(Rational(1, 2)),
                                comb_of(1, 0, Rational(1, 3)), phi) < 1e-9);
}

TEST_CASE("support predicates follow the block determinants") {
    const auto c1 = comb_of(1);
    for (auto kind : {TransformKind::classical, TransformKind::ambiguity}) {
        const auto t = NamedTransform::make(kind, 1).map;
        const auto p = support_predicates(t, matrix_wigner(t, c1, c1));
        CHECK(p.pi1_ud);
        CHECK(p.mu_ud_forced);
        CHECK(p.nu_ud_forced);
    }
    const auto r = NamedTransform::make(TransformKind::rihaczek, 1).map;
    const auto p = support_predicates(r, matrix_wigner(r, c1, c1));
    CHECK_FALSE(p.det_b);
    CHECK_FALSE(p.det_c);
    CHECK(p.mu_ud_forced);
    CHECK_FALSE(p.nu_ud_forced);
}

TEST_CASE("full-line first projection is indeterminate") {
    const auto t = NamedTransform::make(TransformKind::classical, 1).map;
    PhaseSpace psi;
    Term line = Term::atom({0, 0}, {}, Weight());
    line.mode = {Mode::exponential, Mode::atomic};
    psi.terms.push_back(line);
    CHECK_THROWS_AS(support_predicates(t, psi), IndeterminateProjection);
}

TEST_CASE("block determinant implications") {
    const auto z = block_det_implications(RMat{{1, 1}, {1, 0}});
    CHECK(z.det_y == 1);
    CHECK(z.det_h == -1);
    CHECK(z.implications_hold);
    const auto id = block_det_implications(RMat::identity(2));
    CHECK(id.det_u == 0);
    CHECK(id.det_f == 0);
    CHECK(id.implications_hold);
}
