#include <doctest.h>

#include "helpers.hpp"

using namespace qcwig;
using namespace qcwig::test;

TEST_CASE("cross-Wigner of two atoms is a line atom") {
    const auto w = cross_wigner(AtomicDistribution::delta({1}), AtomicDistribution::delta({Rational(1, 2)}));
    REQUIRE(w.terms.size() == 1);
    CHECK(w.terms[0].offset == RVec{Rational(3, 4), Rational(-1, 2)});
    CHECK(w.terms[0].mode == std::vector<Mode>{Mode::atomic, Mode::exponential});
    CHECK_FALSE(w.is_resolved());

    const auto w0 = wigner(AtomicDistribution::delta({0}));
    REQUIRE(w0.terms.size() == 1);
    CHECK(w0.terms[0].offset == RVec{0, 0});
    CHECK(w0.terms[0].weight == Weight());
}

TEST_CASE("comb Wigner closed form") {
    for (const Rational& a : {Rational(1), Rational(2), Rational(1, 2), Rational(3, 5)})
        CHECK(normalize(wigner(comb_of(a))) == normalize(wigner_comb_closed_form(a)));

    const auto w1 = wigner_comb_closed_form(1);
    REQUIRE(w1.terms.size() == 2);
    for (const auto& t : w1.terms) {
        CHECK(t.weight.scale == Rational(1, 2));
        CHECK(t.gens == RMat{{1, 0}, {0, Rational(1, 2)}});
    }
    // Shifted family at lambda* = 1 carries e^{-pi i} = -1.
    CHECK(w1.terms[1].offset == RVec{Rational(1, 2), 0});
    CHECK(w1.terms[1].character == RVec{0, Rational(1, 2)});

    const auto w2 = wigner_comb_closed_form(2);
    REQUIRE(w2.terms.size() == 2);
    CHECK(w2.terms[0].weight.scale == Rational(1, 4));
    CHECK(w2.terms[0].gens == RMat{{2, 0}, {0, Rational(1, 4)}});
    CHECK(w2.terms[1].offset == RVec{1, 0});
}

TEST_CASE("Wigner of comb_1 is real") {
    const auto w = wigner(comb_of(1));
    // Real test functions only: the pairing conjugates the test function.
    for (const GaussAtom& g : {GaussAtom(Rational(1, 3), 0, 0.8, 1.0), GaussAtom(-1, 0, 1.2, 1.0)}) {
        const auto phi = separable({g, GaussAtom(Rational(1, 7), 0, 1.1, 1.0)});
        CHECK(std::abs(pair(w, phi).imag()) < 1e-12);
    }
}

TEST_CASE("lambda coefficients") {
    CHECK(LambdaCoeff::make(0, 0, 0, 0).value == 1);
    CHECK(LambdaCoeff::make(1, 1, 1, 1).value == Rational(1, 4));
    CHECK(LambdaCoeff::make(2, 1, 1, 0).value == -1);
}

TEST_CASE("pairing expansion collapses for a single delta") {
    const auto g = TestFunction::from_atoms({plain_gaussian()});
    CHECK(std::abs(pairing_expansion(AtomicDistribution::delta({0}), g, g) - 1.0) < 1e-14);
}

TEST_CASE("pairing expansion agrees with the pipeline") {
    const auto mu = AtomicDistribution::delta({Rational(1, 2)}, {2}, Weight(Complex(0.5, -1))) +
                    AtomicDistribution::delta({-1}, {1}, Weight(Complex(0.2, 0.3)));
    const auto p1 = TestFunction::from_atoms({GaussAtom(Rational(1, 4), 0, 0.9, 1.0)});
    const auto p2 = TestFunction::from_atoms({GaussAtom(0, Rational(-1, 3), 1.2, 1.0)});
    CHECK(std::abs(pair(wigner(mu), tensor(p1, p2)) - pairing_expansion(mu, p1, p2)) < 1e-9);
}

TEST_CASE("covariance") {
    const auto g2 = separable({GaussAtom(Rational(1, 4), 0, 0.9, 1.0), GaussAtom(0, Rational(1, 2), 1.1, 1.0)});
    CHECK(covariance_check(AtomicDistribution::delta({0}), {1}, {0}, g2) < 1e-12);
    CHECK(covariance_check(comb_of(1), {Rational(1, 2)}, {0}, g2) < 1e-9);
    CHECK(covariance_check(AtomicDistribution::delta({0}, {1}), {0}, {Rational(1, 3)}, g2) < 1e-9);
}

TEST_CASE("Gaussian Wigner closed form") {
    const auto w = gaussian_wigner(unit_gaussian(), unit_gaussian());
    for (auto [x, om] : std::vector<std::pair<double, double>>{{0, 0}, {0.3, -0.2}, {1, 0.5}})
        CHECK(std::abs(w({x, om}) - 2.0 * std::exp(-2 * kPi * (x * x + om * om))) < 1e-14);
}

TEST_CASE("Moyal") {
    SepGauss g{1.0, {unit_gaussian()}};
    const auto d0 = AtomicDistribution::delta({0});
    CHECK(moyal_check(d0, d0, g, g) < 1e-8);
    CHECK(std::abs(pair(d0, {unit_gaussian()}) * std::conj(pair(d0, {unit_gaussian()})) - std::sqrt(2.0)) < 1e-14);
    CHECK(moyal_check(AtomicDistribution::delta({1}), d0, g, g) < 1e-8);
}

TEST_CASE("Fourier flip") {
    const auto phi = separable({GaussAtom(Rational(1, 5), Rational(1, 3), 0.9, 1.0), GaussAtom(Rational(-1, 2), 0, 1.3, 1.0)});
    CHECK(fourier_flip_check(comb_of(1), phi) < 1e-9);
    CHECK(fourier_flip_check(comb_of(2), phi) < 1e-9);
    CHECK(fourier_flip_check(comb_of(1, Rational(1, 2)), phi) < 1e-9);
    // comb_1 is self-dual, so its Wigner is invariant under the flip. The
    // swapped term list is a different decomposition of the same measure.
    const auto w = wigner(comb_of(1));
    CHECK(std::abs(pair(swap_slots(w), phi) - pair(w, phi)) < 1e-12);
    CHECK_THROWS_AS(fourier_flip_check(AtomicDistribution::delta({0}), phi), NonAtomicSpectrum);
}

TEST_CASE("midpoint law on comb Wigner outputs") {
    const auto mu = comb_of(Rational(2, 3), Rational(1, 3)) + comb_of(2);
    CHECK(midpoint_closure_check(wigner(mu), support(mu)));
}
