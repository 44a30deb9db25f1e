#include <doctest.h>

#include "helpers.hpp"

using namespace qcwig;
using namespace qcwig::test;

namespace {

PhaseSpace atom2(const Rational& p, const Rational& q, Weight w = Weight()) {
    PhaseSpace psi;
    psi.terms.push_back(Term::atom({p, q}, {}, w));
    return normalize(psi);
}

}  // namespace

TEST_CASE("tensor conjugates the second factor") {
    CHECK(tensor(AtomicDistribution::delta({0}), AtomicDistribution::delta({0})) == atom2(0, 0));
    const auto t = tensor(AtomicDistribution::delta({1}), AtomicDistribution::delta({2}, {}, Weight(Complex(0, 1))));
    REQUIRE(t.terms.size() == 1);
    CHECK(t.terms[0].offset == RVec{1, 2});
    CHECK(std::abs(t.terms[0].weight.materialize() - Complex(0, -1)) < 1e-15);

    const auto cc = tensor(comb_of(1), comb_of(1));
    REQUIRE(cc.terms.size() == 1);
    CHECK(cc.terms[0].rank() == 2);
    CHECK(cc.terms[0].gens == RMat::identity(2));
}

TEST_CASE("pullback relocates atoms and scales by |det T^-1|") {
    const auto psi = atom2(1, 0);
    CHECK(pullback(LinearMap2d::from_matrix(RMat::identity(2)), psi) == psi);

    const auto moved = pullback(LinearMap2d::from_inverse(RMat{{2, 0}, {0, 1}}), psi);
    REQUIRE(moved.terms.size() == 1);
    CHECK(moved.terms[0].offset == RVec{2, 0});
    CHECK(std::abs(moved.terms[0].weight.materialize() - 2.0) < 1e-15);

    const auto sym = pullback(symmetric_map(1), atom2(3, 1));
    REQUIRE(sym.terms.size() == 1);
    CHECK(sym.terms[0].offset == RVec{2, 2});  // ((a+b)/2, a-b)
}

TEST_CASE("partial Fourier transform in the second slot") {
    const auto line = partial_fourier_2(atom2(Rational(1, 2), 3));
    REQUIRE(line.terms.size() == 1);
    CHECK(line.terms[0].mode == std::vector<Mode>{Mode::atomic, Mode::exponential});
    CHECK(line.terms[0].offset == RVec{Rational(1, 2), -3});

    PhaseSpace fam;
    fam.terms.push_back(Term::family({Rational(1, 3), 0}, RMat{{0}, {1}}, {0}, Weight()));
    const auto comb = partial_fourier_2(fam);
    CHECK(comb.is_resolved());
    REQUIRE(comb.terms.size() == 1);
    CHECK(comb.terms[0].offset == RVec{Rational(1, 3), 0});
    CHECK(comb.terms[0].gens == RMat{{0}, {1}});

    PhaseSpace alt;
    alt.terms.push_back(Term::family({Rational(1, 3), 0}, RMat{{0}, {1}}, {Rational(1, 2)}, Weight()));
    const auto shifted = partial_fourier_2(alt);
    REQUIRE(shifted.terms.size() == 1);
    CHECK(shifted.terms[0].offset == RVec{Rational(1, 3), Rational(1, 2)});
}

TEST_CASE("partial Fourier transform in the first slot") {
    PhaseSpace fam;
    fam.terms.push_back(Term::family({0, 2}, RMat{{1}, {0}}, {Rational(1, 2)}, Weight()));
    const auto out = partial_fourier_1(fam);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms[0].offset == RVec{Rational(1, 2), 2});
    CHECK(out.is_resolved());
}

TEST_CASE("partial Fourier round trips") {
    const auto w = wigner(comb_of(Rational(2, 3), Rational(1, 3)));
    CHECK(partial_fourier_2(inverse_partial_fourier_2(w)) == w);
    const auto t = tensor(AtomicDistribution::delta({1}, {1}), comb_of(2));
    CHECK(inverse_partial_fourier_2(partial_fourier_2(t)) == normalize(t));
}

TEST_CASE("supports and projections") {
    const auto p = atom2(1, 2);
    CHECK(project(p, 1) == make_descriptor(1, {Coset{{1}, RMat(1, 0)}}));
    CHECK(project(p, 2) == make_descriptor(1, {Coset{{2}, RMat(1, 0)}}));

    const auto line = partial_fourier_2(atom2(0, Rational(-1, 3)));
    CHECK(project(line, 1) == make_descriptor(1, {Coset{{0}, RMat(1, 0)}}));
    CHECK(project(line, 2).full_line);
    CHECK_FALSE(project(line, 2).is_ud());

    const auto w = wigner(comb_of(1));
    const auto half = make_descriptor(1, {Coset{{0}, RMat{{Rational(1, 2)}}}});
    CHECK(project(w, 1) == half);
    CHECK(project(w, 2) == half);
    CHECK(*project(w, 1).min_gap() == Rational(1, 2));
}

TEST_CASE("cosets of one lattice merge into a coarser lattice") {
    const auto s = make_descriptor(1, {Coset{{0}, RMat{{1}}}, Coset{{Rational(1, 2)}, RMat{{1}}}});
    CHECK(s == make_descriptor(1, {Coset{{0}, RMat{{Rational(1, 2)}}}}));
    const auto t = make_descriptor(1, {Coset{{0}, RMat{{1}}}, Coset{{Rational(1, 3)}, RMat{{1}}}});
    CHECK(t.cosets.size() == 2);
    CHECK(*t.min_gap() == Rational(1, 3));
}

TEST_CASE("pullback support law") {
    const auto t = LinearMap2d::from_matrix(RMat{{1, Rational(1, 2)}, {Rational(-1, 3), 2}});
    const auto psi = tensor(comb_of(1, Rational(1, 4)), comb_of(Rational(1, 2)));
    CHECK(support(pullback(t, psi)) == linear_image(t.inverse(), support(psi)));
}

TEST_CASE("projection lemma needs the u.d. hypothesis") {
    PhaseSpace psi;
    for (int n = 1; n <= 20; ++n) psi.terms.push_back(Term::atom({Rational(1, n), Rational(n)}, {}, Weight()));
    psi = normalize(psi);
    const auto r = projection_lemma_check(psi, Rational(1, 100));
    CHECK(r.verdict == ProjectionLemmaReport::Verdict::hypothesis_not_met);

    const auto ok = projection_lemma_check(tensor(comb_of(1), comb_of(2)), Rational(1, 2));
    CHECK(ok.verdict == ProjectionLemmaReport::Verdict::holds);
}
