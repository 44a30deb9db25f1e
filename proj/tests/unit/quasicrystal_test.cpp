#include <doctest.h>

#include "helpers.hpp"

using namespace qcwig;
using namespace qcwig::test;

TEST_CASE("midpoint closure") {
    const auto z = support(comb_of(1));
    CHECK(midpoint_closure_check(wigner(comb_of(1)), z));
    CHECK(midpoint_closure_check(wigner(comb_of(2)), support(comb_of(2))));

    PhaseSpace corrupted = wigner(comb_of(1));
    corrupted.terms.push_back(Term::atom({Rational(1, 3), 0}, {}, Weight()));
    CHECK_FALSE(midpoint_closure_check(normalize(corrupted), z));
}

TEST_CASE("half-sumsets") {
    CHECK(half_sumset(support(comb_of(2))) == support(comb_of(1)));

    std::vector<RVec> ints;
    for (int n = -10; n <= 10; ++n) ints.push_back({Rational(n)});
    CHECK(*half_sumset_min_gap(PointSet(ints)) == Rational(1, 2));

    const auto a10 = reciprocal_perturbed_integers(10);
    CHECK(a10.size() == 20);
    const Rational g10 = *half_sumset_min_gap(a10);
    CHECK(g10 > 0);
    CHECK(g10 < Rational(1, 100));
    CHECK(*half_sumset_min_gap(reciprocal_perturbed_integers(20)) < g10);
    CHECK(*min_gap(reciprocal_perturbed_integers(20)) == Rational(1, 2));
}

TEST_CASE("canonical form of an alternating sequence") {
    AtomicDistribution mu;
    for (int n = -6; n <= 6; ++n) mu.atoms.push_back(DeltaAtom{{Rational(n)}, {0}, Weight(Complex(n % 2 ? -1.0 : 1.0))});
    const auto f = fit_canonical_form(mu);
    CHECK(f.step == 1);
    REQUIRE(f.cosets.size() == 1);
    CHECK(f.cosets[0].shift == 0);
    REQUIRE(f.cosets[0].terms.size() == 1);
    CHECK(f.cosets[0].terms[0].frequency == Rational(1, 2));
    CHECK(std::abs(f.cosets[0].terms[0].coeff - 1.0) < 1e-12);
    CHECK(resynthesis_matches(mu, f, -6, 6));
}

TEST_CASE("canonical form of combs and coset unions") {
    const auto f = fit_canonical_form(comb_of(1));
    CHECK(f.step == 1);
    REQUIRE(f.cosets.size() == 1);
    REQUIRE(f.cosets[0].terms.size() == 1);
    CHECK(f.cosets[0].terms[0].frequency == 0);

    AtomicDistribution two;
    for (int n = -4; n <= 4; ++n) {
        two.atoms.push_back(DeltaAtom{{Rational(n)}, {0}, Weight()});
        two.atoms.push_back(DeltaAtom{{Rational(n) + Rational(1, 3)}, {0}, Weight()});
    }
    const auto g = fit_canonical_form(two);
    CHECK(g.step == 1);
    CHECK(g.cosets.size() == 2);
    CHECK(resynthesis_matches(two, g, -4, Rational(13, 3)));

    const auto sum = comb_of(Rational(1, 2), 0, Rational(1, 3)) + comb_of(Rational(1, 3), Rational(1, 7));
    CHECK(resynthesis_matches(sum, fit_canonical_form(sum), -10, 10));
}

TEST_CASE("canonical form errors") {
    CHECK_THROWS_AS(fit_canonical_form(AtomicDistribution::delta({0}, {1}) + AtomicDistribution::delta({1}, {1})),
                    NotLatticeSupported);
    AtomicDistribution irregular;
    for (int n : {0, 1, 3, 7, 8}) irregular.atoms.push_back(DeltaAtom{{Rational(n)}, {0}, Weight()});
    CHECK_THROWS(fit_canonical_form(irregular));
    AtomicDistribution aperiodic;
    for (int n = 0; n < 12; ++n) aperiodic.atoms.push_back(DeltaAtom{{Rational(n)}, {0}, Weight(Complex(1.0 + n * n))});
    CHECK_THROWS_AS(fit_canonical_form(aperiodic), AperiodicCoefficients);
}

TEST_CASE("F_gamma enumeration") {
    const auto f = enumerate_F_gamma({1, 1});
    std::vector<std::pair<MultiIndex, MultiIndex>> expected{{{0, 2}, {2, 0}}, {{1, 1}, {1, 1}}, {{2, 0}, {0, 2}}};
    auto got = f.pairs;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);

    for (int n = 0; n <= 4; ++n) {
        const auto one = enumerate_F_gamma({n});
        REQUIRE(one.pairs.size() == 1);
        CHECK(one.pairs[0].first == MultiIndex{n});
    }
    CHECK(multi_indices(2, 2) == std::vector<MultiIndex>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("quadratic lemma checks") {
    const auto r = lemma_several_check({{MultiIndex{3}, Complex(0.5, 0.5)}}, 1, 3);
    CHECK(std::abs(r.max_condition - 0.5) < 1e-15);
    CHECK_FALSE(r.all_conditions_vanish);
    CHECK(r.consistent);

    const auto rs = lemma_random_search(2, 2, 1000, 0);
    CHECK(rs.families == 1000);
    CHECK(rs.counterexamples == 0);
    CHECK(lemma_exhaustive_search(2, 3).counterexamples == 0);
}

TEST_CASE("theorem harness verdicts") {
    const auto c1 = comb_of(1);
    const auto classical = theorem_harness(c1, c1, NamedTransform::make(TransformKind::classical, 1));
    CHECK(classical.verdict == HarnessVerdict::conclusions_hold);
    CHECK(classical.hypothesis_product_support);
    CHECK(classical.mu_is_measure);
    CHECK(classical.spectra_ud);

    const auto dd = AtomicDistribution::delta({0}) + AtomicDistribution::delta({0}, {1});
    const auto bad = theorem_harness(dd, dd, NamedTransform::make(TransformKind::classical, 1));
    CHECK(bad.verdict == HarnessVerdict::hypothesis_failed);
    CHECK_FALSE(bad.hypothesis_product_support);

    const auto amb = theorem_harness(c1, comb_of(1, Rational(1, 2)), NamedTransform::make(TransformKind::ambiguity, 1));
    CHECK(amb.verdict == HarnessVerdict::conclusions_hold);

    CHECK(theorem_harness(c1, c1, NamedTransform::make(TransformKind::rihaczek, 1)).verdict ==
          HarnessVerdict::not_applicable);
    CHECK(theorem_harness(AtomicDistribution{}, AtomicDistribution{}, NamedTransform::make(TransformKind::classical, 1))
              .verdict == HarnessVerdict::not_applicable);
    CHECK(to_string(HarnessVerdict::conclusions_hold) == "conclusions-hold");
}
