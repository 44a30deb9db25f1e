#include <doctest.h>

#include "helpers.hpp"

using namespace qcwig;
using namespace qcwig::test;

TEST_CASE("min_gap on small sets") {
    CHECK(*min_gap(points_1d({0, 1, Rational(5, 2)})) == 1);
    CHECK_FALSE(min_gap(PointSet()).has_value());
    CHECK_FALSE(min_gap(points_1d({3})).has_value());

    std::vector<RVec> pts;
    for (int n = 1; n <= 10; ++n) pts.push_back({Rational(n) + Rational(1, n)});
    // Consecutive gaps are 1 - 1/(n(n+1)); the smallest is between 2 and 5/2.
    CHECK(*min_gap(PointSet(pts)) == Rational(1, 2));
}

TEST_CASE("min_gap uses the sup norm in 2D") {
    PointSet s({{0, 0}, {Rational(1, 3), Rational(1, 4)}, {2, 2}});
    CHECK(*min_gap(s) == Rational(1, 3));
}

TEST_CASE("point sets reject duplicates and mixed dimensions") {
    CHECK_THROWS_AS(points_1d({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet({{0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("is_uniformly_discrete") {
    CHECK(is_uniformly_discrete(points_1d({0, 1, 2}), 1));
    CHECK_FALSE(is_uniformly_discrete(points_1d({0, Rational(1, 2)}), 1));
    std::vector<RVec> pts;
    for (int n = 1; n <= 10; ++n) pts.push_back({Rational(n) + Rational(1, n)});
    CHECK_FALSE(is_uniformly_discrete(PointSet(pts), 1));
}

TEST_CASE("pairing with Gaussians") {
    const GaussAtom unit = unit_gaussian();
    CHECK(std::abs(pair(AtomicDistribution::delta({0}), {unit}) - std::pow(2.0, 0.25)) < 1e-15);
    CHECK(std::abs(pair(AtomicDistribution::delta({0}, {1}), {plain_gaussian()})) < 1e-15);

    double theta = 0;
    for (int n = -8; n <= 8; ++n) theta += std::exp(-kPi * n * n);
    const Complex c = pair(comb_of(1), {plain_gaussian()});
    CHECK(std::abs(c - theta) < 1e-12);
    CHECK(std::abs(c - 1.0864348113) < 1e-10);
}

TEST_CASE("pairing is conjugate-linear in the test function") {
    const Complex z(0.3, -1.2);
    GaussAtom g(Rational(1, 3), Rational(1, 2), 0.8, 1.0);
    GaussAtom gz = g;
    gz.coeff = z;
    const auto mu = AtomicDistribution::delta({Rational(1, 2)}, {2}) + comb_of(Rational(3, 2), Rational(1, 4));
    CHECK(std::abs(pair(mu, {gz}) - std::conj(z) * pair(mu, {g})) < 1e-12);
}

TEST_CASE("derivative order cap") {
    CHECK_THROWS_AS(pair(AtomicDistribution::delta({0}, {kMaxOrder + 1}), {plain_gaussian()}), OrderCapExceeded);
}

TEST_CASE("translate_modulate") {
    CHECK(canonicalize(translate_modulate(AtomicDistribution::delta({0}), {1}, {0})) ==
          canonicalize(AtomicDistribution::delta({1})));
    CHECK(canonicalize(translate_modulate(comb_of(1), {Rational(1, 2)}, {0})) ==
          canonicalize(comb_of(1, Rational(1, 2))));

    // e^{2 pi i t} delta_0' = delta_0' - 2 pi i delta_0, compared by pairing.
    const auto lhs = translate_modulate(AtomicDistribution::delta({0}, {1}), {0}, {1});
    auto rhs = AtomicDistribution::delta({0}, {1}) + AtomicDistribution::delta({0}, {}, Weight(Complex(0, -2 * kPi)));
    for (const GaussAtom& g : {GaussAtom(Rational(1, 5), 0, 0.7, 1.0), GaussAtom(-1, Rational(1, 3), 1.3, 1.0)})
        CHECK(std::abs(pair(lhs, {g}) - pair(rhs, {g})) < 1e-12);
}

TEST_CASE("translation round trip is exact") {
    auto mu = AtomicDistribution::delta({Rational(1, 3)}, {2}) + comb_of(Rational(2, 3), Rational(1, 5), Rational(1, 7));
    auto back = translate_modulate(translate_modulate(mu, {Rational(7, 4)}, {0}), {Rational(-7, 4)}, {0});
    CHECK(canonicalize(back) == canonicalize(mu));
}

TEST_CASE("is_measure tracks derivative orders") {
    CHECK(AtomicDistribution::delta({0}).is_measure());
    CHECK(comb_of(2).is_measure());
    CHECK_FALSE((AtomicDistribution::delta({0}) + AtomicDistribution::delta({0}, {1})).is_measure());
}
