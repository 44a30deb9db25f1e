#include <doctest.h>

#include "helpers.hpp"

using namespace qcwig;
using namespace qcwig::test;

TEST_CASE("dual lattices") {
    CHECK(dual(Lattice{RMat{{1}}}).basis == RMat{{1}});
    CHECK(dual(Lattice{RMat{{2}}}).basis == RMat{{Rational(1, 2)}});
    const RMat b{{2, 0}, {0, Rational(1, 3)}};
    CHECK(dual(Lattice{b}).basis == RMat{{Rational(1, 2), 0}, {0, 3}});
    const RMat skew{{Rational(2, 3), 1}, {0, Rational(5, 2)}};
    CHECK(dual(dual(Lattice{skew})).basis == skew);
}

TEST_CASE("column HNF, membership and cosets") {
    const RMat g{{2, 3}};
    CHECK(lattice_basis(g) == RMat{{1}});
    CHECK(in_lattice(RMat{{Rational(1, 2)}}, {Rational(7, 2)}));
    CHECK_FALSE(in_lattice(RMat{{Rational(1, 2)}}, {Rational(1, 3)}));
    CHECK(lattice_intersection(RMat{{2}}, RMat{{3}}) == RMat{{6}});
    CHECK(coset_representatives(RMat{{2, 0}, {0, 3}}).size() == 6);
    CHECK(*min_nonzero_norm({Rational(1, 3)}, RMat{{1}}) == Rational(1, 3));
}

TEST_CASE("Fourier transform of combs") {
    CHECK(fourier_atomic(comb_of(1)) == canonicalize(comb_of(1)));

    const CombTerm f2 = fourier(comb(2));
    CHECK(f2.step == RMat{{Rational(1, 2)}});
    CHECK(f2.shift == RVec{0});
    CHECK(f2.modulation == RVec{0});
    CHECK(std::abs(f2.coeff.materialize() - 0.5) < 1e-15);

    const CombTerm fs = fourier(comb(1, Rational(1, 2)));
    CHECK(fs == canonicalize(comb(1, 0, Rational(-1, 2))));
    CHECK(std::abs(fs.coeff.materialize() - 1.0) < 1e-15);
}

TEST_CASE("Fourier transform of atoms is not atomic") {
    const Spectrum s = fourier(AtomicDistribution::delta({Rational(1, 2)}));
    CHECK_FALSE(s.is_atomic());
    CHECK_THROWS_AS(s.atomic(), NonAtomicSpectrum);
    CHECK_THROWS_AS(fourier_atomic(AtomicDistribution::delta({0})), NonAtomicSpectrum);
}

TEST_CASE("Parseval on combs") {
    for (const auto& mu : {comb_of(1), comb_of(2, Rational(1, 3), Rational(1, 4)), comb_of(Rational(3, 5), Rational(-1, 2))})
        for (const GaussAtom& g : {GaussAtom(Rational(1, 4), Rational(-1, 3), 0.9, 1.0), GaussAtom(1, 1, 1.4, Complex(0, 1))}) {
            const Complex lhs = pair(mu, {g});
            const Complex rhs = pair(fourier(mu), TestFunction::from_atoms({g.fourier()}));
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
}

TEST_CASE("Fourier twice reflects combs") {
    const auto mu = comb_of(Rational(2, 3), Rational(1, 5), Rational(3, 7));
    CHECK(fourier_atomic(fourier_atomic(mu)) == canonicalize(reflect(mu)));
}
