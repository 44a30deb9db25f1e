#pragma once

#include <cmath>
#include <numbers>

#include "qcwig/errors.hpp"
#include "qcwig/io.hpp"
#include "qcwig/matrix_wigner.hpp"
#include "qcwig/numeric_oracle.hpp"
#include "qcwig/quasicrystal.hpp"
#include "qcwig/verify.hpp"
#include "qcwig/wigner.hpp"

namespace qcwig::test {

inline constexpr double kPi = std::numbers::pi;

inline AtomicDistribution comb_of(const Rational& a, const Rational& shift = 0, const Rational& mod = 0) {
    return AtomicDistribution::of_comb(comb(a, shift, mod));
}

inline GaussAtom plain_gaussian(double width = 1.0) { return GaussAtom(0, 0, width, 1.0); }

inline TestFunction separable(const std::vector<GaussAtom>& factors) {
    TestFunction f;
    f.terms.push_back(SepGauss{1.0, factors});
    return f;
}

inline PointSet points_1d(std::initializer_list<Rational> xs) {
    std::vector<RVec> pts;
    for (const auto& x : xs) pts.push_back({x});
    return PointSet(pts);
}

}  // namespace qcwig::test
