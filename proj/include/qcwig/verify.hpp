#pragma once

// Seeded corpora and the property suites run by `qcwig verify` and the
// acceptance binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcwig/numeric_oracle.hpp"
#include "qcwig/quasicrystal.hpp"

namespace qcwig {

using Rng = std::mt19937_64;

namespace gen {

/// num/den with den in [1, max_den] and value in [lo, hi].
Rational rational(Rng& rng, long lo, long hi, long max_den = 6);
/// Real and imaginary parts uniform in [-1, 1], bounded away from 0.
Complex complex(Rng& rng);
/// 1..max_atoms atoms at distinct rational points in [-5, 5]^dim, orders up to max_order per coordinate.
AtomicDistribution atomic(Rng& rng, std::size_t max_atoms, int max_order, std::size_t dim = 1);
/// count modulated, shifted combs with small rational steps.
AtomicDistribution combs(Rng& rng, std::size_t count, std::size_t dim = 1);
GaussAtom gauss(Rng& rng);
/// A separable Gaussian whose c-th factor has width widths[c] (random if empty).
SepGauss sep_gauss(Rng& rng, std::size_t factors, const std::vector<double>& widths = {});
TestFunction test_function(Rng& rng, std::size_t dim, std::size_t terms = 1);
/// Random invertible n x n rational matrix with small entries.
RMat invertible(Rng& rng, std::size_t n);
/// d = 1 custom transform whose inverse has a b != 0.
NamedTransform transform_ab(Rng& rng);

}  // namespace gen

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kAcceptanceCriteria = 10;

/// Acceptance criterion id in [1, 10].
CheckResult acceptance_criterion(int id, std::uint64_t seed = 0);
std::vector<CheckResult> acceptance_suite(std::uint64_t seed = 0);
/// Module invariants not already covered by the acceptance criteria.
std::vector<CheckResult> property_suite(std::uint64_t seed = 0);

}  // namespace qcwig
