#include <doctest.h>

#include "helpers.hpp"

using namespace qcwig;
using namespace qcwig::test;

namespace {

std::size_t argmax(const GridSignal& s) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < s.size(); ++k)
        if (std::abs(s.samples[k]) > std::abs(s.samples[best])) best = k;
    return best;
}

GridSignal unit_signal(std::size_t n, double extent) {
    const double c = std::pow(2.0, 0.25);
    return sample_function([=](double t) { return Complex(c * std::exp(-kPi * t * t)); }, n, extent);
}

}  // namespace

TEST_CASE("grid construction") {
    CHECK_THROWS_AS(GridSignal(100, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSignal(128, 0.0), std::invalid_argument);
    GridSignal g(256, 4.0);
    CHECK(g.step() == doctest::Approx(1.0 / 32));
    CHECK(g.t(128) == doctest::Approx(0.0));
}

TEST_CASE("sampled measures") {
    const auto bump = sample_measure(AtomicDistribution::delta({0}), 0.25, 256, 4.0);
    CHECK(argmax(bump) == 128);

    const auto odd = sample_measure(AtomicDistribution::delta({0}, {1}), 0.25, 256, 4.0);
    CHECK(std::abs(odd.samples[128]) < 1e-12);
    CHECK(std::abs(odd.samples[120] + odd.samples[136]) < 1e-12);

    const auto combs = truncate_combs(comb_of(1), -4, 4);
    CHECK(combs.atoms.size() == 9);
    const auto bumps = sample_measure(comb_of(1), 0.1, 1024, 4.5);
    std::size_t peaks = 0;
    for (std::size_t k = 1; k + 1 < bumps.size(); ++k) {
        const double v = std::abs(bumps.samples[k]);
        if (v > 1.0 && v > std::abs(bumps.samples[k - 1]) && v >= std::abs(bumps.samples[k + 1])) ++peaks;
    }
    CHECK(peaks == 9);

    CHECK_THROWS_AS(sample_measure(AtomicDistribution::delta({0}), 0.01, 256, 4.0), UnderResolved);
}

TEST_CASE("Gaussian grid Wigner") {
    const auto g = unit_signal(1024, 8.0);
    const auto w = grid_wigner(g, g);
    double err = 0;
    for (std::size_t i = 0; i < w.nx; ++i)
        for (std::size_t j = 0; j < w.nw; ++j)
            err = std::max(err, std::abs(w.at(i, j) - 2.0 * std::exp(-2 * kPi * (w.x(i) * w.x(i) + w.w(j) * w.w(j)))));
    CHECK(err < 1e-6);
    CHECK_THROWS_AS(grid_wigner(g, unit_signal(512, 8.0)), GridMismatch);
}

TEST_CASE("grid covariance") {
    const double c = std::pow(2.0, 0.25);
    const auto shifted = sample_function([=](double t) { return Complex(c * std::exp(-kPi * (t - 1) * (t - 1))); }, 1024, 8.0);
    const auto w0 = grid_wigner(unit_signal(1024, 8.0), unit_signal(1024, 8.0));
    const auto w1 = grid_wigner(shifted, shifted);
    // One unit is 64 samples at this step.
    double err = 0;
    for (std::size_t i = 64; i < w1.nx; ++i)
        for (std::size_t j = 0; j < w1.nw; ++j) err = std::max(err, std::abs(w1.at(i, j) - w0.at(i - 64, j)));
    CHECK(err < 1e-6);
}

TEST_CASE("fractional Fourier transform") {
    const double c = std::pow(2.0, 0.25);
    const auto f = sample_function(
        [=](double t) { return c * std::exp(-kPi * (t - 0.5) * (t - 0.5)) * std::polar(1.0, 2 * kPi * 0.75 * t); }, 1024, 8.0);
    const auto a = grid_frft(f, 1.0), b = direct_dft(f);
    double err = 0;
    for (std::size_t k = 0; k < f.size(); ++k) err = std::max(err, std::abs(a.samples[k] - b.samples[k]));
    CHECK(err < 1e-8);
    CHECK(std::abs(grid_frft(f, 0.37).energy() - f.energy()) < 1e-8);
    const auto ab = grid_frft(grid_frft(f, 0.3), 0.5), direct = grid_frft(f, 0.8);
    double comp = 0;
    for (std::size_t k = 0; k < f.size(); ++k) comp = std::max(comp, std::abs(ab.samples[k] - direct.samples[k]));
    CHECK(comp < 1e-6);
    CHECK(metaplectic_rotation_check(unit_signal(1024, 8.0), 2.0 / 3.0) < 1e-3);
}

TEST_CASE("smoothed comb prediction") {
    const double sigma = 0.1;
    const auto s = sample_measure(comb_of(1), sigma, 2048, 8.0);
    const Rational edge = comb_window(sigma, 8.0);
    CHECK(compare(wigner(truncate_combs(comb_of(1), -edge, edge)), grid_wigner(s, s), sigma) < 1e-4);
}

TEST_CASE("ridge of a two-atom cross term") {
    const auto mu = AtomicDistribution::delta({0}) + AtomicDistribution::delta({1});
    const auto s = sample_measure(mu, 0.1, 1024, 4.0);
    const auto w = grid_wigner(s, s);
    // The interference ridge of delta_0 and delta_1 sits at x = 1/2 and oscillates in w.
    std::size_t best = 0;
    double best_var = 0;
    for (std::size_t i = 0; i < w.nx; ++i) {
        if (std::abs(w.x(i) - 0.5) > 0.3) continue;
        double lo = 1e300, hi = -1e300;
        for (std::size_t j = 0; j < w.nw; ++j) {
            lo = std::min(lo, w.at(i, j).real());
            hi = std::max(hi, w.at(i, j).real());
        }
        if (hi - lo > best_var) {
            best_var = hi - lo;
            best = i;
        }
    }
    CHECK(std::abs(w.x(best) - 0.5) <= s.step());
    const auto pred = smoothed_prediction(wigner(mu), w, 0.1);
    CHECK(pred.max_abs() > 0);
}

TEST_CASE("zero measure gives a zero grid") {
    const auto s = sample_measure(AtomicDistribution{}, 0.2, 256, 4.0);
    CHECK(grid_wigner(s, s).max_abs() == 0.0);
}
