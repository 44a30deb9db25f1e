#pragma once

// Time-frequency shifted Gaussians used as test functions.

#include <vector>

#include "qcwig/weight.hpp"

namespace qcwig {

/// coeff * e^{2 pi i b t} * e^{-pi (t - a)^2 / width^2}
struct GaussAtom {
    Rational shift;     // a
    Rational modulation;  // b
    double width = 1.0;
    Complex coeff{1.0, 0.0};

    GaussAtom() = default;
    GaussAtom(Rational a, Rational b, double w, Complex c = 1.0)
        : shift(std::move(a)), modulation(std::move(b)), width(w), coeff(c) {}

    Complex operator()(double t) const { return derivative(0, t); }
    /// n-th derivative at t.
    Complex derivative(int n, double t) const;

    GaussAtom fourier() const;
    /// t -> g(-t)
    GaussAtom reflect() const;
    /// t -> g(t + alpha)
    GaussAtom advanced(const Rational& alpha) const;
};

/// The unit-energy Gaussian 2^{1/4} e^{-pi t^2}.
GaussAtom unit_gaussian();

/// coeff * prod_c factors[c](y_c)
struct SepGauss {
    Complex coeff{1.0, 0.0};
    std::vector<GaussAtom> factors;
};

/// Finite sum of separable Gaussians on R^D.
struct TestFunction {
    std::vector<SepGauss> terms;

    TestFunction() = default;
    /// Sum of one-dimensional atoms.
    static TestFunction from_atoms(const std::vector<GaussAtom>& atoms);
    std::size_t dim() const { return terms.empty() ? 0 : terms.front().factors.size(); }
    Complex operator()(const std::vector<double>& y) const;
};

/// (phi1 (x) phi2)(x, w) = phi1(x) phi2(w)
TestFunction tensor(const TestFunction& a, const TestFunction& b);

}  // namespace qcwig
