#include "qcwig/gauss.hpp"

#include <cmath>
#include <numbers>

namespace qcwig {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex GaussAtom::derivative(int n, double t) const {
    const double a = shift.get_d(), b = modulation.get_d();
    const double s2 = width * width;
    const double x = t - a;
    const Complex base = coeff * unit_phase(static_cast<long double>(b) * t) * std::exp(-kPi * x * x / s2);
    if (n == 0) return base;
    // g^{(n)} = H_n g with H_{n+1} = Q' H_n + n Q'' H_{n-1}.
    const Complex q1(-2.0 * kPi * x / s2, 2.0 * kPi * b);
    const double q2 = -2.0 * kPi / s2;
    Complex h_prev(1.0), h = q1;
    for (int m = 1; m < n; ++m) {
        Complex next = q1 * h + static_cast<double>(m) * q2 * h_prev;
        h_prev = h;
        h = next;
    }
    return h * base;
}

GaussAtom GaussAtom::fourier() const {
    Complex c = coeff * width * unit_phase(shift * modulation);
    return GaussAtom(modulation, -shift, 1.0 / width, c);
}

GaussAtom GaussAtom::reflect() const { return GaussAtom(-shift, -modulation, width, coeff); }

GaussAtom GaussAtom::advanced(const Rational& alpha) const {
    return GaussAtom(shift - alpha, modulation, width, coeff * unit_phase(modulation * alpha));
}

GaussAtom unit_gaussian() { return GaussAtom(0, 0, 1.0, std::pow(2.0, 0.25)); }

TestFunction TestFunction::from_atoms(const std::vector<GaussAtom>& atoms) {
    TestFunction f;
    for (const auto& g : atoms) f.terms.push_back(SepGauss{Complex(1.0), {g}});
    return f;
}

Complex TestFunction::operator()(const std::vector<double>& y) const {
    Complex sum(0.0);
    for (const auto& s : terms) {
        Complex p = s.coeff;
        for (std::size_t c = 0; c < s.factors.size(); ++c) p *= s.factors[c](y[c]);
        sum += p;
    }
    return sum;
}

TestFunction tensor(const TestFunction& a, const TestFunction& b) {
    TestFunction out;
    for (const auto& s : a.terms)
        for (const auto& t : b.terms) {
            SepGauss p{s.coeff * t.coeff, s.factors};
            p.factors.insert(p.factors.end(), t.factors.begin(), t.factors.end());
            out.terms.push_back(std::move(p));
        }
    return out;
}

}  // namespace qcwig
