#include "qcwig/weight.hpp"

#include <cmath>
#include <numbers>

namespace qcwig {

Weight::Weight(Complex v, Rational s, Rational p) : value(v), scale(std::move(s)), phase(frac(p)) {}

Complex unit_phase(const Rational& p) {
    Rational f = frac(p);
    if (f == 0) return {1.0, 0.0};
    if (f == Rational(1, 4)) return {0.0, 1.0};
    if (f == Rational(1, 2)) return {-1.0, 0.0};
    if (f == Rational(3, 4)) return {0.0, -1.0};
    return unit_phase(static_cast<long double>(f.get_d()));
}

Complex unit_phase(long double p) {
    long double f = p - std::floor(p);
    long double a = 2.0L * std::numbers::pi_v<long double> * f;
    return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

Complex Weight::materialize() const { return value * scale.get_d() * qcwig::unit_phase(phase); }

Weight Weight::conj() const { return Weight(std::conj(value), scale, -phase); }

Weight Weight::operator*(const Weight& o) const {
    return Weight(value * o.value, scale * o.scale, phase + o.phase);
}

bool Weight::try_add(const Weight& o) {
    if (scale != o.scale || phase != o.phase) return false;
    value += o.value;
    return true;
}

}  // namespace qcwig
