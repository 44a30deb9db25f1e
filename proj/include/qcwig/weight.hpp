#pragma once

#include <complex>

#include "qcwig/rational.hpp"

namespace qcwig {

using Complex = std::complex<double>;

/// Coefficient value * scale * e^{2 pi i phase}. The rational parts stay exact
/// so that phases like e^{-pi i n} compare bit-for-bit.
struct Weight {
    Complex value{1.0, 0.0};
    Rational scale{1};
    Rational phase{0};  // kept in [0,1)

    Weight() = default;
    explicit Weight(Complex v, Rational s = 1, Rational p = 0);

    static Weight unit_phase(const Rational& p) { return Weight(Complex(1.0), 1, p); }
    static Weight rational(const Rational& s) { return Weight(Complex(1.0), s, 0); }

    Complex materialize() const;
    bool is_zero() const { return scale == 0 || value == Complex(0.0); }

    Weight conj() const;
    Weight operator*(const Weight& o) const;
    Weight& operator*=(const Weight& o) { return *this = *this * o; }
    /// Adds o when scale and phase agree; false otherwise.
    bool try_add(const Weight& o);

    bool operator==(const Weight& o) const {
        return value == o.value && scale == o.scale && phase == o.phase;
    }
    bool operator!=(const Weight& o) const { return !(*this == o); }
};

/// e^{2 pi i p} with exact values at multiples of 1/4.
Complex unit_phase(const Rational& p);
Complex unit_phase(long double p);

}  // namespace qcwig
