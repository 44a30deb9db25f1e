#pragma once

// Floating-point grid engine used to cross-check the exact closed forms:
// mollified samples, discrete Wigner, discrete fractional Fourier transform.

#include <functional>
#include <iosfwd>
#include <vector>

#include "qcwig/phase_space.hpp"

namespace qcwig {

/// Samples at t_k = -L + k h, h = 2L/N, N a power of two.
struct GridSignal {
    std::vector<Complex> samples;
    double extent = 1.0;  // L

    GridSignal() = default;
    /// Throws std::invalid_argument unless n is a power of two and L > 0.
    GridSignal(std::size_t n, double extent);

    std::size_t size() const { return samples.size(); }
    double step() const { return 2.0 * extent / static_cast<double>(samples.size()); }
    double t(std::size_t k) const { return -extent + static_cast<double>(k) * step(); }
    /// h * sum |f_k|^2
    double energy() const;
};

GridSignal sample_function(const std::function<Complex(double)>& f, std::size_t n, double extent);

/// Combs replaced by their atoms in [lo, hi].
AtomicDistribution truncate_combs(const AtomicDistribution& mu, const Rational& lo, const Rational& hi);

/// Comb truncation used by sample_measure: atoms at least this many widths
/// inside the extent.
inline constexpr double kCombMargin = 4.0;
/// Half-width of the rational window sample_measure truncates combs to.
Rational comb_window(double sigma, double extent);

/// mu * G_sigma with G_sigma(t) = sigma^{-1} e^{-pi t^2 / sigma^2}; combs are
/// truncated to [-L + 4 sigma, L - 4 sigma]. Throws UnderResolved when
/// sigma < 2h.
GridSignal sample_measure(const AtomicDistribution& mu, double sigma, std::size_t n, double extent);

/// Values on x_i = x0 + i dx, w_j = w0 + j dw, row-major in x.
struct Grid2D {
    std::size_t nx = 0, nw = 0;
    double x0 = 0, dx = 1, w0 = 0, dw = 1;
    std::vector<Complex> values;

    Complex& at(std::size_t i, std::size_t j) { return values[i * nw + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return values[i * nw + j]; }
    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
    double w(std::size_t j) const { return w0 + static_cast<double>(j) * dw; }
    /// Bilinear interpolation; 0 outside the grid.
    Complex interpolate(double x, double w) const;
    double max_abs() const;
};

/// W(f,g)(x_k, w_j) = 2h sum_m f[k+m] conj(g[k-m]) e^{-2 pi i j m / M},
/// w_j = j / (2 M h), M = oversample * N. Throws GridMismatch.
Grid2D grid_wigner(const GridSignal& f, const GridSignal& g, std::size_t oversample = 1);

/// Fractional Fourier transform F^alpha, alpha in (-2, 2), evaluated on the
/// input grid by chirp multiplication, convolution and chirp multiplication.
GridSignal grid_frft(const GridSignal& f, double alpha);

/// h sum_j f_j e^{-2 pi i t_k t_j}, the O(N^2) reference for alpha = 1.
GridSignal direct_dft(const GridSignal& f);

/// Max-abs difference between W(F^alpha f) and W(f) rotated by
/// theta = alpha pi / 2, over |x|, |w| <= L/2.
double metaplectic_rotation_check(const GridSignal& f, double alpha, std::size_t oversample = 4);

/// Max-abs difference between the grid values and the exact object smoothed
/// by the phase-space image of G_sigma (x-convolution with W(G_sigma)).
/// The exact object must consist of finite atoms in x.
double compare(const PhaseSpace& exact, const Grid2D& grid, double sigma);

/// Exact smoothed prediction on the grid's sample points.
Grid2D smoothed_prediction(const PhaseSpace& exact, const Grid2D& like, double sigma);

/// Lines "x,w,re,im".
void write_csv(std::ostream& os, const Grid2D& g);
void write_csv(std::ostream& os, const GridSignal& s);

}  // namespace qcwig
