#include "qcwig/numeric_oracle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qcwig/errors.hpp"
#include "qcwig/parallel.hpp"

namespace qcwig {

namespace {

constexpr double kPi = std::numbers::pi;

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

// The FFTW planner is not thread-safe; execution on fresh arrays is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftBuffer {
    explicit FftBuffer(std::size_t n) : n(n), data(fftw_alloc_complex(n)) {
        if (!data) throw std::bad_alloc();
    }
    ~FftBuffer() { fftw_free(data); }
    FftBuffer(const FftBuffer&) = delete;
    FftBuffer& operator=(const FftBuffer&) = delete;

    Complex* begin() { return reinterpret_cast<Complex*>(data); }
    Complex& operator[](std::size_t i) { return begin()[i]; }
    void zero() { std::fill(begin(), begin() + n, Complex(0.0)); }

    std::size_t n;
    fftw_complex* data;
};

class FftPlan {
public:
    FftPlan(std::size_t n, int sign) : n_(n) {
        FftBuffer probe(n);
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), probe.data, probe.data, sign, FFTW_ESTIMATE);
        if (!plan_) throw std::runtime_error("fftw planning failed");
    }
    ~FftPlan() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    /// In place on a buffer of the planned size.
    void run(FftBuffer& b) const { fftw_execute_dft(plan_, b.data, b.data); }

private:
    std::size_t n_;
    fftw_plan plan_ = nullptr;
};

Complex cis(double a) { return {std::cos(a), std::sin(a)}; }

// One chirp pass; requires |sin theta| bounded away from 0.
GridSignal chirp_frft(const GridSignal& f, double alpha) {
    const std::size_t n = f.size(), m = 2 * n;
    const double theta = alpha * kPi / 2.0, s = std::sin(theta), c = std::cos(theta);
    const double cot = c / s, csc = 1.0 / s, h = f.step();
    const Complex amp = cis(-kPi * (s > 0 ? 1.0 : -1.0) / 4.0 + theta / 2.0) / std::sqrt(std::abs(s));

    FftBuffer a(m), k(m);
    a.zero();
    k.zero();
    for (std::size_t j = 0; j < n; ++j) {
        const double t = f.t(j);
        a[j] = f.samples[j] * cis(kPi * (cot - csc) * t * t);
    }
    for (std::size_t d = 0; d < n; ++d) {
        const double u = static_cast<double>(d) * h;
        const Complex v = cis(kPi * csc * u * u);
        k[d] = v;
        if (d) k[m - d] = v;
    }
    FftPlan fwd(m, FFTW_FORWARD), bwd(m, FFTW_BACKWARD);
    fwd.run(a);
    fwd.run(k);
    for (std::size_t i = 0; i < m; ++i) a[i] *= k[i];
    bwd.run(a);

    GridSignal out(n, f.extent);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = f.t(i);
        out.samples[i] = amp * h * cis(kPi * (cot - csc) * u * u) * a[i] / static_cast<double>(m);
    }
    return out;
}

}  // namespace

GridSignal::GridSignal(std::size_t n, double l) : samples(n, Complex(0.0)), extent(l) {
    if (!power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");
    if (!(l > 0)) throw std::invalid_argument("grid extent must be positive");
}

double GridSignal::energy() const {
    double e = 0;
    for (const auto& v : samples) e += std::norm(v);
    return e * step();
}

GridSignal sample_function(const std::function<Complex(double)>& f, std::size_t n, double extent) {
    GridSignal g(n, extent);
    for (std::size_t k = 0; k < n; ++k) g.samples[k] = f(g.t(k));
    return g;
}

AtomicDistribution truncate_combs(const AtomicDistribution& mu, const Rational& lo, const Rational& hi) {
    if (mu.dim != 1) throw DimensionMismatch("comb truncation is one-dimensional");
    AtomicDistribution out;
    out.atoms = mu.atoms;
    for (const auto& c : mu.combs) {
        const Rational a = abs(c.step(0, 0));
        for (Integer n = -floor((c.shift[0] - lo) / a);; ++n) {
            const Rational x = c.shift[0] + Rational(n) * a;
            if (x > hi) break;
            if (x < lo) continue;
            out.atoms.push_back(DeltaAtom{{x}, {0}, c.coeff * Weight::unit_phase(frac(c.modulation[0] * x))});
        }
    }
    return canonicalize(out);
}

Rational comb_window(double sigma, double extent) {
    const double margin = extent - kCombMargin * sigma;
    if (margin <= 0) throw UnderResolved("extent too small for comb truncation");
    // Slightly inside [-margin, margin].
    return ratio(static_cast<long>(std::floor(margin * 1e6)), 1000000L);
}

GridSignal sample_measure(const AtomicDistribution& mu, double sigma, std::size_t n, double extent) {
    GridSignal g(n, extent);
    if (sigma < 2.0 * g.step()) throw UnderResolved("sigma below twice the grid step");
    AtomicDistribution fin = mu;
    if (!mu.combs.empty()) {
        const Rational r = comb_window(sigma, extent);
        fin = truncate_combs(mu, -r, r);
    }
    if (fin.dim != 1) throw DimensionMismatch("sampling is one-dimensional");
    for (const auto& at : fin.atoms) {
        const GaussAtom bump(at.location[0], 0, sigma, at.coeff.materialize() / sigma);
        const int ord = at.order.empty() ? 0 : at.order[0];
        for (std::size_t k = 0; k < n; ++k) g.samples[k] += bump.derivative(ord, g.t(k));
    }
    return g;
}

Complex Grid2D::interpolate(double x, double w) const {
    const double fi = (x - x0) / dx, fj = (w - w0) / dw;
    if (fi < 0 || fj < 0 || fi > static_cast<double>(nx - 1) || fj > static_cast<double>(nw - 1)) return 0.0;
    const std::size_t i = std::min(static_cast<std::size_t>(fi), nx - 2), j = std::min(static_cast<std::size_t>(fj), nw - 2);
    const double a = fi - static_cast<double>(i), b = fj - static_cast<double>(j);
    return (1 - a) * (1 - b) * at(i, j) + a * (1 - b) * at(i + 1, j) + (1 - a) * b * at(i, j + 1) + a * b * at(i + 1, j + 1);
}

double Grid2D::max_abs() const {
    double m = 0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

Grid2D grid_wigner(const GridSignal& f, const GridSignal& g, std::size_t oversample) {
    if (f.size() != g.size() || f.extent != g.extent) throw GridMismatch("signals live on different grids");
    if (oversample == 0) throw std::invalid_argument("oversample must be positive");
    const std::size_t n = f.size(), m = n * oversample;
    const double h = f.step();
    Grid2D out;
    out.nx = n;
    out.nw = m;
    out.x0 = -f.extent;
    out.dx = h;
    out.dw = 1.0 / (2.0 * static_cast<double>(m) * h);
    out.w0 = -static_cast<double>(m / 2) * out.dw;
    out.values.assign(n * m, Complex(0.0));

    FftPlan plan(m, FFTW_FORWARD);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        FftBuffer buf(m);
        for (std::size_t k = begin; k < end; ++k) {
            buf.zero();
            const std::size_t reach = std::min(k, n - 1 - k);
            for (std::size_t s = 0; s <= reach; ++s) {
                buf[s] = f.samples[k + s] * std::conj(g.samples[k - s]);
                if (s) buf[m - s] = f.samples[k - s] * std::conj(g.samples[k + s]);
            }
            plan.run(buf);
            for (std::size_t j = 0; j < m; ++j) out.at(k, j) = 2.0 * h * buf[(j + m - m / 2) % m];
        }
    });
    return out;
}

GridSignal grid_frft(const GridSignal& f, double alpha) {
    if (!(alpha > -2.0 && alpha < 2.0)) throw std::invalid_argument("fractional order must lie in (-2, 2)");
    if (alpha == 0.0) return f;
    const double a = std::abs(alpha);
    if (a >= 0.5 && a <= 1.5) return chirp_frft(f, alpha);
    // Near the identity or the reflection the chirps are under-sampled, so
    // step through a quarter turn first.
    if (a < 0.5) return chirp_frft(chirp_frft(f, alpha + 1.0), -1.0);
    const double quarter = alpha > 0 ? 1.0 : -1.0;
    return chirp_frft(chirp_frft(f, alpha - quarter), quarter);
}

GridSignal direct_dft(const GridSignal& f) {
    const std::size_t n = f.size();
    const double h = f.step();
    GridSignal out(n, f.extent);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            Complex acc = 0.0;
            const double u = f.t(k);
            for (std::size_t j = 0; j < n; ++j) acc += f.samples[j] * cis(-2.0 * kPi * u * f.t(j));
            out.samples[k] = h * acc;
        }
    });
    return out;
}

double metaplectic_rotation_check(const GridSignal& f, double alpha, std::size_t oversample) {
    const Grid2D wf = grid_wigner(f, f, oversample);
    const Grid2D wg = grid_wigner(grid_frft(f, alpha), grid_frft(f, alpha), oversample);
    const double theta = alpha * kPi / 2.0, c = std::cos(theta), s = std::sin(theta);
    const double lim = f.extent / 2.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < wg.nx; ++i) {
        const double x = wg.x(i);
        if (std::abs(x) > lim) continue;
        for (std::size_t j = 0; j < wg.nw; ++j) {
            const double w = wg.w(j);
            if (std::abs(w) > lim) continue;
            const Complex expect = wf.interpolate(c * x - s * w, s * x + c * w);
            worst = std::max(worst, std::abs(wg.at(i, j) - expect));
        }
    }
    return worst;
}

Grid2D smoothed_prediction(const PhaseSpace& exact, const Grid2D& like, double sigma) {
    if (exact.dim != 1) throw DimensionMismatch("grid comparison is one-dimensional");
    Grid2D out = like;
    std::fill(out.values.begin(), out.values.end(), Complex(0.0));

    // Group terms by their x-atom; each group carries an exponential sum in w.
    struct Group {
        double x;
        int order;
        std::vector<Complex> profile;  // over w_j
    };
    std::map<std::pair<Rational, int>, Group> groups;
    for (const auto& t : exact.terms) {
        if (t.rank() != 0 || t.mode[0] != Mode::atomic || t.mode[1] != Mode::exponential)
            throw std::invalid_argument("smoothed prediction needs finite x-atoms with exponential w-dependence");
        const int ord = t.order.empty() ? 0 : t.order[0];
        const int mono = t.monomial.size() > 1 ? t.monomial[1] : 0;
        auto& g = groups[{t.offset[0], ord}];
        if (g.profile.empty()) g = Group{to_double(t.offset[0]), ord, std::vector<Complex>(like.nw, 0.0)};
        const Complex w = t.weight.materialize();
        const double q = to_double(t.offset[1]);
        for (std::size_t j = 0; j < like.nw; ++j) {
            const double om = like.w(j);
            g.profile[j] += w * std::pow(Complex(0.0, 2.0 * kPi * om), mono) * cis(2.0 * kPi * om * q);
        }
    }
    // W(G_sigma)(x, w) = (sqrt 2 / sigma) e^{-2 pi x^2 / sigma^2} e^{-2 pi sigma^2 w^2}.
    const GaussAtom kx(0, 0, sigma / std::sqrt(2.0), std::sqrt(2.0) / sigma);
    std::vector<double> kw(like.nw);
    for (std::size_t j = 0; j < like.nw; ++j) kw[j] = std::exp(-2.0 * kPi * sigma * sigma * like.w(j) * like.w(j));
    const double reach = 8.0 * sigma;
    for (const auto& [key, g] : groups) {
        for (std::size_t i = 0; i < like.nx; ++i) {
            const double u = like.x(i) - g.x;
            if (std::abs(u) > reach) continue;
            const Complex kxv = kx.derivative(g.order, u);
            for (std::size_t j = 0; j < like.nw; ++j) out.at(i, j) += kxv * kw[j] * g.profile[j];
        }
    }
    return out;
}

double compare(const PhaseSpace& exact, const Grid2D& grid, double sigma) {
    const Grid2D pred = smoothed_prediction(exact, grid, sigma);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.values.size(); ++i) worst = std::max(worst, std::abs(grid.values[i] - pred.values[i]));
    return worst;
}

void write_csv(std::ostream& os, const Grid2D& g) {
    os << "x,w,re,im\n" << std::setprecision(17);
    for (std::size_t i = 0; i < g.nx; ++i)
        for (std::size_t j = 0; j < g.nw; ++j)
            os << g.x(i) << ',' << g.w(j) << ',' << g.at(i, j).real() << ',' << g.at(i, j).imag() << '\n';
}

void write_csv(std::ostream& os, const GridSignal& s) {
    os << "t,re,im\n" << std::setprecision(17);
    for (std::size_t k = 0; k < s.size(); ++k)
        os << s.t(k) << ',' << s.samples[k].real() << ',' << s.samples[k].imag() << '\n';
}

}  // namespace qcwig
