// qcwig command-line front end.
//
// Exit status: 0 success, 1 a check or verification failed, 2 bad input.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "qcwig/errors.hpp"
#include "qcwig/io.hpp"
#include "qcwig/matrix_wigner.hpp"
#include "qcwig/numeric_oracle.hpp"
#include "qcwig/quasicrystal.hpp"
#include "qcwig/verify.hpp"
#include "qcwig/wigner.hpp"

using namespace qcwig;

namespace {

struct Options {
    std::string input, output, nu, matrix, kind, delta, window, format = "json";
    std::size_t grid_n = 1024;
    double extent = 8.0, sigma = 0.1;
    std::uint64_t seed = 0;
};

// Failed checks still write their report before exiting with 1.
struct CheckFailed {};

void emit(const Options& o, const std::string& text) {
    if (o.output.empty() || o.output == "-")
        std::cout << text;
    else
        write_file_atomic(o.output, text);
}

void emit(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

// Re-raises a parse error with the file it came from prepended to the field.
[[noreturn]] void rethrow_in(const std::string& path, const InputError& e) {
    std::string msg = e.what();
    const std::string prefix = e.field + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    throw InputError(path + ": " + e.field, msg);
}

std::string required(const std::string& value, const char* flag) {
    if (value.empty()) throw InputError(flag, "required");
    return value;
}

AtomicDistribution load_measure(const std::string& path, const char* flag) {
    const Json j = read_json_file(required(path, flag));
    try {
        return measure_from_json(j);
    } catch (const InputError& e) {
        rethrow_in(path, e);
    }
}

Rational parse_flag_rational(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(flag, e.what());
    }
}

std::optional<Rational> delta_of(const Options& o) {
    if (o.delta.empty()) return std::nullopt;
    Rational d = parse_flag_rational(o.delta, "--delta");
    if (d <= 0) throw InputError("--delta", "must be positive");
    return d;
}

std::pair<Rational, Rational> window_of(const Options& o, const Rational& lo, const Rational& hi) {
    if (o.window.empty()) return {lo, hi};
    const auto colon = o.window.find(':');
    if (colon == std::string::npos) throw InputError("--window", "expected lo:hi");
    Rational a = parse_flag_rational(o.window.substr(0, colon), "--window");
    Rational b = parse_flag_rational(o.window.substr(colon + 1), "--window");
    if (!(a < b)) throw InputError("--window", "lo must be below hi");
    return {a, b};
}

NamedTransform transform_of(const Options& o, std::size_t dim) {
    if (!o.matrix.empty() && !o.kind.empty()) throw InputError("--matrix", "give either --matrix or --kind");
    if (!o.matrix.empty()) {
        const Json j = read_json_file(o.matrix);
        try {
            NamedTransform t = transform_from_json(j);
            if (t.map.dim() != dim) throw InputError("dim", "transform dimension does not match the measures");
            return t;
        } catch (const InputError& e) {
            rethrow_in(o.matrix, e);
        }
    }
    try {
        const TransformKind k = parse_transform_kind(o.kind.empty() ? "classical" : o.kind);
        if (k == TransformKind::custom) throw InputError("--kind", "custom transforms need --matrix");
        return NamedTransform::make(k, dim);
    } catch (const std::invalid_argument& e) {
        throw InputError("--kind", e.what());
    }
}

// --- subcommands ---

void run_wigner(const Options& o) {
    const auto mu = load_measure(o.input, "--input");
    const auto nu = o.nu.empty() ? mu : load_measure(o.nu, "--nu");
    emit(o, to_json(cross_wigner(mu, nu)));
}

void run_matrix_wigner(const Options& o) {
    const auto mu = load_measure(o.input, "--input");
    const auto nu = o.nu.empty() ? mu : load_measure(o.nu, "--nu");
    const NamedTransform t = transform_of(o, mu.dim);
    emit(o, to_json(matrix_wigner(t.map, mu, nu)));
}

void run_fourier(const Options& o) {
    const auto mu = load_measure(o.input, "--input");
    const Spectrum s = fourier(mu);
    if (s.is_atomic()) {
        emit(o, to_json(s.atomic_part));
        return;
    }
    // Finite atoms transform to exponentials; report them without pretending
    // the result is a measure.
    Json exps = Json::array();
    for (const auto& t : s.exponentials)
        exps.push_back({{"frequency", to_json(t.offset)}, {"monomial", t.monomial}, {"coeff", to_json(t.weight)}});
    emit(o, Json{{"dim", s.dim}, {"atomic", false}, {"combs", to_json(s.atomic_part)}, {"exponentials", exps}});
}

void run_check_ud(const Options& o) {
    const Json j = read_json_file(required(o.input, "--input"));
    PointSet set;
    try {
        set = j.contains("points") ? point_set_from_json(j) : atom_support(measure_from_json(j));
    } catch (const InputError& e) {
        rethrow_in(o.input, e);
    }
    const Rational delta = delta_of(o).value_or(Rational(0));
    if (delta == 0) throw InputError("--delta", "required");
    const auto gap = min_gap(set);
    const bool ud = is_uniformly_discrete(set, delta);
    emit(o, Json{{"points", set.size()},
                 {"min_gap", gap ? to_json(*gap) : Json("inf")},
                 {"delta", to_json(delta)},
                 {"uniformly_discrete", ud}});
    if (!ud) throw CheckFailed{};
}

void run_check_midpoint(const Options& o) {
    const auto mu = load_measure(o.input, "--input");
    const auto w = wigner(mu);
    const SetDescriptor a = support(mu);
    bool ok = false;
    std::string note;
    try {
        ok = midpoint_closure_check(w, a);
    } catch (const std::domain_error& e) {
        note = e.what();
    }
    Json r{{"support", to_json(a)}, {"x_projection", to_json(project(w, 1))}, {"midpoint_closed", ok}};
    if (!note.empty()) r["note"] = note;
    emit(o, r);
    if (!ok) throw CheckFailed{};
}

void run_check_product_support(const Options& o) {
    const auto mu = load_measure(o.input, "--input");
    const auto nu = o.nu.empty() ? mu : load_measure(o.nu, "--nu");
    const NamedTransform t = transform_of(o, mu.dim);
    const PhaseSpace w = matrix_wigner(t.map, mu, nu);
    const HarnessReport h = theorem_harness(mu, nu, t, delta_of(o));
    Json r{{"transform", to_string(t.kind)},
           {"resolved", w.is_resolved()},
           {"pi1", to_json(project(w, 1))},
           {"pi2", to_json(project(w, 2))},
           {"product_support", h.hypothesis_product_support}};
    if (mu.dim == 1 && !project(w, 1).full_line) {
        try {
            r["predicates"] = to_json(support_predicates(t.map, w, delta_of(o)));
        } catch (const IndeterminateProjection&) {
        }
    }
    emit(o, r);
    if (!h.hypothesis_product_support) throw CheckFailed{};
}

void run_check_canonical_form(const Options& o) {
    const auto mu = load_measure(o.input, "--input");
    Rational lo = -10, hi = 10;
    if (!mu.atoms.empty()) {
        lo = hi = mu.atoms.front().location[0];
        for (const auto& a : mu.atoms) {
            lo = std::min(lo, a.location[0]);
            hi = std::max(hi, a.location[0]);
        }
    }
    std::tie(lo, hi) = window_of(o, lo, hi);
    CanonicalForm f;
    try {
        f = fit_canonical_form(mu);
    } catch (const NotLatticeSupported& e) {
        emit(o, Json{{"fitted", false}, {"reason", "not-lattice-supported"}, {"detail", e.what()}});
        throw CheckFailed{};
    } catch (const AperiodicCoefficients& e) {
        emit(o, Json{{"fitted", false}, {"reason", "aperiodic-coefficients"}, {"detail", e.what()}});
        throw CheckFailed{};
    }
    const bool ok = resynthesis_matches(mu, f, lo, hi);
    emit(o, Json{{"fitted", true},
                 {"form", to_json(f)},
                 {"window", {to_json(lo), to_json(hi)}},
                 {"resynthesis_matches", ok}});
    if (!ok) throw CheckFailed{};
}

void run_harness(const Options& o) {
    const auto mu = load_measure(o.input, "--mu");
    const auto nu = o.nu.empty() ? mu : load_measure(o.nu, "--nu");
    const NamedTransform t = transform_of(o, mu.dim);
    const HarnessReport r = theorem_harness(mu, nu, t, delta_of(o));
    emit(o, to_json(r));
    if (r.verdict == HarnessVerdict::violation) throw CheckFailed{};
}

void run_oracle(const Options& o) {
    const auto mu = load_measure(o.input, "--input");
    const auto nu = o.nu.empty() ? mu : load_measure(o.nu, "--nu");
    if (mu.dim != 1 || nu.dim != 1) throw InputError("dim", "the grid oracle is one-dimensional");
    if (o.sigma <= 0) throw InputError("--sigma", "must be positive");
    if (o.extent <= 0) throw InputError("--extent", "must be positive");
    GridSignal f, g;
    try {
        f = sample_measure(mu, o.sigma, o.grid_n, o.extent);
        g = sample_measure(nu, o.sigma, o.grid_n, o.extent);
    } catch (const std::invalid_argument& e) {
        throw InputError("--grid-n", e.what());
    } catch (const UnderResolved& e) {
        throw InputError("--sigma", e.what());
    }
    const Grid2D w = grid_wigner(f, g);
    if (o.format == "csv") {
        std::ostringstream os;
        write_csv(os, w);
        emit(o, os.str());
        return;
    }
    Json r{{"grid_n", o.grid_n}, {"extent", o.extent}, {"sigma", o.sigma}, {"max_abs", w.max_abs()},
           {"energy", f.energy()}};
    AtomicDistribution mf = mu, nf = nu;
    if (!mu.combs.empty() || !nu.combs.empty()) {
        const Rational edge = comb_window(o.sigma, o.extent);
        mf = truncate_combs(mu, -edge, edge);
        nf = truncate_combs(nu, -edge, edge);
    }
    try {
        r["residual"] = compare(cross_wigner(mf, nf), w, o.sigma);
    } catch (const std::exception& e) {
        r["residual"] = nullptr;
        r["note"] = e.what();
    }
    emit(o, r);
}

void run_verify(const Options& o) {
    Json results = Json::array();
    bool ok = true;
    auto record = [&](const char* suite, const CheckResult& r) {
        std::fprintf(stderr, "[%s] %s: %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", suite, r.name.c_str(),
                     r.seconds, r.detail.c_str());
        results.push_back({{"suite", suite},
                           {"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        ok = ok && r.passed;
    };
    for (int id = 1; id <= kAcceptanceCriteria; ++id) record("acceptance", acceptance_criterion(id, o.seed));
    for (const auto& r : property_suite(o.seed)) record("property", r);
    emit(o, Json{{"seed", o.seed}, {"passed", ok}, {"results", results}});
    if (!ok) throw CheckFailed{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Wigner transforms of atomic distributions and quasicrystal checks"};
    app.require_subcommand(1);
    Options o;

    auto io = [&](CLI::App* c, bool nu) {
        c->add_option("-i,--input", o.input, "Measure file (JSON)");
        c->add_option("-o,--output", o.output, "Output file; stdout when omitted");
        if (nu) c->add_option("--nu", o.nu, "Second measure; defaults to the input");
    };
    auto transform = [&](CLI::App* c) {
        c->add_option("--matrix", o.matrix, "Transform file {\"dim\",\"T\"}");
        c->add_option("--kind", o.kind, "classical | rihaczek | ambiguity");
    };

    auto* w = app.add_subcommand("wigner", "Cross-Wigner transform");
    io(w, true);
    w->callback([&] { run_wigner(o); });

    auto* mw = app.add_subcommand("matrix-wigner", "Matrix-Wigner transform W_T(mu, nu)");
    io(mw, true);
    transform(mw);
    mw->callback([&] { run_matrix_wigner(o); });

    auto* fo = app.add_subcommand("fourier", "Fourier transform of a measure");
    io(fo, false);
    fo->callback([&] { run_fourier(o); });

    auto* check = app.add_subcommand("check", "Structure checks");
    check->require_subcommand(1);
    auto* ud = check->add_subcommand("ud", "Uniform discreteness of a point set or atom support");
    io(ud, false);
    ud->add_option("--delta", o.delta, "Threshold (rational)");
    ud->callback([&] { run_check_ud(o); });
    auto* mid = check->add_subcommand("midpoint", "Midpoint closure of the Wigner x-projection");
    io(mid, false);
    mid->callback([&] { run_check_midpoint(o); });
    auto* prod = check->add_subcommand("product-support", "Product structure of the matrix-Wigner support");
    io(prod, true);
    transform(prod);
    prod->add_option("--delta", o.delta, "Threshold for finite projections");
    prod->callback([&] { run_check_product_support(o); });
    auto* cf = check->add_subcommand("canonical-form", "Fit and resynthesize the lattice-coset form");
    io(cf, false);
    cf->add_option("--window", o.window, "Resynthesis window lo:hi");
    cf->callback([&] { run_check_canonical_form(o); });

    auto* h = app.add_subcommand("harness", "Theorem harness report");
    h->add_option("--mu,-i,--input", o.input, "First measure");
    h->add_option("--nu", o.nu, "Second measure; defaults to mu");
    h->add_option("-o,--output", o.output, "Output file; stdout when omitted");
    h->add_option("--delta", o.delta, "Threshold for finite projections");
    transform(h);
    h->callback([&] { run_harness(o); });

    auto* orc = app.add_subcommand("oracle", "Grid Wigner of the mollified measure against the exact prediction");
    io(orc, true);
    orc->add_option("--grid-n", o.grid_n, "Samples (power of two)");
    orc->add_option("--extent", o.extent, "Half-width L of the grid");
    orc->add_option("--sigma", o.sigma, "Mollifier width");
    orc->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    orc->callback([&] { run_oracle(o); });

    auto* v = app.add_subcommand("verify", "Acceptance criteria and property suites");
    v->add_option("-o,--output", o.output, "Report file; stdout when omitted");
    v->add_option("--seed", o.seed, "Corpus seed");
    v->callback([&] { run_verify(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const CheckFailed&) {
        return 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
