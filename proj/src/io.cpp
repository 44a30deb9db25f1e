#include "qcwig/io.hpp"

#include <filesystem>
#include <fstream>

#include "qcwig/errors.hpp"

namespace qcwig {

namespace {

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& field, const char* key) { return field.empty() ? key : field + "." + key; }

const Json& member(const Json& j, const std::string& field, const char* key) {
    if (!j.is_object()) throw InputError(field.empty() ? "<root>" : field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(dot(field, key), "missing");
    return *it;
}

const Json& array(const Json& j, const std::string& field) {
    if (!j.is_array()) throw InputError(field, "expected an array");
    return j;
}

std::size_t dim_from_json(const Json& j, const std::string& field, std::size_t fallback = 0) {
    if (!j.contains("dim")) {
        if (fallback) return fallback;
        throw InputError(dot(field, "dim"), "missing");
    }
    const Json& d = j.at("dim");
    if (!d.is_number_integer() || d.get<long>() < 1 || d.get<long>() > 2)
        throw InputError(dot(field, "dim"), "must be 1 or 2");
    return d.get<std::size_t>();
}

MultiIndex multi_index_from_json(const Json& j, const std::string& field, std::size_t len) {
    array(j, field);
    if (j.size() != len) throw InputError(field, "expected " + std::to_string(len) + " entries");
    MultiIndex m;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer() || j[i].get<long>() < 0 || j[i].get<long>() > kMaxOrder)
            throw InputError(at(field, i), "expected an integer in [0, " + std::to_string(kMaxOrder) + "]");
        m.push_back(j[i].get<int>());
    }
    return m;
}

double number(const Json& j, const std::string& field) {
    if (!j.is_number()) throw InputError(field, "expected a number");
    return j.get<double>();
}

RVec sized_rvec(const Json& j, const std::string& field, std::size_t len) {
    RVec v = rvec_from_json(j, field);
    if (v.size() != len) throw InputError(field, "expected " + std::to_string(len) + " entries");
    return v;
}

const char* mode_name(Mode m) { return m == Mode::atomic ? "atomic" : "exponential"; }

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InputError(field, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(field, e.what());
    }
}

Json to_json(const RVec& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}

RVec rvec_from_json(const Json& j, const std::string& field) {
    array(j, field);
    RVec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], at(field, i)));
    return v;
}

Json to_json(const RMat& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

RMat rmat_from_json(const Json& j, const std::string& field) {
    array(j, field);
    if (j.empty()) throw InputError(field, "empty matrix");
    std::vector<RVec> rows;
    for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(rvec_from_json(j[i], at(field, i)));
    RMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw InputError(at(field, i), "ragged matrix row");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rows[i][k];
    }
    return m;
}

Json to_json(const Weight& w) {
    Json o{{"re", w.value.real()}, {"im", w.value.imag()}};
    if (w.scale != 1) o["scale"] = to_json(w.scale);
    if (w.phase != 0) o["phase"] = to_json(w.phase);
    return o;
}

Weight weight_from_json(const Json& j, const std::string& field) {
    const double re = number(member(j, field, "re"), dot(field, "re"));
    const double im = number(member(j, field, "im"), dot(field, "im"));
    Rational scale = j.contains("scale") ? rational_from_json(j["scale"], dot(field, "scale")) : Rational(1);
    Rational phase = j.contains("phase") ? rational_from_json(j["phase"], dot(field, "phase")) : Rational(0);
    return Weight(Complex(re, im), scale, phase);
}

Json to_json(const AtomicDistribution& mu) {
    Json atoms = Json::array(), combs = Json::array();
    for (const auto& a : mu.atoms)
        atoms.push_back({{"point", to_json(a.location)}, {"order", a.order}, {"coeff", to_json(a.coeff)}});
    for (const auto& c : mu.combs) {
        Json step = mu.dim == 1 ? to_json(RVec{c.step(0, 0)}) : to_json(c.step);
        combs.push_back({{"step", step},
                         {"shift", to_json(c.shift)},
                         {"modulation", to_json(c.modulation)},
                         {"coeff", to_json(c.coeff)}});
    }
    return {{"dim", mu.dim}, {"atoms", atoms}, {"combs", combs}, {"growth", mu.growth}};
}

AtomicDistribution measure_from_json(const Json& j) {
    AtomicDistribution mu;
    mu.dim = dim_from_json(j, "");
    const std::size_t d = mu.dim;
    if (j.contains("atoms")) {
        const Json& atoms = array(j["atoms"], "atoms");
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            const std::string f = at("atoms", i);
            DeltaAtom a;
            a.location = sized_rvec(member(atoms[i], f, "point"), dot(f, "point"), d);
            a.order = atoms[i].contains("order") ? multi_index_from_json(atoms[i]["order"], dot(f, "order"), d)
                                                 : MultiIndex(d, 0);
            a.coeff = atoms[i].contains("coeff") ? weight_from_json(atoms[i]["coeff"], dot(f, "coeff")) : Weight();
            mu.atoms.push_back(std::move(a));
        }
    }
    if (j.contains("combs")) {
        const Json& combs = array(j["combs"], "combs");
        for (std::size_t i = 0; i < combs.size(); ++i) {
            const std::string f = at("combs", i);
            const Json& js = member(combs[i], f, "step");
            CombTerm c;
            if (js.is_array() && !js.empty() && !js[0].is_array()) {
                RVec diag = sized_rvec(js, dot(f, "step"), d);
                c.step = RMat::diagonal(diag);
            } else {
                c.step = rmat_from_json(js, dot(f, "step"));
                if (c.step.rows() != d || c.step.cols() != d) throw InputError(dot(f, "step"), "wrong shape");
            }
            if (c.step.det() == 0) throw InputError(dot(f, "step"), "singular lattice");
            c.shift = combs[i].contains("shift") ? sized_rvec(combs[i]["shift"], dot(f, "shift"), d) : RVec(d, 0);
            c.modulation = combs[i].contains("modulation")
                               ? sized_rvec(combs[i]["modulation"], dot(f, "modulation"), d)
                               : RVec(d, 0);
            c.coeff = combs[i].contains("coeff") ? weight_from_json(combs[i]["coeff"], dot(f, "coeff")) : Weight();
            mu.combs.push_back(std::move(c));
        }
    }
    if (j.contains("growth")) {
        if (!j["growth"].is_number_integer() || j["growth"].get<long>() < 0)
            throw InputError("growth", "expected a nonnegative integer");
        mu.growth = j["growth"].get<int>();
    }
    return mu;
}

Json to_json(const PhaseSpace& psi) {
    Json terms = Json::array();
    for (const auto& t : psi.terms) {
        Json gens = Json::array();
        for (std::size_t c = 0; c < t.gens.cols(); ++c) gens.push_back(to_json(t.gens.column(c)));
        Json modes = Json::array();
        for (Mode m : t.mode) modes.push_back(mode_name(m));
        terms.push_back({{"offset", to_json(t.offset)},
                         {"generators", gens},
                         {"character", to_json(t.character)},
                         {"mode", modes},
                         {"order", t.order},
                         {"monomial", t.monomial},
                         {"coeff", to_json(t.weight)}});
    }
    return {{"dim", psi.dim},
            {"resolution", psi.is_resolved() ? "atomic" : "semi-atomic"},
            {"unresolved_poisson", psi.unresolved_poisson},
            {"terms", terms}};
}

PhaseSpace phase_space_from_json(const Json& j) {
    PhaseSpace psi;
    psi.dim = dim_from_json(j, "");
    const std::size_t n = 2 * psi.dim;
    if (j.contains("unresolved_poisson")) {
        if (!j["unresolved_poisson"].is_boolean()) throw InputError("unresolved_poisson", "expected a boolean");
        psi.unresolved_poisson = j["unresolved_poisson"].get<bool>();
    }
    const Json& terms = array(member(j, "", "terms"), "terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string f = at("terms", i);
        const Json& jt = terms[i];
        Term t;
        t.offset = sized_rvec(member(jt, f, "offset"), dot(f, "offset"), n);
        const Json& gens = jt.contains("generators") ? array(jt["generators"], dot(f, "generators")) : Json::array();
        t.gens = RMat(n, gens.size());
        for (std::size_t c = 0; c < gens.size(); ++c)
            t.gens.set_column(c, sized_rvec(gens[c], at(dot(f, "generators"), c), n));
        t.character = jt.contains("character") ? sized_rvec(jt["character"], dot(f, "character"), gens.size())
                                               : RVec(gens.size(), 0);
        t.order = jt.contains("order") ? multi_index_from_json(jt["order"], dot(f, "order"), n) : MultiIndex(n, 0);
        t.monomial =
            jt.contains("monomial") ? multi_index_from_json(jt["monomial"], dot(f, "monomial"), n) : MultiIndex(n, 0);
        t.mode.assign(n, Mode::atomic);
        if (jt.contains("mode")) {
            const Json& jm = array(jt["mode"], dot(f, "mode"));
            if (jm.size() != n) throw InputError(dot(f, "mode"), "expected " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) {
                const std::string s = jm[c].is_string() ? jm[c].get<std::string>() : "";
                if (s == "atomic")
                    t.mode[c] = Mode::atomic;
                else if (s == "exponential")
                    t.mode[c] = Mode::exponential;
                else
                    throw InputError(at(dot(f, "mode"), c), "expected \"atomic\" or \"exponential\"");
            }
        }
        t.weight = jt.contains("coeff") ? weight_from_json(jt["coeff"], dot(f, "coeff")) : Weight();
        psi.terms.push_back(std::move(t));
    }
    return psi;
}

Json to_json(const PointSet& s) {
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(to_json(p));
    return {{"dim", s.points.empty() ? 1 : s.points[0].size()}, {"points", pts}};
}

PointSet point_set_from_json(const Json& j) {
    const std::size_t d = dim_from_json(j, "", 1);
    const Json& pts = array(member(j, "", "points"), "points");
    std::vector<RVec> v;
    for (std::size_t i = 0; i < pts.size(); ++i) v.push_back(sized_rvec(pts[i], at("points", i), d));
    try {
        return PointSet(std::move(v));
    } catch (const std::invalid_argument& e) {
        throw InputError("points", e.what());
    }
}

Json to_json(const NamedTransform& t) {
    Json o{{"dim", t.map.dim()}, {"T", to_json(t.map.matrix())}};
    if (t.kind != TransformKind::custom) o["kind"] = to_string(t.kind);
    return o;
}

NamedTransform transform_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("<root>", "expected an object");
    if (j.contains("kind") && !j.contains("T")) {
        const std::size_t d = dim_from_json(j, "", 1);
        if (!j["kind"].is_string()) throw InputError("kind", "expected a string");
        try {
            return NamedTransform::make(parse_transform_kind(j["kind"].get<std::string>()), d);
        } catch (const std::invalid_argument& e) {
            throw InputError("kind", e.what());
        }
    }
    const std::size_t d = dim_from_json(j, "", 1);
    RMat t = rmat_from_json(member(j, "", "T"), "T");
    if (t.rows() != 2 * d || t.cols() != 2 * d) throw InputError("T", "expected a " + std::to_string(2 * d) + "x" +
                                                                     std::to_string(2 * d) + " matrix");
    if (t.det() == 0) throw InputError("T", "matrix is singular");
    return NamedTransform::custom(std::move(t));
}

Json to_json(const SetDescriptor& s) {
    const char* kind = s.kind() == SetDescriptor::Kind::finite         ? "finite"
                       : s.kind() == SetDescriptor::Kind::lattice_union ? "lattice_union"
                                                                         : "full_line";
    Json cosets = Json::array();
    for (const auto& c : s.cosets) {
        Json basis = Json::array();
        for (std::size_t k = 0; k < c.basis.cols(); ++k) basis.push_back(to_json(c.basis.column(k)));
        cosets.push_back({{"offset", to_json(c.offset)}, {"basis", basis}});
    }
    auto gap = s.min_gap();
    return {{"dim", s.dim},
            {"kind", kind},
            {"cosets", cosets},
            {"min_gap", gap ? to_json(*gap) : Json("inf")},
            {"description", s.describe()}};
}

namespace {

Json gap_json(const std::optional<Rational>& g) { return g ? to_json(*g) : Json("inf"); }

}  // namespace

Json to_json(const SupportPredicates& p) {
    return {{"pi1_ud", p.pi1_ud},
            {"pi2_ud", p.pi2_ud},
            {"gap1", gap_json(p.gap1)},
            {"gap2", gap_json(p.gap2)},
            {"det_A_nonzero", p.det_a},
            {"det_B_nonzero", p.det_b},
            {"det_C_nonzero", p.det_c},
            {"det_D_nonzero", p.det_d},
            {"mu_ud_forced", p.mu_ud_forced},
            {"nu_ud_forced", p.nu_ud_forced},
            {"muhat_ud_forced", p.muhat_ud_forced},
            {"nuhat_ud_forced", p.nuhat_ud_forced}};
}

Json to_json(const HarnessReport& r) {
    Json o{{"branch", r.branch},
           {"hypothesis_product_support", r.hypothesis_product_support},
           {"delta_A", gap_json(r.delta_A)},
           {"delta_B", gap_json(r.delta_B)},
           {"mu_is_measure", r.mu_is_measure},
           {"nu_is_measure", r.nu_is_measure},
           {"spectra_ud", r.spectra_ud},
           {"verdict", to_string(r.verdict)}};
    if (r.supports_contained) o["supports_contained"] = *r.supports_contained;
    if (!r.note.empty()) o["note"] = r.note;
    return o;
}

Json to_json(const CanonicalForm& f) {
    Json cosets = Json::array();
    for (const auto& c : f.cosets) {
        Json terms = Json::array();
        for (const auto& t : c.terms)
            terms.push_back({{"frequency", to_json(t.frequency)},
                             {"coeff", {{"re", t.coeff.real()}, {"im", t.coeff.imag()}}}});
        cosets.push_back({{"shift", to_json(c.shift)}, {"polynomial", terms}});
    }
    return {{"step", to_json(f.step)}, {"cosets", cosets}};
}

CanonicalForm canonical_form_from_json(const Json& j) {
    CanonicalForm f;
    f.step = rational_from_json(member(j, "", "step"), "step");
    if (f.step <= 0) throw InputError("step", "must be positive");
    const Json& cs = array(member(j, "", "cosets"), "cosets");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string fi = at("cosets", i);
        CosetPolynomial p;
        p.shift = rational_from_json(member(cs[i], fi, "shift"), dot(fi, "shift"));
        const Json& poly = array(member(cs[i], fi, "polynomial"), dot(fi, "polynomial"));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            const std::string fk = at(dot(fi, "polynomial"), k);
            Weight w = weight_from_json(member(poly[k], fk, "coeff"), dot(fk, "coeff"));
            p.terms.push_back(
                TrigTerm{rational_from_json(member(poly[k], fk, "frequency"), dot(fk, "frequency")), w.materialize()});
        }
        f.cosets.push_back(std::move(p));
    }
    return f;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path, std::string("not valid JSON: ") + e.what());
    }
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace qcwig
