#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"

using namespace qcwig;
using namespace qcwig::test;

namespace {

std::string field_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.field;
    }
    return "";
}

}  // namespace

TEST_CASE("measure file format") {
    const auto j = Json::parse(R"({"dim":1,"atoms":[{"point":["1/2"],"order":[0],"coeff":{"re":1.0,"im":0.0}}],
        "combs":[{"step":["1"],"shift":["0"],"modulation":["0"],"coeff":{"re":1.0,"im":0.0}}],"growth":0})");
    const auto mu = measure_from_json(j);
    CHECK(mu.dim == 1);
    REQUIRE(mu.atoms.size() == 1);
    CHECK(mu.atoms[0].location == RVec{Rational(1, 2)});
    REQUIRE(mu.combs.size() == 1);
    CHECK(mu.combs[0] == comb(1));
    CHECK(measure_from_json(to_json(mu)) == mu);
}

TEST_CASE("round trips are exact") {
    Rng rng(7);
    for (int k = 0; k < 10; ++k) {
        const auto mu = gen::atomic(rng, 4, 2) + gen::combs(rng, 2);
        CHECK(measure_from_json(Json::parse(to_json(mu).dump())) == mu);
        const auto w = cross_wigner(mu, gen::combs(rng, 1));
        CHECK(phase_space_from_json(Json::parse(to_json(w).dump())) == w);
    }
    const auto w2 = wigner(gen::combs(rng, 1, 2));
    CHECK(phase_space_from_json(Json::parse(to_json(w2).dump())) == w2);
    const Weight odd(Complex(0.1, 1.0 / 3.0), Rational(7, 9), Rational(5, 12));
    CHECK(weight_from_json(Json::parse(to_json(odd).dump()), "c") == odd);
}

TEST_CASE("transform files") {
    const auto t = transform_from_json(Json::parse(R"({"dim":1,"T":[["1/2","1"],["-1/2","1"]]})"));
    CHECK(t.map.matrix() == NamedTransform::make(TransformKind::ambiguity, 1).map.matrix());
    CHECK(transform_from_json(Json::parse(R"({"kind":"ambiguity"})")).kind == TransformKind::ambiguity);
    CHECK(field_of([] { transform_from_json(Json::parse(R"({"dim":1,"T":[["1","2"],["2","4"]]})")); }) == "T");
}

TEST_CASE("input errors name the field") {
    CHECK(field_of([] { measure_from_json(Json::parse(R"({"dim":1,"combs":[{"step":["0"],"shift":["0"],"modulation":["0"]}]})")); }) ==
          "combs[0].step");
    CHECK(field_of([] { measure_from_json(Json::parse(R"({"dim":1,"atoms":[{"point":["1/0"],"order":[0]}]})")); }) ==
          "atoms[0].point[0]");
    CHECK(field_of([] { measure_from_json(Json::parse(R"({"dim":3})")); }) == "dim");
    CHECK(field_of([] { measure_from_json(Json::parse(R"({"dim":1,"atoms":[{"point":["x"],"order":[0]}]})")); }) ==
          "atoms[0].point[0]");
    CHECK(field_of([] { read_json_file("/nonexistent/file.json"); }) == "/nonexistent/file.json");
}

TEST_CASE("canonical form and point set files") {
    const auto sum = comb_of(Rational(1, 2), 0, Rational(1, 3)) + comb_of(Rational(1, 3), Rational(1, 7));
    const auto f = fit_canonical_form(sum);
    const auto back = canonical_form_from_json(Json::parse(to_json(f).dump()));
    CHECK(back.step == f.step);
    CHECK(resynthesis_matches(sum, back, -10, 10));

    const auto s = points_1d({0, Rational(1, 2), 3});
    const auto ps = point_set_from_json(to_json(s));
    CHECK(ps.points == s.points);
}

TEST_CASE("atomic file writes") {
    const auto dir = std::filesystem::temp_directory_path() / "qcwig_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.json").string();
    write_file_atomic(path, "{\"a\":1}\n");
    CHECK(read_json_file(path)["a"] == 1);
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
}
