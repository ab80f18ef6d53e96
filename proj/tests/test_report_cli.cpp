#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qrlab/map_file.hpp"
#include "qrlab/report.hpp"

using namespace qrlab;

namespace {

VerificationReport sample_report() {
    VerificationReport r;
    r.theorem_id = "theorem-2.2a-disk";
    r.params = {{"p", 1.5}, {"K", 1.2222222222222223}, {"k_sup", 0.1}};
    r.lhs = 0.12345678901234567;
    r.rhs = 3.0777682550041077;
    r.constant_used = 3.0777682550041077;
    r.hypotheses = {{"initial_angle_strict", true},
                    {"range_avoids_negative_axis", true},
                    {"quasiregular", true}};
    r.grid_angles = 4096;
    r.grid_radial = 256;
    r.notes = "reference \"quoted\" note";
    r.finalize();
    return r;
}

}  // namespace

TEST_CASE("report invariant") {
    VerificationReport r = sample_report();
    CHECK(r.pass);
    CHECK(r.applicable);
    CHECK(*r.ratio == r.lhs / r.rhs);

    r.hypotheses[1].second = false;
    r.finalize();
    CHECK_FALSE(r.applicable);
    CHECK_FALSE(r.pass);
    CHECK(r.notes.rfind("NOT-APPLICABLE", 0) == 0);

    VerificationReport zero;
    zero.theorem_id = "x";
    zero.lhs = 1.0;
    zero.rhs = 0.0;
    zero.finalize();
    CHECK_FALSE(zero.ratio.has_value());
}

TEST_CASE("json round trip is exact") {
    const VerificationReport r = sample_report();
    const std::string text = to_json(r);
    const VerificationReport back = report_from_json(text);
    CHECK(reports_equal(r, back));
    CHECK(to_json(back) == text);

    const std::vector<VerificationReport> many{r, r};
    const auto back_many = reports_from_json(to_json(many));
    REQUIRE(back_many.size() == 2);
    CHECK(reports_equal(back_many[0], r));
}

TEST_CASE("17-digit formatting round-trips doubles") {
    for (double v : {1.0 / 3.0, 2.2250738585072014e-308, 0.1, 123456789.123456789,
                     3.0777682550041077, 1e-300}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("csv rows") {
    const VerificationReport r = sample_report();
    CHECK(csv_header().rfind("theorem_id,", 0) == 0);
    const std::string row = to_csv_row(r);
    CHECK(row.find("theorem-2.2a-disk") == 0);
    CHECK(row.find(",1,1,4096,256,") != std::string::npos);
}

TEST_CASE("planar map files parse") {
    const MapFile mf = parse_map_json(
        R"({"kind":"planar","g":[[0,0],[1,0]],"h":[[0,0],[0.5,0.25]]})");
    CHECK(mf.kind == MapFile::Kind::planar);
    CHECK(mf.planar.g.coeff(1) == cplx(1.0, 0.0));
    CHECK(mf.planar.h.coeff(1) == cplx(0.5, 0.25));

    const MapFile no_h = parse_map_json(R"({"kind":"planar","g":[[2,0]]})");
    CHECK(no_h.planar.h.is_zero());
}

TEST_CASE("ball map files parse and validate") {
    const MapFile mf = parse_map_json(
        R"({"kind":"ball-linear","n":2,"A":[1,0,0,2],"b":[0.1,0.2]})");
    CHECK(mf.kind == MapFile::Kind::ball_linear);
    CHECK(mf.ball.A[3] == 2.0);

    CHECK_THROWS_WITH_AS(parse_map_json(R"({"kind":"planar"})"),
                         doctest::Contains("field 'g'"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_map_json(R"({"kind":"planar","g":[[1,0],[2]]})"),
                         doctest::Contains("entry 1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_map_json(R"({"kind":"torus"})"),
                         doctest::Contains("unknown kind"), std::invalid_argument);
    CHECK_THROWS_AS(parse_map_json(R"({"kind":"ball-linear","n":3,"A":[1,0,0,2],"b":[0,0]})"),
                    std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_map_json("{nonsense"), doctest::Contains("map file:"),
                         std::invalid_argument);
}
