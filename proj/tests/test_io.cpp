#include <doctest.h>

#include <json.hpp>

#include "test_helpers.hpp"
#include "torictodd/io.hpp"
#include "torictodd/riemann_roch.hpp"

using namespace torictodd;

TEST_CASE("fan files round-trip") {
    const std::string text = R"({
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, -1]],
        "max_cones": [[0, 1], [1, 2], [2, 0]],
        "name": "P2"
    })";
    FanFile f = parse_fan_file(text);
    CHECK(f.dim == 2);
    CHECK(f.rays.size() == 3);
    CHECK(f.name == "P2");
    FanFile again = parse_fan_file(serialize_fan_file(f));
    CHECK(f == again);
}

TEST_CASE("the name field is optional") {
    FanFile f = parse_fan_file(R"({"dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]})");
    CHECK(f.name.empty());
    CHECK(load_fan(f).is_complete());
}

TEST_CASE("malformed fan files raise parse errors") {
    CHECK_THROWS_AS(parse_fan_file("not json"), parse_error);
    CHECK_THROWS_AS(parse_fan_file("[1, 2]"), parse_error);
    CHECK_THROWS_AS(parse_fan_file(R"({"rays": [[1]], "max_cones": [[0]]})"), parse_error);
    CHECK_THROWS_AS(parse_fan_file(R"({"dim": 1, "rays": [[1.5]], "max_cones": [[0]]})"),
                    parse_error);
    CHECK_THROWS_AS(parse_fan_file(R"({"dim": "two", "rays": [[1]], "max_cones": [[0]]})"),
                    parse_error);
}

TEST_CASE("divisor files round-trip") {
    DivisorFile d = parse_divisor_file(R"({"coeffs": [3, -1, 0]})");
    CHECK(d.coeffs == std::vector<Int>{Int(3), Int(-1), Int(0)});
    CHECK(parse_divisor_file(serialize_divisor_file(d)) == d);
    CHECK_THROWS_AS(parse_divisor_file(R"({"coeffs": "nope"})"), parse_error);
    CHECK_THROWS_AS(parse_divisor_file(R"({})"), parse_error);
}

TEST_CASE("divisor length is checked against the fan") {
    Fan f = make_p2();
    DivisorFile short_file{{Int(1)}};
    CHECK_THROWS_AS(load_divisor(short_file, f), parse_error);
    DivisorFile ok{{Int(1), Int(0), Int(2)}};
    CHECK(load_divisor(ok, f).coeffs.size() == 3);
}

TEST_CASE("corpus files load and validate") {
    for (const char* name :
         {"p1", "p2", "p1xp1", "hirzebruch1", "p3", "p112", "p123", "nonpolytopal3"}) {
        FanFile file = read_fan_file(data_path(std::string("fans/") + name + ".json"));
        Fan f = load_fan(file);
        CHECK(f.is_complete());
        CHECK(!f.name().empty());
        Fan t = load_fan(file, true);
        CHECK(t.ray_count() == f.ray_count());
    }
    for (const char* name : {"p1_d0", "p2_h", "p2_zero", "p2_antih", "p1xp1_ruling",
                             "p112_u0", "p123_d2"}) {
        DivisorFile d =
            read_divisor_file(data_path(std::string("divisors/") + name + ".json"));
        CHECK(!d.coeffs.empty());
    }
}

TEST_CASE("missing files raise parse errors") {
    CHECK_THROWS_AS(read_fan_file(data_path("fans/no_such_fan.json")), parse_error);
}

TEST_CASE("todd report serialization") {
    Fan f = make_p1();
    ToddReport rep = todd_class(f);
    nlohmann::json j = nlohmann::json::parse(todd_report_json(rep));
    REQUIRE(j.is_object());
    REQUIRE(j.contains("0"));
    REQUIRE(j.contains("1"));
    CHECK(j["0"][0]["cone"] == nlohmann::json::array());
    CHECK(j["0"][0]["coeff"] == "1");
    bool found_half = false;
    for (const auto& term : j["1"])
        if (term["coeff"] == "1/2") found_half = true;
    CHECK(found_half);
}

TEST_CASE("chi serialization") {
    nlohmann::json j = nlohmann::json::parse(chi_json(Rat(6)));
    CHECK(j["chi"] == "6");
    nlohmann::json h = nlohmann::json::parse(chi_json(make_rat(-3, 2)));
    CHECK(h["chi"] == "-3/2");
}

TEST_CASE("ehrhart serialization with and without counts") {
    Fan f = make_p1();
    EhrhartResult r = ehrhart(f, Divisor{{Int(1), Int(0)}}, 2);
    nlohmann::json bare = nlohmann::json::parse(ehrhart_json(r));
    REQUIRE(bare.is_array());
    REQUIRE(bare.size() == 3);
    CHECK(bare[1]["n"] == 1);
    CHECK(bare[1]["chi"] == "2");
    CHECK(!bare[1].contains("count"));

    std::vector<Int> counts = {Int(1), Int(2), Int(3)};
    nlohmann::json with = nlohmann::json::parse(ehrhart_json(r, &counts));
    CHECK(with[2]["count"] == "3");
    CHECK(with[2]["match"] == true);
}
