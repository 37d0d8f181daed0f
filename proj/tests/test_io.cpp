#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "agsum/io.hpp"
#include "agsum/verify.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::string data(const std::string& name) { return std::string(AGSUM_TEST_DATA) + "/" + name; }

template <class K = Rational>
Presentation<K> load(const std::string& name) {
    const auto f = read_algebra_file(data(name));
    return to_presentation<K>(f, std::is_same_v<K, Fp> ? FieldSpec::prime(32003) : f.field);
}

}  // namespace

TEST_CASE("fixture files parse to the expected algebras") {
    const auto A = read_algebra_file(data("two_factor_A.json"));
    CHECK(A.variables == std::vector<std::string>{"x", "y", "z"});
    CHECK(A.field.name() == "QQ");
    CHECK(A.ideal == std::vector<std::string>{"x^3", "y^4", "z^4"});
    CHECK_FALSE(A.dual_generator.has_value());

    const auto B = load("two_factor_B.json");
    CHECK(strings(B.ideal) == std::vector<std::string>{"u^5", "v^5"});
    REQUIRE(B.dual_generator.has_value());
    CHECK(B.dual_generator->to_string() == "u^4*v^4");

    const auto C = load("three_point_dual.json");
    CHECK(strings(C.ideal) == std::vector<std::string>{"x*y", "x*z", "y*z", "x^3 + y^3", "x^3 + z^3"});

    const auto gf = read_algebra_file(data("gf_x2.json"));
    CHECK(gf.field.name() == "GF(32003)");

    CHECK(tor_betti(load<Fp>("axes_J.json")) == golden::coordinate_axes_table());
}

TEST_CASE("diagnostics name the file and the place") {
    CHECK_THROWS_WITH_AS(read_algebra_file(data("bad_syntax.json")), doctest::Contains("line 3, column"), ParseError);
    CHECK_THROWS_WITH_AS(read_algebra_file(data("bad_both.json")), doctest::Contains("not both"), ParseError);
    CHECK_THROWS_WITH_AS(load("bad_poly.json"), doctest::Contains("field 'ideal[2]'"), ParseError);
    CHECK_THROWS_WITH_AS(load("bad_poly.json"), doctest::Contains("bad_poly.json"), ParseError);
    CHECK_THROWS_WITH_AS(read_algebra_file(data("missing.json")), doctest::Contains("cannot open"), ParseError);

    CHECK_THROWS_WITH_AS(parse_algebra_json(R"({"ideal": ["x"]})"), doctest::Contains("missing field 'variables'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_algebra_json(R"({"variables": ["x"], "ideal": ["x"], "extra": 1})"),
                         doctest::Contains("unknown field 'extra'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_algebra_json(R"({"variables": ["x"], "field": "RR", "ideal": []})"),
                         doctest::Contains("unknown field \"RR\""), ParseError);
    CHECK_THROWS_WITH_AS(parse_algebra_json(R"({"variables": ["x"], "field": {"prime": 4}, "ideal": []})"),
                         doctest::Contains("prime"), ParseError);
    CHECK_THROWS_WITH_AS(parse_algebra_json(R"({"variables": ["x"], "ideal": [3]})"),
                         doctest::Contains("field 'ideal[0]' must be a string"), ParseError);
    CHECK_THROWS_WITH_AS(parse_algebra_json(R"({"variables": ["x"]})"), doctest::Contains("missing field 'ideal'"), ParseError);

    const auto inhom = parse_algebra_json(R"({"variables": ["x", "y"], "ideal": ["x^2 + y"]})", "inline");
    CHECK_THROWS_WITH_AS(to_presentation<Rational>(inhom, FieldSpec::rational()), doctest::Contains("not homogeneous"),
                         ParseError);
    const auto dup = parse_algebra_json(R"({"variables": ["x", "x"], "ideal": []})", "inline");
    CHECK_THROWS_WITH_AS(to_presentation<Rational>(dup, FieldSpec::rational()), doctest::Contains("field 'variables'"),
                         ParseError);
}

TEST_CASE("field overrides") {
    CHECK(parse_field(nlohmann::json("QQ")).name() == "QQ");
    CHECK(parse_field(nlohmann::json::parse(R"({"prime": 7})")).name() == "GF(7)");
    // Coefficients are reduced when a rational file is read over GF(p).
    const auto f = parse_algebra_json(R"({"variables": ["x", "y"], "ideal": ["7*x + y"]})");
    const auto p = to_presentation<Fp>(f, FieldSpec::prime(7));
    CHECK(p.ideal.front().to_string() == "y");
}

TEST_CASE("machine output round-trips") {
    const auto t = golden::connected_sum_table();
    const std::vector<std::size_t> hf = {1, 5, 9, 13, 15, 13, 9, 5, 1};
    const std::vector<std::string> ideal = {"x*u"};
    const auto j = machine_output(&t, &hf, &ideal);
    CHECK(betti_from_json(j) == t);
    CHECK(betti_from_json(nlohmann::json::parse(j.dump())) == t);
    CHECK(j["hilbert"].get<std::vector<std::size_t>>() == hf);
    CHECK(j["poincare"].get<std::string>() == t.poincare().to_string());
    CHECK(j["ideal"].size() == 1);
    CHECK_FALSE(machine_output(&t, nullptr).contains("hilbert"));
    CHECK_THROWS_AS(betti_from_json(nlohmann::json::object()), ParseError);
    CHECK_THROWS_AS(betti_from_json(nlohmann::json::parse(R"({"betti": [[1, 2]]})")), ParseError);
}

TEST_CASE("rendering is deterministic") {
    const auto a = render_betti(golden::fiber_product_table());
    const auto b = render_betti(BettiTable::from_poincare(golden::fiber_product_table().poincare()));
    CHECK(a == b);
    const auto t1 = golden::fiber_product_table(), t2 = golden::fiber_product_table();
    CHECK(machine_output(&t1, nullptr).dump() == machine_output(&t2, nullptr).dump());
}

TEST_CASE("seeded verification is reproducible") {
    VerifyOptions opt;
    opt.seed = 5;
    opt.instances = 4;
    std::ostringstream log1, log2;
    const auto r1 = run_verify(opt, &log1);
    const auto r2 = run_verify(opt, &log2);
    CHECK(log1.str() == log2.str());
    REQUIRE(r1.instances.size() == 4);
    CHECK(r1.passed());
    CHECK(r1.failures() == 0);
    for (std::size_t k = 0; k < r1.instances.size(); ++k) {
        CHECK(r1.instances[k].description == r2.instances[k].description);
        CHECK(r1.instances[k].dual_generators == r2.instances[k].dual_generators);
        CHECK(r1.instances[k].fiber_product_ok);
        CHECK(r1.instances[k].connected_sum_ok);
    }
    opt.seed = 6;
    std::ostringstream log3;
    run_verify(opt, &log3);
    CHECK(log3.str() != log1.str());
}
