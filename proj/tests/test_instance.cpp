#include "doctest.h"

#include "homlat/instance.hpp"

using namespace homlat;

namespace {

const char* trivial_text = R"({
  "schema_version": "1",
  "order": {"kind": "RationalIntegers"},
  "rank_O": 1,
  "hermitian": [[{"a": 1, "b": 0}]],
  "period_p": 1,
  "x_rational_point": true,
  "y_rational_point": true,
  "curve_data": {"genus_x": 1, "degree_k": 1, "faltings_height": "1", "chi_rho": 1}
})";

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7/10") == make_rat(7, 10));
    CHECK(parse_rational("-3/4") == make_rat(-3, 4));
    CHECK(parse_rational("0.7") == make_rat(7, 10));
    CHECK(parse_rational("-1.25") == make_rat(-5, 4));
    CHECK(parse_rational("12") == Rat(12));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("a/b"), parse_error);
    CHECK_THROWS_AS(parse_rational(""), parse_error);
    CHECK_THROWS_AS(parse_rational("1.2.3"), parse_error);
}

TEST_CASE("fnv1a64 is the reference function") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("parsing the trivial instance") {
    ParsedInstance parsed = parse_instance_text(trivial_text);
    CHECK(parsed.instance.rank() == 1);
    CHECK(parsed.instance.period() == 1);
    CHECK(parsed.instance.x_has_rational_point());
    REQUIRE(parsed.curve.has_value());
    CHECK(parsed.curve->genus_x == 1);
    CHECK(parsed.curve->faltings_height == 1);
    CHECK(parsed.curve->chi_rho.value() == 1);
    CHECK(parsed.curve->c_omega == 1);
    CHECK_FALSE(parsed.genus_x_defaulted);
}

TEST_CASE("round trip: parse, serialize, parse") {
    ParsedInstance first = parse_instance_text(trivial_text);
    ordered_json serialized = instance_to_json(first);
    ParsedInstance second = parse_instance_json(serialized);
    CHECK(instance_to_json(second) == serialized);
    CHECK(second.instance.rank() == first.instance.rank());
    CHECK(second.instance.period() == first.instance.period());
    CHECK(second.curve->faltings_height == first.curve->faltings_height);
}

TEST_CASE("round trip with quadratic order and coset") {
    const char* text = R"({
      "schema_version": "1",
      "order": {"kind": "Quadratic", "u": 0, "v": 1},
      "rank_O": 1,
      "hermitian": [[{"a": 1, "b": 0}]],
      "period_p": 2,
      "x_rational_point": false,
      "y_rational_point": true,
      "coset": {"h_basis": [[2, 0], [0, 2]], "offset": [1, 0]}
    })";
    ParsedInstance parsed = parse_instance_text(text);
    CHECK(parsed.instance.order().is_quadratic());
    REQUIRE(parsed.instance.coset().has_value());
    CHECK(parsed.genus_x_defaulted);
    CHECK(parsed.instance.genus_x() == 1);
    ordered_json serialized = instance_to_json(parsed);
    CHECK(instance_to_json(parse_instance_json(serialized)) == serialized);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_instance_text("{not json"), parse_error);
    CHECK_THROWS_AS(parse_instance_text(R"({"schema_version": "2"})"), parse_error);
    // unknown key
    const char* unknown = R"({
      "schema_version": "1", "order": {"kind": "RationalIntegers"}, "rank_O": 1,
      "hermitian": [[{"a": 1, "b": 0}]], "period_p": 1,
      "x_rational_point": true, "y_rational_point": true, "surprise": 1
    })";
    CHECK_THROWS_AS(parse_instance_text(unknown), parse_error);
    // floats rejected
    const char* with_float = R"({
      "schema_version": "1", "order": {"kind": "RationalIntegers"}, "rank_O": 1,
      "hermitian": [[{"a": 1.5, "b": 0}]], "period_p": 1,
      "x_rational_point": true, "y_rational_point": true
    })";
    CHECK_THROWS_AS(parse_instance_text(with_float), parse_error);
}

TEST_CASE("invariant violations at load") {
    // non-hermitian matrix
    const char* asym = R"({
      "schema_version": "1", "order": {"kind": "Quadratic", "u": 0, "v": 1}, "rank_O": 2,
      "hermitian": [[{"a": 1, "b": 0}, {"a": 1, "b": 1}], [{"a": 1, "b": 1}, {"a": 2, "b": 0}]],
      "period_p": 1, "x_rational_point": true, "y_rational_point": true
    })";
    CHECK_THROWS_AS(parse_instance_text(asym), invariant_error);
    // period must be 1 with a rational point on X
    const char* badp = R"({
      "schema_version": "1", "order": {"kind": "RationalIntegers"}, "rank_O": 1,
      "hermitian": [[{"a": 1, "b": 0}]], "period_p": 2,
      "x_rational_point": true, "y_rational_point": true
    })";
    CHECK_THROWS_AS(parse_instance_text(badp), invariant_error);
    // indefinite form is rejected at load as a computation error
    const char* indef = R"({
      "schema_version": "1", "order": {"kind": "RationalIntegers"}, "rank_O": 1,
      "hermitian": [[{"a": -1, "b": 0}]], "period_p": 1,
      "x_rational_point": true, "y_rational_point": true
    })";
    CHECK_THROWS_AS(parse_instance_text(indef), compute_error);
}
