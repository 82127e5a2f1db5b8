#include <doctest.h>

#include <fsplit/errors.hpp>
#include <fsplit/serialize.hpp>

#include "test_util.hpp"

using namespace fsplit;

namespace
{

void same_instance(const Instance &a, const Instance &b)
{
    CHECK(a.k == b.k);
    CHECK(a.r == b.r);
    CHECK(a.s == b.s);
    CHECK(a.p == b.p);
    CHECK(a.q == b.q);
    CHECK(a.trunc == b.trunc);
    CHECK(a.mode == b.mode);
    CHECK(a.label == b.label);
    CHECK(a.seed == b.seed);
    REQUIRE(a.payload.size() == b.payload.size());
    for (std::size_t i = 0; i < a.payload.size(); ++i) {
        CHECK(a.payload[i] == b.payload[i]);
    }
}

} // namespace

TEST_CASE("scalars")
{
    fsplit_test::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const Rational q = rng.rational(40, 9);
        CHECK(rational_from_json(to_json(q)) == q);
        const int order = static_cast<int>(rng.range(1, 12));
        const Cyclotomic c = rng.cyclotomic(order);
        CHECK(cyclotomic_from_json(to_json(c)) == c);
        const FieldElem f = rng.field(order, 2);
        CHECK(field_from_json(to_json(f)) == f);
    }
    CHECK(to_json(Rational(-3, 4)) == "-3/4");
    CHECK(field_from_json("5/2") == FieldElem(Rational(5, 2)));
    CHECK_THROWS_AS(rational_from_json("1/0"), Error);
    CHECK_THROWS_AS(rational_from_json(json::array()), Error);
}

TEST_CASE("laurent")
{
    const auto s = LaurentSeries::monomial(FieldElem(Rational(2)), -1, 5) +
                   LaurentSeries::monomial(FieldElem(Rational(1, 3)), 2, 5);
    CHECK(laurent_from_json(to_json(s)) == s);
    const auto e = LaurentSeries(FieldElem(Rational(7)));
    CHECK(to_json(e).at("prec") == "exact");
    CHECK(laurent_from_json(to_json(e)) == e);
}

TEST_CASE("instances roundtrip")
{
    for (const auto &name : preset_names()) {
        INFO(name);
        const Instance a = preset(name);
        const json j = to_json(a);
        const Instance b = instance_from_json(j);
        same_instance(a, b);
        CHECK(canonical(to_json(b)) == canonical(j));
        CHECK(b.poly() == a.poly());
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RandomSpec spec{2 + static_cast<int>(seed % 2), 1, static_cast<int>(seed % 3 == 0),
                              1 + static_cast<int>(seed % 3), static_cast<int>(seed % 2), 6};
        INFO("seed " << seed);
        const Instance a = random_instance(spec, seed);
        const Instance b = instance_from_json(parse_json(canonical(to_json(a))));
        same_instance(a, b);
        CHECK(digest(to_json(a)) == digest(to_json(b)));
    }
    const Instance c = instance_from_poly(preset("qpole").poly(), "q");
    same_instance(c, instance_from_json(to_json(c)));
}

TEST_CASE("canonical form and digest")
{
    const json a = parse_json(R"({"b": 1, "a": [1, 2], "c": {"y": "1/2", "x": null}})");
    const json b = parse_json(R"({"c": {"x": null, "y": "1/2"}, "a": [1, 2], "b": 1})");
    CHECK(canonical(a) == R"({"a":[1,2],"b":1,"c":{"x":null,"y":"1/2"}})");
    CHECK(canonical(a) == canonical(b));
    CHECK(digest(a) == digest(b));
    CHECK(digest(a).rfind("fnv1a64:", 0) == 0);
    CHECK(digest(a).size() == 8 + 16);
    CHECK(digest(json::object()) == "fnv1a64:08f44b07b5901a25");
    CHECK(digest(a) != digest(parse_json(R"({"b": 2})")));
}

TEST_CASE("malformed input")
{
    CHECK_THROWS_AS(parse_json("{bad"), Error);
    CHECK_THROWS_AS(instance_from_json(json::array()), Error);
    json j = to_json(preset("nc3"));
    j.erase("k");
    CHECK_THROWS_AS(instance_from_json(j), Error);
    j = to_json(preset("nc3"));
    j["k"] = "three";
    CHECK_THROWS_AS(instance_from_json(j), Error);
    j = to_json(preset("nc3"));
    j["payload"].erase(0);
    CHECK_THROWS_AS(instance_from_json(j), Error);
    j = to_json(preset("nc3"));
    j["mode"] = "other";
    CHECK_THROWS_AS(instance_from_json(j), Error);
    j = to_json(preset("nc3"));
    j["payload"][0]["terms"][0]["alpha"] = json::array({1});
    CHECK_THROWS_AS(instance_from_json(j), Error);
    try {
        parse_json("[1,");
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}
