#include <doctest.h>

#include "test_support.hpp"
#include "twostep/algebra_io.hpp"
#include "twostep/catalog.hpp"
#include "twostep/error.hpp"

using namespace twostep;

TEST_CASE("round trip through the file format") {
    for (const CatalogEntry& e : catalog()) {
        AlgebraFile parsed = parse_algebra_file(serialize_algebra(e.algebra, e.id));
        CHECK(parsed.algebra.tensor() == e.algebra.tensor());
        CHECK(parsed.name == e.id);
    }
    test::Rng rng(127);
    for (int trial = 0; trial < 40; ++trial) {
        int q = static_cast<int>(rng.integer(2, 5));
        TwoStepAlgebra alg = rng.algebra(q);
        AlgebraFile parsed = parse_algebra_file(serialize_algebra(alg));
        CHECK(parsed.algebra.tensor() == alg.tensor());
    }
}

TEST_CASE("rationals serialize as strings") {
    StructureTensor t(2, 1);
    t.set(1, 2, 1, Rational(-3, 2));
    std::string text = serialize_algebra(validate(std::move(t)));
    CHECK(text.find("\"-3/2\"") != std::string::npos);
    CHECK(text.find("format_version") != std::string::npos);
}

TEST_CASE("parse errors carry context") {
    SUBCASE("missing version") {
        CHECK_THROWS_AS(parse_algebra_file(R"({"q":2,"p":1,"brackets":[]})"), ParseError);
    }
    SUBCASE("wrong version") {
        CHECK_THROWS_AS(parse_algebra_file(R"({"format_version":"2","q":2,"p":1,"brackets":[]})"), ParseError);
    }
    SUBCASE("duplicate pair") {
        const char* doc = R"({"format_version":"1","q":2,"p":1,"brackets":[
            {"i":1,"j":2,"coeffs":{"1":"1"}},
            {"i":1,"j":2,"coeffs":{"1":"2"}}]})";
        CHECK_THROWS_WITH_AS(parse_algebra_file(doc), doctest::Contains("duplicate"), ParseError);
    }
    SUBCASE("i >= j") {
        const char* doc = R"({"format_version":"1","q":2,"p":1,"brackets":[{"i":2,"j":1,"coeffs":{"1":"1"}}]})";
        CHECK_THROWS_WITH_AS(parse_algebra_file(doc), doctest::Contains("i < j"), ParseError);
    }
    SUBCASE("index out of range") {
        const char* doc = R"({"format_version":"1","q":2,"p":1,"brackets":[{"i":1,"j":3,"coeffs":{"1":"1"}}]})";
        CHECK_THROWS_AS(parse_algebra_file(doc), ParseError);
    }
    SUBCASE("coefficient must be a string, not a float") {
        const char* doc = R"({"format_version":"1","q":2,"p":1,"brackets":[{"i":1,"j":2,"coeffs":{"1":0.5}}]})";
        CHECK_THROWS_WITH_AS(parse_algebra_file(doc), doctest::Contains("rational string"), ParseError);
    }
    SUBCASE("bad rational text") {
        const char* doc = R"({"format_version":"1","q":2,"p":1,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1.5"}}]})";
        CHECK_THROWS_AS(parse_algebra_file(doc), ParseError);
    }
    SUBCASE("center index out of range") {
        const char* doc = R"({"format_version":"1","q":2,"p":1,"brackets":[{"i":1,"j":2,"coeffs":{"2":"1"}}]})";
        CHECK_THROWS_AS(parse_algebra_file(doc), ParseError);
    }
    SUBCASE("not JSON at all") {
        CHECK_THROWS_AS(parse_algebra_file("q = 2"), ParseError);
    }
}

TEST_CASE("validation failures surface from parsing") {
    // p = 2 but only y1 is ever produced.
    const char* doc = R"({"format_version":"1","q":4,"p":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1"}}]})";
    CHECK_THROWS_AS(parse_algebra_file(doc), DerivedDimDeficit);
}

TEST_CASE("bracket tables print in catalog style") {
    std::string table = bracket_table(catalog_entry("N^{8,2}_1").algebra);
    CHECK(table == "[x1,x2] = y1, [x3,x4] = y2, [x5,x6] = y1 + y2");
    StructureTensor t(2, 1);
    t.set(1, 2, 1, Rational(-3, 2));
    CHECK(bracket_table(validate(std::move(t))) == "[x1,x2] = -3/2*y1");
}

TEST_CASE("files round trip through disk") {
    const TwoStepAlgebra& alg = catalog_entry("N^{9,5}_2").algebra;
    std::string path = "/tmp/twostep_io_test.json";
    save_algebra_file(path, alg, std::string("probe"));
    AlgebraFile loaded = load_algebra_file(path);
    CHECK(loaded.algebra.tensor() == alg.tensor());
    CHECK(loaded.name == "probe");
    CHECK_THROWS_AS(load_algebra_file("/nonexistent/nowhere.json"), ParseError);
}
