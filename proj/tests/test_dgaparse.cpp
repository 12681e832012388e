#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "cedga/dgaparse.hpp"
#include "cedga/lambda.hpp"

using namespace cedga;

namespace {

ParseError capture(const std::string& text) {
    try {
        parse_dga(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");                     // LCOV_EXCL_LINE
    return ParseError(ParseErrorKind::syntax, 0, 0, ""); // unreachable
}

}  // namespace

TEST_CASE("a small document parses into the expected structures") {
    std::string text =
        "# toy example\n"
        "field Q\n"
        "gen e : 1\n"
        "gen x : 0   # a closed letter\n"
        "gen y : 0\n"
        "\n"
        "diff e = x - 2/3*y + 1\n"
        "aug x = -1\n"
        "aug y = 3/2\n";
    DGADocument doc = parse_dga(text);

    CHECK(doc.dga.field.is_rational());
    REQUIRE(doc.dga.gens.size() == 3);
    CHECK(doc.dga.gens.at(doc.dga.gens.require("e")).degree == 1);
    CHECK(doc.dga.d_of(doc.dga.gens.require("e")).str(doc.dga.gens) ==
          "1 + x - 2/3*y");
    CHECK(doc.dga.d_of(doc.dga.gens.require("x")).is_zero());

    REQUIRE(doc.aug.has_value());
    Field q = doc.dga.field;
    CHECK(doc.aug->value(q, doc.dga.gens.require("x")) == Scalar(q, -1));
    CHECK(doc.aug->value(q, doc.dga.gens.require("y")) ==
          Scalar(q, 3) / Scalar(q, 2));
    CHECK(doc.aug->value(q, doc.dga.gens.require("e")) == Scalar(q, 0));
}

TEST_CASE("prime fields reduce coefficients on the way in") {
    DGADocument doc = parse_dga(
        "field 5\n"
        "gen u : 1\n"
        "gen v : 0\n"
        "diff u = 7*v\n");
    CHECK(doc.dga.field.characteristic() == 5);
    CHECK_FALSE(doc.aug.has_value());
    CHECK(doc.dga.d_of(doc.dga.gens.require("u")).str(doc.dga.gens) == "2*v");
}

TEST_CASE("a zero differential line is accepted and omitted on output") {
    DGADocument doc = parse_dga(
        "field 2\n"
        "gen u : 1\n"
        "diff u = 0\n");
    CHECK(doc.dga.d_of(doc.dga.gens.require("u")).is_zero());
    CHECK(serialize_dga(doc.dga) == "field 2\ngen u : 1\n");
}

TEST_CASE("syntax errors carry the offending position") {
    ParseError e = capture("field Q\ngen a 1\n");
    CHECK(e.kind() == ParseErrorKind::syntax);
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);  // where ':' was expected

    ParseError missing = capture("field Q\ngen a : 0\ndiff a : 1\n");
    CHECK(missing.kind() == ParseErrorKind::syntax);
    CHECK(missing.line() == 3);

    ParseError dir = capture("field Q\nfrobnicate a\n");
    CHECK(dir.kind() == ParseErrorKind::syntax);
    CHECK(dir.line() == 2);
    CHECK(dir.column() == 1);

    ParseError order = capture("gen a : 0\n");
    CHECK(order.kind() == ParseErrorKind::syntax);
}

TEST_CASE("undeclared names are a distinct error kind") {
    ParseError e = capture("field Q\ngen a : 1\ndiff a = b\n");
    CHECK(e.kind() == ParseErrorKind::undeclared_name);
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);

    ParseError aug = capture("field Q\ngen a : 1\naug ghost = 1\n");
    CHECK(aug.kind() == ParseErrorKind::undeclared_name);
}

TEST_CASE("duplicate declarations are a distinct error kind") {
    ParseError gen = capture("field Q\ngen a : 1\ngen a : 0\n");
    CHECK(gen.kind() == ParseErrorKind::duplicate_declaration);
    CHECK(gen.line() == 3);
    CHECK(gen.column() == 4);

    ParseError fld = capture("field Q\nfield 3\n");
    CHECK(fld.kind() == ParseErrorKind::duplicate_declaration);

    ParseError dif = capture("field Q\ngen a : 1\ndiff a = 1\ndiff a = 1\n");
    CHECK(dif.kind() == ParseErrorKind::duplicate_declaration);
    CHECK(dif.line() == 4);

    ParseError aug = capture("field Q\ngen x : 0\naug x = 1\naug x = 2\n");
    CHECK(aug.kind() == ParseErrorKind::duplicate_declaration);
}

TEST_CASE("bad field moduli are a distinct error kind") {
    ParseError composite = capture("field 4\n");
    CHECK(composite.kind() == ParseErrorKind::bad_field);
    CHECK(composite.line() == 1);
    CHECK(composite.column() == 7);

    CHECK(capture("field -7\n").kind() == ParseErrorKind::bad_field);
    CHECK(capture("field Qx\n").kind() == ParseErrorKind::bad_field);
    CHECK(capture("field 99999999999999999999999\n").kind() ==
          ParseErrorKind::bad_field);
}

TEST_CASE("serialization is canonical and parses back to the same bytes") {
    for (const Field& f : {Field::rationals(), Field::fp(2)}) {
        KnotParams kp{2, 2, 3, 3};
        FreeDGA d = build_ce_dga(kp, f);
        Augmentation eps = canonical_augmentation(kp, d);

        std::string text = serialize_dga(d, &eps);
        CHECK(text == serialize_dga(d, &eps));  // deterministic

        DGADocument doc = parse_dga(text);
        REQUIRE(doc.aug.has_value());
        CHECK(serialize_dga(doc.dga, &*doc.aug) == text);

        std::string bare = serialize_dga(d);
        DGADocument plain = parse_dga(bare);
        CHECK_FALSE(plain.aug.has_value());
        CHECK(serialize_dga(plain.dga) == bare);
    }
}

TEST_CASE("round-tripping preserves the mathematical content") {
    KnotParams kp{3, 3, 4, 4};
    Field q = Field::rationals();
    FreeDGA d = normalized_dga(kp, q);
    DGADocument doc = parse_dga(serialize_dga(d));

    REQUIRE(doc.dga.gens.size() == d.gens.size());
    for (const Generator& g : d.gens.all()) {
        int id = doc.dga.gens.require(g.name);
        CHECK(doc.dga.gens.at(id).degree == g.degree);
        CHECK(doc.dga.d_of(id).str(doc.dga.gens) == d.d_of(g.id).str(d.gens));
    }
    CHECK(verify_dga(doc.dga).pass);
}

TEST_CASE("mutated documents either parse or raise ParseError, never crash") {
    KnotParams kp{2, 2, 3, 3};
    Field f2 = Field::fp(2);
    FreeDGA d = build_ce_dga(kp, f2);
    Augmentation eps = canonical_augmentation(kp, d);
    const std::string base = serialize_dga(d, &eps);

    std::mt19937_64 rng(99);
    const std::string alphabet =
        "abxyz0123456789 :=+-*/#\nQqfield gendiff aug";
    long parsed = 0, rejected = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text = base;
        int edits = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < edits; ++k) {
            size_t at = rng() % text.size();
            switch (rng() % 3) {
                case 0: text[at] = alphabet[rng() % alphabet.size()]; break;
                case 1: text.erase(at, 1 + rng() % 3); break;
                default:
                    text.insert(at, 1, alphabet[rng() % alphabet.size()]);
            }
        }
        try {
            parse_dga(text);
            parsed++;
        } catch (const ParseError&) {
            rejected++;
        }
    }
    CHECK(parsed + rejected == 3000);
    CHECK(rejected > 0);  // the mutations do exercise the error paths
}
