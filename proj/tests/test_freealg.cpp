// Free graded algebra: canonical forms, the term order, graded derivations,
// and algebra maps.  Structural equality is the only equality, so most
// properties are phrased as identities between independently built values.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cedga/freealg.hpp"

using namespace cedga;

namespace {

// small random polynomial in the given generators
NCPoly random_poly(const Field& f, int ngens, std::mt19937_64& rng) {
    NCPoly out = NCPoly::zero(f);
    const int terms = static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        Word w;
        const int len = static_cast<int>(rng() % 4);
        for (int i = 0; i < len; ++i)
            w.push_back(static_cast<int>(rng() % static_cast<uint64_t>(ngens)));
        out.add_term(w, Scalar(f, static_cast<long>(rng() % 7) - 3));
    }
    return out;
}

}  // namespace

TEST_CASE("generator sets reject duplicates and resolve names") {
    GenSet gens;
    int a = gens.add("a", 1);
    int b = gens.add("b", -2);
    CHECK(a != b);
    CHECK(gens.at(a).degree == 1);
    CHECK(gens.require("b") == b);
    CHECK(gens.find("c") == nullptr);
    CHECK_THROWS_AS(gens.add("a", 0), std::invalid_argument);
    CHECK_THROWS_AS(gens.require("zz"), std::invalid_argument);
}

TEST_CASE("the term order is length-then-lexicographic") {
    CHECK(word_less({}, {0}));
    CHECK(word_less({5}, {0, 0}));
    CHECK(word_less({0, 1}, {0, 2}));
    CHECK(word_less({0, 2}, {1, 0}));
    CHECK(!word_less({1, 0}, {1, 0}));
}

TEST_CASE("canonical form merges and drops terms") {
    Field q = Field::rationals();
    NCPoly p = NCPoly::zero(q);
    p.add_term({0, 1}, Scalar(q, 2));
    p.add_term({0, 1}, Scalar(q, -2));
    CHECK(p.is_zero());
    p.add_term({1}, Scalar(q, 1));
    p.add_term({0}, Scalar(q, 1));
    CHECK(p.term_count() == 2);
    CHECK(p.terms().front().first == Word{0});  // sorted
    CHECK(p.coeff({1}).is_one());
    CHECK(p.coeff({0, 1}).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    GenSet gens;
    gens.add("a", 1);
    gens.add("b", 2);
    gens.add("c", -1);
    std::mt19937_64 rng(4);
    for (Field f : {Field::fp(5), Field::rationals()}) {
        const NCPoly one = NCPoly::unit(f);
        for (int trial = 0; trial < 150; ++trial) {
            NCPoly x = random_poly(f, 3, rng);
            NCPoly y = random_poly(f, 3, rng);
            NCPoly z = random_poly(f, 3, rng);
            CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
            CHECK(multiply(x, y + z) == multiply(x, y) + multiply(x, z));
            CHECK(multiply(x + y, z) == multiply(x, z) + multiply(y, z));
            CHECK(multiply(one, x) == x);
            CHECK(multiply(x, one) == x);
            CHECK(x - x == NCPoly::zero(f));
        }
    }
}

TEST_CASE("degrees add under multiplication") {
    GenSet gens;
    int a = gens.add("a", 1);
    int b = gens.add("b", 2);
    Field q = Field::rationals();
    NCPoly x = NCPoly::generator(q, a);
    NCPoly y = NCPoly::generator(q, b);
    NCPoly xy = multiply(x, y);
    CHECK(xy.homogeneous_degree(gens) == 3);
    CHECK(word_degree(gens, {a, a, b}) == 4);
    NCPoly mixed = x + y;
    CHECK(!mixed.homogeneous_degree(gens).has_value());
    CHECK(mixed.degrees(gens) == std::set<int>{1, 2});
}

TEST_CASE("derivations satisfy the graded Leibniz rule") {
    GenSet gens;
    int a = gens.add("a", 1);   // odd
    int b = gens.add("b", 2);   // even
    int c = gens.add("c", -1);  // odd
    Field q = Field::rationals();

    Derivation d;
    d.images.emplace(a, NCPoly::unit(q));
    d.images.emplace(b, multiply(NCPoly::generator(q, a), NCPoly::generator(q, a)));
    // c has zero image (absent)

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        NCPoly x = random_poly(q, 3, rng);
        NCPoly y = random_poly(q, 3, rng);
        // Leibniz needs homogeneous left factors; test on monomial x
        NCPoly xm = NCPoly::zero(q);
        if (!x.is_zero()) {
            const auto& [w, coeff] = x.terms().front();
            xm = NCPoly::monomial(coeff, w);
        }
        auto deg = xm.homogeneous_degree(gens);
        const int sign = deg && (*deg % 2 != 0) ? -1 : 1;
        NCPoly lhs = apply_derivation(gens, d, multiply(xm, y));
        NCPoly rhs = multiply(apply_derivation(gens, d, xm), y) +
                     multiply(xm, apply_derivation(gens, d, y)).scaled(
                         Scalar(q, sign));
        CHECK(lhs == rhs);
    }
    CHECK(apply_derivation(gens, d, NCPoly::unit(q)).is_zero());
    CHECK(apply_derivation(gens, d, NCPoly::generator(q, c)).is_zero());
}

TEST_CASE("algebra maps are unital and multiplicative") {
    GenSet gens;
    int a = gens.add("a", 0);
    gens.add("b", 0);
    Field f5 = Field::fp(5);

    AlgebraMap m;
    m.images.emplace(a, NCPoly::generator(f5, a) + NCPoly::unit(f5));
    // b maps to itself (absent = identity)

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        NCPoly x = random_poly(f5, 2, rng);
        NCPoly y = random_poly(f5, 2, rng);
        CHECK(apply_algebra_map(gens, f5, m, multiply(x, y)) ==
              multiply(apply_algebra_map(gens, f5, m, x),
                       apply_algebra_map(gens, f5, m, y)));
    }
    CHECK(apply_algebra_map(gens, f5, m, NCPoly::unit(f5)) == NCPoly::unit(f5));
}

TEST_CASE("printing uses the canonical order") {
    GenSet gens;
    int a = gens.add("a", 1);
    int b = gens.add("b", 1);
    Field q = Field::rationals();
    NCPoly p = NCPoly::zero(q);
    p.add_term({b, a}, Scalar(q, -1));
    p.add_term({a}, Scalar(q, 2));
    p.add_term({}, Scalar(q, 1));
    CHECK(p.str(gens) == "1 + 2*a - b*a");
    CHECK(NCPoly::zero(q).str(gens) == "0");
}
