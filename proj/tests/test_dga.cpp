#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cedga/dga.hpp"
#include "cedga/lambda.hpp"

using namespace cedga;

namespace {

// e (deg 1) -> x - y, with x, y closed letters.  A minimal correct DGA.
FreeDGA tiny_valid(const Field& f) {
    FreeDGA d{f, {}, {}};
    int e = d.gens.add("e", 1);
    int x = d.gens.add("x", 0);
    d.gens.add("y", 0);
    NCPoly de(f);
    de.add_term({x}, Scalar(f, 1));
    de.add_term({d.gens.require("y")}, Scalar(f, -1));
    d.diff.images.emplace(e, de);
    return d;
}

}  // namespace

TEST_CASE("verify_dga accepts a correct differential and reports nothing") {
    Field q = Field::rationals();
    DgaReport rep = verify_dga(tiny_valid(q));
    CHECK(rep.pass);
    CHECK(rep.entries.empty());
}

TEST_CASE("verify_dga localizes a degree defect") {
    Field q = Field::rationals();
    FreeDGA d{q, {}, {}};
    int a = d.gens.add("a", 2);
    int x = d.gens.add("x", 0);
    NCPoly da(q);
    da.add_term({x}, Scalar(q, 1));  // degree 0 word, but |a| - 1 = 1
    d.diff.images.emplace(a, da);

    DgaReport rep = verify_dga(d);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].gen == a);
    CHECK_FALSE(rep.entries[0].degree_ok);
    CHECK(rep.entries[0].square_ok);
}

TEST_CASE("verify_dga localizes a d-squared defect") {
    Field q = Field::rationals();
    FreeDGA d{q, {}, {}};
    int u = d.gens.add("u", 1);
    int v = d.gens.add("v", 0);
    int w = d.gens.add("w", -1);
    NCPoly du(q), dv(q);
    du.add_term({v}, Scalar(q, 1));
    dv.add_term({w}, Scalar(q, 1));
    d.diff.images.emplace(u, du);
    d.diff.images.emplace(v, dv);

    DgaReport rep = verify_dga(d);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].gen == u);
    CHECK(rep.entries[0].degree_ok);
    CHECK_FALSE(rep.entries[0].square_ok);
}

TEST_CASE("augmentations evaluate multiplicatively and respect the grading") {
    Field q = Field::rationals();
    FreeDGA d = tiny_valid(q);
    int x = d.gens.require("x");
    int y = d.gens.require("y");

    Augmentation eps;
    eps.values.emplace(x, Scalar(q, 3));
    eps.values.emplace(y, Scalar(q, 3));
    CHECK(verify_augmentation(d, eps));
    CHECK(eps.value(q, x) == Scalar(q, 3));
    CHECK(eps.value(q, d.gens.require("e")) == Scalar(q, 0));

    // eps(2 + x*y - y) = 2 + 9 - 3
    NCPoly p(q);
    p.add_term({}, Scalar(q, 2));
    p.add_term({x, y}, Scalar(q, 1));
    p.add_term({y}, Scalar(q, -1));
    CHECK(eps.evaluate(q, p) == Scalar(q, 8));

    // nonzero value on a degree-1 generator is rejected
    Augmentation bad;
    bad.values.emplace(d.gens.require("e"), Scalar(q, 1));
    std::string why;
    CHECK_FALSE(verify_augmentation(d, bad, &why));
    CHECK(!why.empty());

    // eps(d e) = eps(x) - eps(y) must vanish
    Augmentation unbalanced;
    unbalanced.values.emplace(x, Scalar(q, 1));
    CHECK_FALSE(verify_augmentation(d, unbalanced));
}

TEST_CASE("twist removes constant terms and preserves the dga identities") {
    for (int pp : {2, 3}) {
        KnotParams kp{pp, pp, pp + 1, pp + 1};
        for (const Field& f : {Field::rationals(), Field::fp(2), Field::fp(5)}) {
            FreeDGA dga = build_ce_dga(kp, f);
            Augmentation eps = canonical_augmentation(kp, dga);
            FreeDGA tw = twist(dga, eps);

            CHECK(verify_dga(tw).pass);
            for (const Generator& g : tw.gens.all()) {
                const NCPoly dg = tw.d_of(g.id);
                for (const auto& [word, coeff] : dg.terms()) {
                    CHECK(!word.empty());
                    (void)coeff;
                }
            }
        }
    }
}

TEST_CASE("twist by the zero augmentation is the identity") {
    Field q = Field::rationals();
    FreeDGA d = tiny_valid(q);
    FreeDGA tw = twist(d, Augmentation{});
    for (const Generator& g : d.gens.all()) {
        CHECK(tw.d_of(g.id).str(tw.gens) == d.d_of(g.id).str(d.gens));
    }
}

TEST_CASE("twist rejects a map that is not an augmentation") {
    Field q = Field::rationals();
    FreeDGA d = tiny_valid(q);
    Augmentation bad;
    bad.values.emplace(d.gens.require("x"), Scalar(q, 1));  // eps(d e) = 1
    CHECK_THROWS_AS(twist(d, bad), std::invalid_argument);
}

TEST_CASE("change_generators rejects non-inverse and degree-breaking pairs") {
    Field q = Field::rationals();
    FreeDGA d = tiny_valid(q);
    int x = d.gens.require("x");
    int y = d.gens.require("y");
    int e = d.gens.require("e");

    // phi(x) = x + y with a wrong inverse
    AlgebraMap phi, wrong;
    {
        NCPoly img(q);
        img.add_term({x}, Scalar(q, 1));
        img.add_term({y}, Scalar(q, 1));
        phi.images.emplace(x, img);
        wrong.images.emplace(x, img);  // phi(phi(x)) = x + 2y != x
    }
    CHECK_THROWS_AS(change_generators(d, phi, wrong), std::invalid_argument);

    // a degree-breaking substitution: e -> x is its own inverse failure
    AlgebraMap drop, drop_inv;
    {
        NCPoly img(q);
        img.add_term({x}, Scalar(q, 1));
        drop.images.emplace(e, img);
        NCPoly back(q);
        back.add_term({e}, Scalar(q, 1));
        drop_inv.images.emplace(x, back);
    }
    CHECK_THROWS_AS(change_generators(d, drop, drop_inv), std::invalid_argument);
}

TEST_CASE("linear part requires a constant-free differential") {
    KnotParams kp{2, 2, 3, 3};
    Field f2 = Field::fp(2);
    FreeDGA dga = build_ce_dga(kp, f2);  // d(a0) has the constant term 1
    CHECK_THROWS_AS(linear_part(dga), std::invalid_argument);
}

TEST_CASE("homology of an acyclic two-term complex is trivial") {
    Field q = Field::rationals();
    FreeDGA d{q, {}, {}};
    int u = d.gens.add("u", 1);
    int v = d.gens.add("v", 0);
    NCPoly du(q);
    du.add_term({v}, Scalar(q, 1));
    d.diff.images.emplace(u, du);
    REQUIRE(verify_dga(d).pass);

    std::map<int, long> h = homology_dims(linear_part(d));
    CHECK(h.empty());  // zero homology in every degree is omitted
}

TEST_CASE("linearized homology is invariant under elementary generator changes") {
    KnotParams kp{2, 2, 3, 3};
    std::mt19937_64 rng(20260815);
    for (const Field& f : {Field::rationals(), Field::fp(2)}) {
        FreeDGA base = normalized_dga(kp, f);
        std::map<int, long> expected = homology_dims(linear_part(base));
        REQUIRE(expected == std::map<int, long>{{0, 6}, {1, 1}});

        // transvections g -> g + c * m with m a same-degree word avoiding g
        std::vector<int> letters;
        for (const Generator& g : base.gens.all())
            if (g.degree == 0) letters.push_back(g.id);

        for (int trial = 0; trial < 8; ++trial) {
            int g = letters[rng() % letters.size()];
            int len = 1 + static_cast<int>(rng() % 2);
            Word m;
            for (int i = 0; i < len; ++i) {
                int pick;
                do
                    pick = letters[rng() % letters.size()];
                while (pick == g);
                m.push_back(pick);
            }
            Scalar c(f, 1 + static_cast<long>(rng() % 3));

            AlgebraMap phi, inv;
            NCPoly fwd(f), bwd(f);
            fwd.add_term({g}, Scalar(f, 1));
            fwd.add_term(m, c);
            bwd.add_term({g}, Scalar(f, 1));
            bwd.add_term(m, -c);
            phi.images.emplace(g, fwd);
            inv.images.emplace(g, bwd);

            FreeDGA moved = change_generators(base, phi, inv);
            CHECK(verify_dga(moved).pass);
            CHECK(homology_dims(linear_part(moved)) == expected);
        }
    }
}
