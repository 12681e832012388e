#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cedga/lambda.hpp"
#include "cedga/surface.hpp"

using namespace cedga;

TEST_CASE("f2 vectors xor and rank as expected") {
    F2Vec a(130), b(130);
    a.flip(0);
    a.flip(129);
    b.flip(129);
    CHECK(a.get(0));
    CHECK(a.get(129));
    CHECK_FALSE(a.get(64));
    a ^= b;
    CHECK(a.get(0));
    CHECK_FALSE(a.get(129));

    std::vector<F2Vec> rows(3, F2Vec(4));
    rows[0].flip(0);
    rows[1].flip(1);
    rows[2].flip(0);
    rows[2].flip(1);  // dependent on the first two
    CHECK(f2_rank(rows) == 2);
}

TEST_CASE("basis inventories scale with the genus") {
    for (int g = 1; g <= 4; ++g) {
        CHECK(build_C(g).dim() == 10 * g + 2);
        CHECK(build_Cprime(g).dim() == 10 * g + 2);
        CHECK(build_Chat(g).dim() == 14 * g + 2);
        CHECK(build_H(g).dim() == 2 * g + 2);
    }
    CHECK_THROWS_AS(build_C(0), std::invalid_argument);
    CHECK_THROWS_AS(build_Cprime(0), std::invalid_argument);
    CHECK_THROWS_AS(build_Chat(-1), std::invalid_argument);
    CHECK_THROWS_AS(build_H(0), std::invalid_argument);
    CHECK_THROWS_AS(build_Phi(0), std::invalid_argument);
}

TEST_CASE("the cochain algebra, the small model, and the cohomology ring verify") {
    for (int g = 1; g <= 3; ++g) {
        for (const DGAlgebraPresentation& P :
             {build_C(g), build_Cprime(g), build_H(g)}) {
            SurfaceReport rep = verify_dg_algebra(P);
            CHECK(rep.pass);
            CHECK(rep.defects.empty());
        }
    }
}

TEST_CASE("the stabilized model fails associativity as presented") {
    for (int g = 1; g <= 3; ++g) {
        SurfaceReport rep = verify_dg_algebra(build_Chat(g));
        CHECK_FALSE(rep.pass);
        REQUIRE(!rep.defects.empty());
        bool mentions_associativity =
            std::any_of(rep.defects.begin(), rep.defects.end(),
                        [](const std::string& s) {
                            return s.find("associativity") != std::string::npos;
                        });
        CHECK(mentions_associativity);
    }
}

TEST_CASE("all four algebras have surface cohomology") {
    for (int g = 1; g <= 4; ++g) {
        std::vector<long> expect{1, 2 * g, 1};
        CHECK(cohomology(build_C(g)) == expect);
        CHECK(cohomology(build_Cprime(g)) == expect);
        CHECK(cohomology(build_Chat(g)) == expect);
        CHECK(cohomology(build_H(g)) == expect);
    }
}

TEST_CASE("the three zig-zag morphisms verify and are quasi-isomorphisms") {
    for (int g = 1; g <= 3; ++g) {
        for (const DGMorphism& m :
             {build_Phi(g), build_inclusion(g), build_PhiHat(g)}) {
            SurfaceReport rep = verify_dg_morphism(m);
            CHECK(rep.pass);
            CHECK(rep.defects.empty());
            CHECK(is_quasi_iso(m));
        }
    }
}

TEST_CASE("a zeroed morphism is rejected and is not a quasi-isomorphism") {
    DGMorphism m = build_Phi(2);
    for (F2Vec& row : m.image) row = F2Vec(m.target.dim());
    SurfaceReport rep = verify_dg_morphism(m);
    CHECK_FALSE(rep.pass);  // not unital
    CHECK_FALSE(is_quasi_iso(m));
}

TEST_CASE("a single corrupted image row breaks the chain map check") {
    DGMorphism m = build_inclusion(2);
    REQUIRE(verify_dg_morphism(m).pass);
    int src = m.source.index_of("eps1");
    m.image[static_cast<size_t>(src)] = F2Vec(m.target.dim());
    m.image[static_cast<size_t>(src)].flip(m.target.index_of("nu"));
    SurfaceReport rep = verify_dg_morphism(m);
    CHECK_FALSE(rep.pass);
    CHECK(!rep.defects.empty());
}

TEST_CASE("spot checks of the printed tables") {
    DGAlgebraPresentation C = build_C(2);
    // d(e1) = sum of all theta_k, and theta_k * alpha/beta rows hit gammas
    F2Vec de1 = C.diff[static_cast<size_t>(C.index_of("e1"))];
    for (int k = 1; k <= 8; ++k)
        CHECK(de1.get(C.index_of("theta" + std::to_string(k))));
    CHECK(C.mul(C.unit, de1) == de1);

    DGAlgebraPresentation Cp = build_Cprime(2);
    // d(eps1) = zeta1 and d(xi_l) = nu_l
    CHECK(Cp.diff[static_cast<size_t>(Cp.index_of("eps1"))]
              .get(Cp.index_of("zeta1")));
    CHECK(Cp.diff[static_cast<size_t>(Cp.index_of("xi3"))]
              .get(Cp.index_of("nu3")));
    // the unit is a single basis element here
    CHECK(Cp.unit.get(Cp.index_of("e")));

    DGAlgebraPresentation Ch = build_Chat(2);
    // the adjoined pairs are contractible: d(eps_k) = zeta_k
    for (int k = 2; k <= 5; ++k)
        CHECK(Ch.diff[static_cast<size_t>(Ch.index_of("eps" + std::to_string(k)))]
                  .get(Ch.index_of("zeta" + std::to_string(k))));
}

TEST_CASE("the genus-three cohomology ring matches the eight-element target") {
    DGAlgebraPresentation H = build_H(3);
    Field f2 = Field::fp(2);
    SurfaceRing R(f2);

    auto h_index = [&](int e) -> int {
        if (e == SurfaceRing::kOne) return H.index_of("e");
        if (e == SurfaceRing::kTop) return H.index_of("nu");
        for (int i = 1; i <= 3; ++i) {
            if (e == SurfaceRing::x(i)) return H.index_of("phibar" + std::to_string(i));
            if (e == SurfaceRing::y(i)) return H.index_of("psibar" + std::to_string(i));
        }
        REQUIRE(false);
        return -1;
    };

    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            F2Vec expect(H.dim());
            for (const auto& [e, c] : R.product(a, b)) {
                REQUIRE(c == Scalar::one(f2));
                expect.flip(h_index(e));
            }
            F2Vec ua(H.dim()), ub(H.dim());
            ua.flip(h_index(a));
            ub.flip(h_index(b));
            CHECK(H.mul(ua, ub) == expect);
        }
    }
}
