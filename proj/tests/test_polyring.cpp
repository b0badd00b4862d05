#include "doctest.h"

#include "hopforbit/errors.hpp"
#include "hopforbit/solve.hpp"
#include "gen.hpp"

using namespace hopforbit;

namespace {
FieldDescriptor Q() { return make_field(0, 1); }
Poly P(const PolyRing& R, const std::string& s) { return parse_poly(R, s); }
}  // namespace

TEST_CASE("parser round trip") {
    PolyRing R(make_field(0, 3), {"x", "y"}, {true, false});
    Poly f = P(R, "x^2*y - 3/2*zeta*x + x^-2 + 1");
    CHECK(P(R, f.to_string()) == f);
    CHECK_THROWS_AS(P(R, "y^-1"), DomainError);
    CHECK_THROWS_AS(P(R, "w"), SchemaError);
}

TEST_CASE("groebner examples") {
    PolyRing R(Q(), {"x"});
    auto gb = groebner_basis(R, {P(R, "x^2-1"), P(R, "x^3-1")});
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == P(R, "x-1"));
    CHECK(groebner_basis(R, {}).empty());

    PolyRing S(Q(), {"u", "v"});
    auto g2 = Ideal(S, {P(S, "u-2"), P(S, "v")}).groebner();
    CHECK(g2.size() == 2);
    CHECK(Ideal(S, {P(S, "u-2"), P(S, "v")}) == Ideal(S, {P(S, "v"), P(S, "u-2+v")}));
}

TEST_CASE("ideal operations") {
    PolyRing R(Q(), {"u"});
    Ideal a(R, {P(R, "u-1")}), b(R, {P(R, "u+1")});
    CHECK(a.intersect(b) == Ideal(R, {P(R, "u^2-1")}));
    // comaximal: intersection equals product
    CHECK(a.intersect(b) == a * b);
    CHECK((a + Ideal::unit(R)).is_unit());

    PolyRing S(Q(), {"u", "v"});
    Ideal m2(S, {P(S, "u-3"), P(S, "v^2")}), m3(S, {P(S, "u-3"), P(S, "v^3")});
    CHECK(m2.contains(P(S, "v^2")));
    CHECK_FALSE(m3.contains(P(S, "v^2")));
    Poly foreign = P(R, "u");
    CHECK_THROWS_AS(m2.contains(foreign), RingMismatch);
}

TEST_CASE("quotient bases") {
    PolyRing S(Q(), {"u", "v"});
    for (int n = 1; n <= 4; ++n) {
        AffineAlgebra A(Ideal(S, {P(S, "u-2"), P(S, "v^" + std::to_string(n))}));
        REQUIRE(A.finite_data());
        CHECK(A.dimension() == static_cast<size_t>(n));
        CHECK(A.krull_dim() == 0);
    }
    PolyRing U(Q(), {"u"});
    CHECK(AffineAlgebra(Ideal::zero(U)).finite_data() == nullptr);
    PolyRing L(Q(), {"x"}, {true});
    AffineAlgebra lx(Ideal(L, {P(L, "x^3-1")}));
    CHECK(lx.dimension() == 3);
    CHECK(AffineAlgebra(Ideal::zero(L)).krull_dim() == 1);
    CHECK(AffineAlgebra(Ideal::zero(S)).krull_dim() == 2);
    // x^-1 = x^2 in the quotient
    CHECK(lx.nf(P(L, "x^-1")) == lx.nf(P(L, "x^2")));
}

TEST_CASE("solving zero-dimensional ideals") {
    PolyRing U(Q(), {"u"});
    auto pts = solve_zero_dim(Ideal(U, {P(U, "u^2-1")}));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].coords[0] == Scalar(Q(), -1L));
    CHECK(pts[1].coords[0] == Scalar(Q(), 1L));
    try {
        solve_zero_dim(Ideal(U, {P(U, "u^2-2")}));
        FAIL("expected NonRationalPoint");
    } catch (const NonRationalPoint& e) {
        CHECK(e.degree() == 2);
    }
    PolyRing S(Q(), {"u", "v"});
    auto one = solve_zero_dim(Ideal(S, {P(S, "u-5"), P(S, "v^3")}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].coords[0] == Scalar(Q(), 5L));
    CHECK(one[0].coords[1].is_zero());

    // roots of unity inside Q(zeta_3) found through the Weil restriction
    auto K = make_field(0, 3);
    PolyRing KU(K, {"u"});
    auto cube = solve_zero_dim(Ideal(KU, {P(KU, "u^3-1")}));
    CHECK(cube.size() == 3);
    // and over F_4
    auto F4 = make_field(2, 3);
    PolyRing FU(F4, {"u"}, {true});
    CHECK(solve_zero_dim(Ideal(FU, {P(FU, "u^3-1")})).size() == 3);
}

TEST_CASE("property: normal form idempotent, generators reduce to zero, Buchberger criterion") {
    testgen::Rng rng(2024);
    int cases = 0;
    for (auto fd : {make_field(0, 1), make_field(0, 3), make_field(5, 1)}) {
        PolyRing R(fd, {"a", "b", "c"});
        for (int k = 0; k < 40; ++k) {
            std::vector<Poly> gens;
            int ng = static_cast<int>(testgen::uniform(rng, 1, 3));
            for (int i = 0; i < ng; ++i) gens.push_back(testgen::poly(rng, R, 3, 3));
            Ideal I(R, gens);
            const auto& gb = I.groebner();
            REQUIRE(satisfies_buchberger(gb));
            for (const auto& g : gens) REQUIRE(I.contains(g));
            for (int j = 0; j < 3; ++j) {
                Poly f = testgen::poly(rng, R, 5, 5);
                Poly n1 = I.normal_form(f);
                REQUIRE(I.normal_form(n1) == n1);
                REQUIRE(I.contains(f - n1));
            }
            ++cases;
        }
    }
    CHECK(cases == 120);
}

TEST_CASE("property: Chinese remainder dimension count") {
    testgen::Rng rng(7);
    PolyRing S(Q(), {"u", "v"});
    for (int k = 0; k < 30; ++k) {
        long a = testgen::uniform(rng, -5, 5), b = testgen::uniform(rng, -5, 5);
        long c = a + testgen::uniform(rng, 1, 4), d = testgen::uniform(rng, -5, 5);
        int e1 = static_cast<int>(testgen::uniform(rng, 1, 3)), e2 = static_cast<int>(testgen::uniform(rng, 1, 3));
        Ideal I(S, {Poly(P(S, "u-(" + std::to_string(a) + ")")).pow(e1), P(S, "v-(" + std::to_string(b) + ")")});
        Ideal J(S, {P(S, "u-(" + std::to_string(c) + ")"), P(S, "v-(" + std::to_string(d) + ")").pow(e2)});
        size_t dI = AffineAlgebra(I).dimension(), dJ = AffineAlgebra(J).dimension();
        CHECK(AffineAlgebra(I.intersect(J)).dimension() == dI + dJ);
        // radical and split: one point per dimension
        Ideal R1(S, {P(S, "u-(" + std::to_string(a) + ")"), P(S, "v-(" + std::to_string(b) + ")")});
        Ideal R2(S, {P(S, "u-(" + std::to_string(c) + ")"), P(S, "v-(" + std::to_string(d) + ")")});
        CHECK(solve_zero_dim(R1.intersect(R2)).size() == 2);
    }
}

TEST_CASE("property: planted roots over cyclotomic fields are recovered exactly") {
    testgen::Rng rng(31);
    int cases = 0;
    for (long n : {3L, 4L, 5L, 8L, 12L}) {
        auto K = make_field(0, n);
        for (int k = 0; k < 12; ++k) {
            std::vector<Scalar> planted;
            UPoly f = UPoly::constant(testgen::scalar(rng, K, 5) + Scalar(K, 7L));
            int nr = static_cast<int>(testgen::uniform(rng, 1, 3));
            for (int i = 0; i < nr; ++i) {
                Scalar r = testgen::scalar(rng, K, 6);
                if (std::find(planted.begin(), planted.end(), r) != planted.end()) continue;
                planted.push_back(r);
                f = f * UPoly::linear_root(r);
            }
            // sqrt(7) lies in Q(zeta_n) only when 28 | n
            Scalar c = Scalar(K, 7L);
            f = f * UPoly(K, Vec{-c, Scalar::zero(K), Scalar::one(K)});
            RootReport rr = roots_in_field(f);
            std::sort(planted.begin(), planted.end());
            REQUIRE(rr.roots == planted);
            REQUIRE(rr.unresolved_degree == 2);
            ++cases;
        }
    }
    CHECK(cases == 60);
}
