#include "doctest.h"

#include "hopforbit/errors.hpp"
#include "hopforbit/fdhopf.hpp"
#include "gen.hpp"

#include <algorithm>

using namespace hopforbit;

namespace {

FieldDescriptor Q() { return make_field(0, 1); }

FDHopf sweedler() { return taft_fd(2, Scalar(Q(), -1L)); }

bool contains_vec(const std::vector<Vec>& vs, const Vec& v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

}  // namespace

TEST_CASE("axioms pass for constructors and fail for corruptions") {
    CHECK(group_algebra(Q(), cyclic_group_table(2)).verify().pass);
    CHECK(group_algebra(Q(), symmetric_group_table(3)).verify().pass);
    CHECK(sweedler().verify().pass);
    auto k3 = make_field(0, 3);
    CHECK(taft_fd(3, Scalar::zeta(k3)).verify().pass);
    CHECK(taft_fd(4, Scalar::zeta(make_field(0, 4))).verify().pass);

    auto bad = with_antipode(sweedler(), Matrix::identity(Q(), 4));
    auto rep = bad.verify();
    CHECK_FALSE(rep.pass);
    CHECK(rep.axiom == "antipode");
    CHECK_THROWS_AS(integrals_and_semisimplicity(bad), AxiomsNotVerified);
}

TEST_CASE("group tables") {
    CHECK_THROWS_AS(group_algebra(Q(), {{0, 1}, {0, 1}}), NotAGroup);
    // non-associative quasigroup of order 3 (x∘y = −x−y mod 3)
    CHECK_THROWS_AS(group_algebra(Q(), {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), NotAGroup);
    CHECK(group_algebra(Q(), symmetric_group_table(3)).dim() == 6);
}

TEST_CASE("taft algebra structure") {
    CHECK_THROWS_AS(taft_fd(2, Scalar(Q(), 1L)), WrongOrder);
    auto h = sweedler();
    // S(x) = −g⁻¹x, and S²(x) = q x = −x
    Vec x = unit_vec(Q(), 4, 1), gx = unit_vec(Q(), 4, 3);
    CHECK(h.S(x) == scale(Scalar(Q(), -1L), gx));
    CHECK(antipode_squared(h).apply(x) == scale(Scalar(Q(), -1L), x));
    CHECK_FALSE(antipode_squared(h).is_identity());
    CHECK(h.coradical_length() == 1);
}

TEST_CASE("integrals and semisimplicity") {
    for (long n : {2L, 3L, 4L}) {
        auto f = make_field(0, n);
        auto r = integrals_and_semisimplicity(group_algebra(f, cyclic_group_table(n)));
        CHECK(r.left_integral == Vec(n, Scalar::one(f)));
        CHECK(r.semisimple);
        CHECK(r.cosemisimple);
    }
    for (size_t n : {2u, 3u}) {
        auto f = make_field(0, static_cast<long>(n));
        auto h = taft_fd(n, Scalar::zeta(f));
        auto r = integrals_and_semisimplicity(h);
        Vec expect = zero_vec(f, n * n);
        for (size_t i = 0; i < n; ++i) expect[i * n + (n - 1)] = Scalar::one(f);
        CHECK(r.left_integral == expect);
        CHECK_FALSE(r.semisimple);
        CHECK_FALSE(r.cosemisimple);
    }
    auto f2 = make_field(2, 1);
    CHECK_FALSE(integrals_and_semisimplicity(group_algebra(f2, cyclic_group_table(2))).semisimple);
}

TEST_CASE("grouplikes") {
    auto g = grouplikes(group_algebra(Q(), symmetric_group_table(3)));
    CHECK(g.size() == 6);
    for (size_t i = 0; i < 6; ++i) CHECK(contains_vec(g, unit_vec(Q(), 6, i)));

    auto gs = grouplikes(sweedler());
    REQUIRE(gs.size() == 2);
    CHECK(contains_vec(gs, unit_vec(Q(), 4, 0)));
    CHECK(contains_vec(gs, unit_vec(Q(), 4, 2)));

    auto k3 = make_field(0, 3);
    auto t3 = grouplikes(taft_fd(3, Scalar::zeta(k3)));
    CHECK(t3.size() == 3);
    CHECK(grouplikes(dual(group_algebra(k3, cyclic_group_table(3)))).size() == 3);
    // over Q the characters of C3 are not rational
    CHECK_THROWS_AS(grouplikes(dual(group_algebra(Q(), cyclic_group_table(3)))), NonRationalGrouplike);
}

TEST_CASE("duals") {
    auto c2 = group_algebra(Q(), cyclic_group_table(2));
    auto d = dual(c2);
    CHECK(d.verify().pass);
    CHECK(d.dim() == 2);
    CHECK(integrals_and_semisimplicity(d).semisimple);

    auto k3 = make_field(0, 3);
    auto t3 = taft_fd(3, Scalar::zeta(k3));
    auto dd = dual(dual(t3));
    for (size_t i = 0; i < 9; ++i)
        for (size_t j = 0; j < 9; ++j) CHECK(dd.alg().product(i, j) == t3.alg().product(i, j));
    for (size_t i = 0; i < 9; ++i) CHECK(dd.comult(i) == t3.comult(i));
    CHECK(dd.antipode() == t3.antipode());

    auto td = dual(t3);
    CHECK(td.verify().pass);
    CHECK(td.dim() == 9);
    CHECK_FALSE(integrals_and_semisimplicity(td).semisimple);
    CHECK(grouplikes(td).size() == 3);

    CHECK(opposite(t3).verify().pass);
    CHECK(co_opposite(t3).verify().pass);
}

TEST_CASE("property: Maschke in both directions over fixture groups") {
    std::vector<std::vector<std::vector<size_t>>> groups{cyclic_group_table(2), cyclic_group_table(3),
                                                         cyclic_group_table(4), cyclic_group_table(6),
                                                         symmetric_group_table(3)};
    for (long p : {0L, 2L, 3L, 5L, 7L}) {
        auto f = make_field(p, 1);
        for (const auto& t : groups) {
            auto r = integrals_and_semisimplicity(group_algebra(f, t));
            bool divides = p > 0 && static_cast<long>(t.size()) % p == 0;
            CHECK(r.semisimple == !divides);
        }
    }
}

TEST_CASE("property: S² dichotomy") {
    for (const auto& t : {cyclic_group_table(3), symmetric_group_table(3)}) {
        auto h = group_algebra(Q(), t);
        CHECK(antipode_squared(h).is_identity());
        CHECK(antipode_squared(dual(h)).is_identity());
    }
    for (long n : {2L, 3L, 4L}) {
        auto h = taft_fd(static_cast<size_t>(n), Scalar::zeta(make_field(0, n)));
        CHECK_FALSE(antipode_squared(h).is_identity());
    }
}

TEST_CASE("property: grouplikes independent and closed under product and antipode") {
    auto k4 = make_field(0, 4);
    for (const auto& h : {taft_fd(2, Scalar(Q(), -1L)), taft_fd(4, Scalar::zeta(k4)),
                          group_algebra(Q(), symmetric_group_table(3)), dual(group_algebra(k4, cyclic_group_table(4)))}) {
        auto g = grouplikes(h);
        CHECK(Subspace::span(h.field(), h.dim(), g).dim() == g.size());
        for (const auto& a : g) {
            CHECK(contains_vec(g, h.S(a)));
            for (const auto& b : g) CHECK(contains_vec(g, h.alg().mul(a, b)));
        }
    }
}

TEST_CASE("property: random single-entry corruptions are detected") {
    testgen::Rng rng(5);
    auto k3 = make_field(0, 3);
    std::vector<FDHopf> base{sweedler(), taft_fd(3, Scalar::zeta(k3)), group_algebra(Q(), symmetric_group_table(3))};
    int detected = 0, cases = 0;
    for (int k = 0; k < 120; ++k) {
        const FDHopf& h = base[k % base.size()];
        const size_t n = h.dim();
        Scalar bump = testgen::scalar(rng, h.field(), 3);
        if (bump.is_zero()) bump = Scalar::one(h.field());
        std::vector<SparseVec> d;
        for (size_t i = 0; i < n; ++i) d.push_back(h.comult(i));
        Vec eps = h.counit();
        Matrix s = h.antipode();
        size_t i = testgen::uniform(rng, 0, static_cast<long>(n) - 1);
        switch (k % 3) {
            case 0: {  // one comultiplication coefficient
                Tensor2 t = densify(h.field(), n * n, d[i]);
                size_t p = testgen::uniform(rng, 0, static_cast<long>(n * n) - 1);
                t[p] += bump;
                d[i] = sparsify(t);
                break;
            }
            case 1:
                eps[i] += bump;
                break;
            default: {
                size_t j = testgen::uniform(rng, 0, static_cast<long>(n) - 1);
                s(j, i) += bump;
            }
        }
        FDHopf bad(h.alg(), d, eps, s, h.coradical_length(), "corrupt");
        if (!bad.verify().pass) ++detected;
        ++cases;
    }
    CHECK(detected == cases);
}

TEST_CASE("serial and parallel axiom sweeps agree") {
    auto k3 = make_field(0, 3);
    auto h = taft_fd(3, Scalar::zeta(k3));
    auto bad = with_antipode(h, Matrix::identity(k3, 9));
    set_parallel_kernels(false);
    auto a1 = verify_hopf_axioms(h), b1 = verify_hopf_axioms(bad);
    set_parallel_kernels(true);
    auto a2 = verify_hopf_axioms(h), b2 = verify_hopf_axioms(bad);
    CHECK(a1.pass == a2.pass);
    CHECK(b1.axiom == b2.axiom);
    CHECK(b1.witness == b2.witness);
}
