#include "doctest.h"

#include "hopforbit/errors.hpp"
#include "hopforbit/fdalg.hpp"
#include "hopforbit/solve.hpp"
#include "gen.hpp"

#include <algorithm>
#include <array>

using namespace hopforbit;

namespace {

FieldDescriptor Q() { return make_field(0, 1); }

std::vector<size_t> simple_dims(const Wedderburn& w) {
    std::vector<size_t> d;
    for (const auto& b : w.blocks)
        if (b.simple_dim) d.push_back(*b.simple_dim);
    std::sort(d.begin(), d.end());
    return d;
}

// S3 as permutations of {0,1,2}, composed right-to-left.
std::vector<std::vector<size_t>> s3_table() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<size_t>> t(6, std::vector<size_t>(6));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
            t[i][j] = std::find(perms.begin(), perms.end(), c) - perms.begin();
        }
    return t;
}

std::vector<std::vector<size_t>> cyclic_table(size_t n) {
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// k-fold product space of an ideal
Subspace power_space(const FDAlgebra& a, const Subspace& s, size_t k) {
    Subspace r = s;
    for (size_t i = 1; i < k; ++i) r = product_space(a, r, s);
    return r;
}

}  // namespace

TEST_CASE("radical examples") {
    for (size_t n = 1; n <= 5; ++n) {
        auto a = truncated_polynomial(Q(), n);
        Subspace r = radical(a);
        std::vector<Vec> expect;
        for (size_t i = 1; i < n; ++i) expect.push_back(unit_vec(Q(), n, i));
        CHECK(r == Subspace::span(Q(), n, expect));
    }
    CHECK(radical(group_algebra_of_table(Q(), cyclic_table(2))).dim() == 0);

    // F2 C2: span{1+g}, found both by the p-adic trace chain and the Frobenius kernel
    auto f2 = make_field(2, 1);
    auto f2c2 = group_algebra_of_table(f2, cyclic_table(2));
    Subspace one_plus_g = Subspace::span(f2, 2, {Vec{Scalar::one(f2), Scalar::one(f2)}});
    CHECK(radical(f2c2) == one_plus_g);
    CHECK(nilradical_commutative(f2c2) == one_plus_g);

    // F2 S3 / rad ≅ F2 × M2(F2); F3 S3 / rad ≅ F3 × F3
    CHECK(radical(group_algebra_of_table(f2, s3_table())).dim() == 1);
    CHECK(radical(group_algebra_of_table(make_field(3, 1), s3_table())).dim() == 4);
    // over 𝔽₄ the radical comes from restriction of scalars to 𝔽₂
    auto f4 = make_field(2, 3);
    CHECK(radical(group_algebra_of_table(f4, cyclic_table(2))) ==
          Subspace::span(f4, 2, {Vec{Scalar::one(f4), Scalar::one(f4)}}));
    CHECK(radical(group_algebra_of_table(f4, s3_table())).dim() == 1);
    auto f9 = make_field(3, 4);
    CHECK(radical(group_algebra_of_table(f9, s3_table())).dim() == 4);
}

TEST_CASE("property: small-characteristic radical agrees with the nilradical on commutative algebras") {
    for (long p : {2L, 3L, 5L}) {
        auto f = make_field(p, 1);
        for (size_t n = 2; n <= 9; ++n) {
            auto a = group_algebra_of_table(f, cyclic_table(n));
            CHECK(radical(a) == nilradical_commutative(a));
            size_t pp = 1;
            while (n % (pp * p) == 0) pp *= p;
            CHECK(radical(a).dim() == n - n / pp);
        }
        for (size_t n = 2; n <= 6; ++n) CHECK(radical(truncated_polynomial(f, n)).dim() == n - 1);
    }
}

TEST_CASE("wedderburn examples") {
    auto k3 = make_field(0, 3);
    auto s3 = group_algebra_of_table(k3, s3_table());
    REQUIRE_FALSE(associativity_failure(s3));
    auto w = wedderburn(s3);
    CHECK(simple_dims(w) == std::vector<size_t>{1, 1, 2});

    auto wq = wedderburn(product_of_fields(Q(), 1));
    REQUIRE(wq.blocks.size() == 1);
    CHECK(wq.blocks[0].simple_dim == 1u);

    auto c3k = wedderburn(group_algebra_of_table(k3, cyclic_table(3)));
    CHECK(simple_dims(c3k) == std::vector<size_t>{1, 1, 1});
    auto c3q = wedderburn(group_algebra_of_table(Q(), cyclic_table(3)));
    REQUIRE(c3q.blocks.size() == 2);
    CHECK(c3q.blocks[0].simple_dim == 1u);
    CHECK_FALSE(c3q.blocks[1].simple_dim);
    CHECK(c3q.blocks[1].center_degree == 2);
}

TEST_CASE("S3 over Q: the 2-dimensional block splits without roots of unity") {
    auto w = wedderburn(group_algebra_of_table(Q(), s3_table()));
    CHECK(simple_dims(w) == std::vector<size_t>{1, 1, 2});
}

TEST_CASE("maximal ideals") {
    auto tp = truncated_polynomial(Q(), 4);
    auto mx = maximal_ideals_commutative(tp);
    REQUIRE(mx.size() == 1);
    CHECK(mx[0] == radical(tp));
    CHECK(maximal_ideals_commutative(product_of_fields(Q(), 2)).size() == 2);

    PolyRing R(Q(), {"u"});
    auto a = fdalgebra_of(AffineAlgebra(Ideal(R, {parse_poly(R, "u^2-2")})));
    try {
        maximal_ideals_commutative(a);
        FAIL("expected NonSplitBlock");
    } catch (const NonSplitBlock& e) {
        CHECK(e.center_degree() == 2);
    }
}

TEST_CASE("frobenius examples") {
    for (size_t n = 1; n <= 5; ++n) {
        auto rep = is_frobenius_commutative(truncated_polynomial(Q(), n));
        CHECK(rep.frobenius);
        CHECK(rep.witness == unit_vec(Q(), n, n - 1));
    }
    PolyRing S(Q(), {"u", "v"});
    auto loc = fdalgebra_of(AffineAlgebra(Ideal(S, {parse_poly(S, "u^2"), parse_poly(S, "u*v"), parse_poly(S, "v^2")})));
    auto rep = is_frobenius_commutative(loc);
    CHECK_FALSE(rep.frobenius);
    CHECK(rep.socle_dim == 2);
    CHECK(rep.socle.size() == 2);
    CHECK(is_frobenius_commutative(product_of_fields(Q(), 2)).frobenius);
}

TEST_CASE("property: radical nilpotent, quotient semisimple, block bookkeeping") {
    testgen::Rng rng(99);
    int cases = 0;
    for (auto fd : {make_field(0, 1), make_field(0, 4), make_field(7, 1)}) {
        PolyRing S(fd, {"u", "v"});
        for (int k = 0; k < 25; ++k) {
            // random zero-dimensional quotient k[u,v]/⟨f(u), g(u,v)⟩, monic in each variable
            unsigned da = static_cast<unsigned>(testgen::uniform(rng, 1, 3));
            unsigned db = static_cast<unsigned>(testgen::uniform(rng, 1, 2));
            Poly u = Poly::var(S, 0), v = Poly::var(S, 1);
            Poly f = u.pow(da) + Poly::constant(S, testgen::scalar(rng, fd, 3));
            if (da > 1) f += u.scaled(testgen::scalar(rng, fd, 3));
            Poly g = v.pow(db) + u.scaled(testgen::scalar(rng, fd, 3)) + Poly::constant(S, testgen::scalar(rng, fd, 3));
            if (db == 2) g += (u * v).scaled(testgen::scalar(rng, fd, 2));
            auto a = fdalgebra_of(AffineAlgebra(Ideal(S, {f, g})));
            if (a.dim() == 0) continue;
            REQUIRE_FALSE(associativity_failure(a));
            REQUIRE(unit_is_identity(a));
            Subspace nil = nilradical_commutative(a);
            REQUIRE(is_two_sided_ideal(a, nil));
            REQUIRE(power_space(a, nil, std::max<size_t>(1, a.dim())).dim() == 0);
            Quotient q = quotient(a, nil);
            REQUIRE(nilradical_commutative(q.alg).dim() == 0);
            auto w = wedderburn_with_radical(a, nil);
            size_t total = 0;
            for (const auto& b : w.blocks) total += b.block_dim;
            REQUIRE(total == a.dim() - nil.dim());
            // Frobenius certificate agrees with the socle count
            auto fr = is_frobenius_commutative(a);
            REQUIRE(fr.frobenius == (fr.socle_dim == fr.semisimple_dim));
            if (fr.frobenius) REQUIRE(frobenius_form_nondegenerate(a, fr.witness));
            // split blocks ↔ rational points
            bool split = std::all_of(w.blocks.begin(), w.blocks.end(), [](const Block& b) { return b.simple_dim.has_value(); });
            auto sol = solve_zero_dim_partial(Ideal(S, {f, g}));
            REQUIRE(split == (sol.unresolved_degree == 0));
            if (split) REQUIRE(maximal_ideals_commutative(a).size() == sol.points.size());
            ++cases;
        }
    }
    CHECK(cases >= 60);
}

TEST_CASE("property: group algebra radical vanishes in characteristic zero") {
    for (size_t n = 1; n <= 6; ++n) {
        auto a = group_algebra_of_table(Q(), cyclic_table(n));
        CHECK(radical(a).dim() == 0);
        size_t total = 0;
        for (const auto& b : wedderburn(a).blocks) total += b.block_dim;
        CHECK(total == n);
    }
}
