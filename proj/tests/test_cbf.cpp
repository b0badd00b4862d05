#include "doctest.h"

#include "hopforbit/cbf.hpp"
#include "hopforbit/errors.hpp"
#include "gen.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>

using namespace hopforbit;

namespace {

CleftPresentation build_checked(CleftData d) {
    auto p = CleftPresentation::build(std::move(d));
    auto rep = verify_presentation(p);
    for (const auto& c : rep.checks) {
        INFO(p.name() << " " << c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    return p;
}

Point point(const CleftPresentation& p, std::vector<long> user) {
    Vec v;
    for (long x : user) v.push_back(Scalar(p.field(), x));
    return Point::from_user(p.ring(), v);
}

Poly P(const CleftPresentation& p, const std::string& s) { return parse_poly(p.ring(), s); }

std::vector<size_t> sorted(std::vector<size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("dihedral crossed product") {
    auto p = build_checked(dihedral_data());
    CHECK(p.n() == 2);
    auto a = p.lift(1);
    auto b = p.from_A(P(p, "b"));
    auto aba = multiply(p, multiply(p, a, b), a);
    CHECK(equal(p, aba, p.from_A(P(p, "b^-1"))));
    CHECK(equal(p, multiply(p, a, a), p.one()));
    // (a#1)(b#1) = ab#1 inside A
    auto x = p.from_A(P(p, "b^2 + 3")), y = p.from_A(P(p, "b^-1 - b"));
    CHECK(equal(p, multiply(p, x, y), p.from_A(P(p, "(b^2 + 3)*(b^-1 - b)"))));
    CHECK(counit(p, aba) == Scalar::one(p.field()));
    CHECK(equal(p, antipode(p, b), p.from_A(P(p, "b^-1"))));

    auto norm = check_normality(p);
    CHECK(norm.pass);
    CHECK(norm.left[1][0] == P(p, "b^-1"));
    CHECK(norm.left[0][0] == P(p, "b"));

    auto left = adjoint_action(p, Side::left);
    CHECK(left.value(1, 0) == P(p, "b^-1"));

    auto dims = dimension_invariants(p);
    CHECK(dims.krull_matches);
    CHECK(dims.invariants_central);
}

TEST_CASE("dihedral simple modules") {
    auto p = build_checked(dihedral_data());
    for (long lam : {2L, 3L, 5L, -4L}) {
        auto r = simple_dims_at(p, point(p, {lam}));
        CHECK(r.core_dim == 2);
        CHECK(r.quotient_dim == 4);
        CHECK(r.simple_dims == std::vector<size_t>{2});
        CHECK(r.annihilator_matched_dims == std::vector<size_t>{2});
    }
    for (long lam : {1L, -1L}) {
        auto r = simple_dims_at(p, point(p, {lam}));
        CHECK(r.core_dim == 1);
        CHECK(r.simple_dims == std::vector<size_t>{1, 1});
    }
    // J = ⟨(b−λ)(b−λ⁻¹)⟩ is stable, A⁺ gives H̄ back
    auto J = Ideal(p.ring(), {P(p, "(b-2)*(b-1/2)")});
    CHECK(stable_quotient(p, J).dim() == 4);
    CHECK(stable_quotient(p, Ideal(p.ring(), {P(p, "b-1")})).dim() == 2);
    CHECK_THROWS_AS(stable_quotient(p, Ideal(p.ring(), {P(p, "b-2")})), NotStable);

    auto pi = pi_degree_scan(p, {point(p, {2}), point(p, {3}), point(p, {-1}), point(p, {1})});
    CHECK(pi.max_simple_dim == 2);
    REQUIRE(pi.gamma_order);
    CHECK(*pi.gamma_order == 2);
    CHECK(pi.matches_gamma);
}

TEST_CASE("taft presentations") {
    for (auto [n, t] : {std::pair{2L, 1L}, {3L, 1L}, {4L, 2L}}) {
        auto p = build_checked(taft_data(n, t));
        CHECK(p.A().krull_dim() == 1);
    }
    auto p = build_checked(taft_data(2, 1, 1));
    CHECK(p.n() == 4);
    // g·X = q^{-n'}X = X for n = n' = 2; the lift of x acts by zero
    auto norm = check_normality(p);
    CHECK(norm.left[2][0] == P(p, "X"));
    CHECK(norm.left[1][0].is_zero());
    // augmentation point: H/⟨X⟩H is the Sweedler algebra
    auto r = simple_dims_at(p, point(p, {0}));
    CHECK(r.core_dim == 1);
    CHECK(r.quotient_dim == 4);
    CHECK(r.simple_dims == std::vector<size_t>{1, 1});
    // S² is not the identity on the lift of x, S is still injective on a spanning set
    auto x = p.lift(1);
    auto s2 = antipode(p, antipode(p, x));
    CHECK(!equal(p, s2, x));
    CHECK(equal(p, s2, scale(p, Scalar(p.field(), -1L), x)));
}

TEST_CASE("liu presentations") {
    auto p = build_checked(liu_data(2, 1, 1));
    auto g = p.lift(2), y = p.lift(1);
    auto g2 = multiply(p, g, g);
    auto y2 = multiply(p, y, y);
    CHECK(equal(p, g2, p.from_A(P(p, "x"))));
    CHECK(equal(p, add(p, g2, y2), p.one()));
    auto left = adjoint_action(p, Side::left);
    for (size_t h = 0; h < p.n(); ++h) CHECK(left.value(h, 0) == (h % 2 == 0 ? P(p, "x") : Poly(p.ring())));
    auto dims = dimension_invariants(p, 2);
    CHECK(dims.invariants_central);
    CHECK(dims.invariants.size() == 5);  // 1, x, x⁻¹, x², x⁻² (partners count towards degree)
    build_checked(liu_data(3, 1, 1));
}

TEST_CASE("quantum plane and GZ presentations") {
    for (long l : {2L, 3L}) {
        auto p = build_checked(quantum_plane_data(1, l));
        CHECK(p.A().krull_dim() == 2);
        CHECK(p.n() == static_cast<size_t>(l * l));
    }
    auto gz = build_checked(gz_b_data(1, {1, 2, 3}));
    CHECK(gz.n() == 36);
    CHECK(gz.A().krull_dim() == 2);
}

TEST_CASE("restricted sl2 presentation") {
    auto p = build_checked(restricted_sl2_data(2));
    CHECK(p.n() == 8);
    CHECK(p.A().krull_dim() == 3);
    auto e = p.lift(4), f = p.lift(2), h = p.lift(1);
    auto ef = multiply(p, e, f), fe = multiply(p, f, e);
    CHECK(equal(p, add(p, ef, scale(p, Scalar(p.field(), -1L), fe)), h));
    auto r = simple_dims_at(p, point(p, {0, 0, 0}));
    CHECK(r.quotient_dim == 8);
    CHECK(r.simple_dims == std::vector<size_t>{1, 2});
}

TEST_CASE("corrupted presentations are rejected") {
    auto d = taft_data(2, 1);
    d.gen_comult[1].erase(d.gen_comult[1].begin());  // drop x⊗1
    auto p = CleftPresentation::build(d);
    auto rep = verify_presentation(p);
    CHECK(!rep.pass);
    REQUIRE(rep.failure());

    auto d2 = dihedral_data();
    d2.measuring[1][0] = parse_poly(d2.A.ring(), "b^2");  // a·b = b² is not an involution
    auto p2 = CleftPresentation::build(d2);
    auto r2 = verify_presentation(p2);
    CHECK(!r2.pass);
    bool assoc_failed = false;
    for (const auto& c : r2.checks)
        if (c.name == "associativity" && !c.pass) assoc_failed = true;
    CHECK(assoc_failed);

    FamilyParams fp;
    fp.family = "taft";
    fp.n = 3;
    fp.t = 1;
    fp.q_power = 3;
    CHECK_THROWS_AS(make_family(fp), BadParameters);
}

TEST_CASE("elements of different presentations do not mix") {
    auto p = CleftPresentation::build(dihedral_data());
    auto q = CleftPresentation::build(dihedral_data());
    CHECK_THROWS_AS(multiply(p, p.one(), q.one()), PresentationMismatch);
}

TEST_CASE("structure chain: (⟨x⟩ × S3) ⋊ C2") {
    auto g = z_times_s3_by_c2();
    auto p = build_checked(group_data(make_field(0, 1), g, {1, 1}));
    auto c = structure_chain_group_case(p);
    CHECK(c.P == Ideal(p.ring(), {P(p, "s - 1")}));
    CHECK(c.gamma_order == 2);
    CHECK(c.gamma_kernel == std::vector<size_t>{0, 1});
    // B = k⟨σ⟩, D = k(⟨x⟩ × S3), E = kS3
    CHECK(subgroup_equal(c.B, subgroup_generated(g, {{0, 1}}, {})));
    CHECK(subgroup_equal(c.D, subgroup_generated(g, {{1, 0}, {0, 1}}, {1})));
    CHECK(subgroup_equal(c.E, subgroup_generated(g, {{0, 1}}, {1})));
    CHECK(subgroup_equal(c.L, c.E));  // L = ω(S3)D = PD + (β−1)D
    CHECK(c.D_mod_L_rank == 1);
    CHECK(c.D_mod_L_domain);
    CHECK(c.A_mod_P_central);
    for (const auto& [name, strict] : c.inclusions) {
        INFO(name);
        CHECK(strict);
    }
    CHECK(c.B_coinvariants_match);
    CHECK(c.C_coinvariants_match);

    // σ = 1 points: dim V = ℓ·|Γ : C_Γ(m)|
    for (long lam : {2L, 3L, 1L, -1L}) {
        auto m = point(p, {lam, 1});
        auto r = simple_dims_at(p, m);
        size_t orbit = c.gamma_order / gamma_stabilizer_order(p, c, m);
        for (size_t dv : r.annihilator_matched_dims) {
            CHECK(dv % orbit == 0);
            CHECK(dv <= c.gamma_order);
        }
        if (lam == 2 || lam == 3) CHECK(*std::max_element(r.simple_dims.begin(), r.simple_dims.end()) == 2);
    }
}

TEST_CASE("structure chain: k[x^±1] over k[x^±2]") {
    GroupPresentation g;
    g.free_rank = 1;
    g.F_table = {{0}};
    g.F_action = {{{1}}};
    g.N_names = {"x"};
    auto p = build_checked(group_data(make_field(0, 1), g, {2}));
    CHECK(p.n() == 2);
    auto c = structure_chain_group_case(p);
    CHECK(c.gamma_order == 1);
    CHECK(subgroup_equal(c.D, c.H));
    bool a_strict = false;
    for (const auto& [name, strict] : c.inclusions)
        if (name == "A⊆D") a_strict = strict;
    CHECK(a_strict);
}

TEST_CASE("structure chain: dihedral") {
    auto p = CleftPresentation::build(dihedral_data());
    auto c = structure_chain_group_case(p);
    CHECK(c.P == p.A().ideal());
    CHECK(c.gamma_order == 2);
    CHECK(subgroup_equal(c.D, c.A));
    CHECK(subgroup_equal(c.E, c.C));
    CHECK(subgroup_equal(c.L, c.C));
}

TEST_CASE("coinvariants of A over its augmentation quotient") {
    auto p = CleftPresentation::build(taft_data(2, 1));
    // A^{co A/⟨X⟩} = A: Δ(X) − X⊗1 = 1⊗X vanishes modulo X in the second factor
    auto co = coinvariants_up_to(p, Ideal(p.ring(), {P(p, "X")}), 3);
    CHECK(co.size() == 4);
    auto co0 = coinvariants_up_to(p, p.A().ideal(), 3);
    CHECK(co0.size() == 1);
}
