#include "doctest.h"

#include "hopforbit/action.hpp"
#include "hopforbit/errors.hpp"
#include "gen.hpp"

#include <algorithm>
#include <array>

using namespace hopforbit;

namespace {

FieldDescriptor Q() { return make_field(0, 1); }

// Taft(n) on k[u,v]: g·u = u, g·v = qv, x·u = 0, x·v = u. Basis g^i x^j at i·n + j.
ActionSpec taft_plane(size_t n, const FieldDescriptor& f, bool corrupt = false) {
    Scalar q = n == 2 ? Scalar(f, -1L) : Scalar::zeta(f);
    PolyRing R(f, {"u", "v"});
    Poly u = Poly::var(R, 0), v = Poly::var(R, 1);
    std::vector<std::vector<Poly>> table;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Poly tu = j == 0 ? u : Poly(R);
            Poly tv = j == 0 ? v.scaled(q.pow(static_cast<long>(i))) : (j == 1 ? u : Poly(R));
            if (corrupt && j == 1) tv = v.scaled(q.pow(static_cast<long>(i)));
            table.push_back({tu, tv});
        }
    return ActionSpec(taft_fd(n, q), AffineAlgebra(Ideal::zero(R)), table);
}

// C2 acting on Q[u] by u ↦ −u
ActionSpec sign_action() {
    PolyRing R(Q(), {"u"});
    Poly u = Poly::var(R, 0);
    return ActionSpec(group_algebra(Q(), cyclic_group_table(2)), AffineAlgebra(Ideal::zero(R)), {{u}, {-u}});
}

// C2 acting on Q[x^±1] by inversion; the action on x⁻¹ is derived.
ActionSpec inversion_action() {
    PolyRing R(Q(), {"x"}, {true});
    return ActionSpec(group_algebra(Q(), cyclic_group_table(2)), AffineAlgebra(Ideal::zero(R)),
                      {{Poly::var(R, 0)}, {parse_poly(R, "x^-1")}});
}

std::vector<std::array<int, 3>> s3_perms() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

// S3 permuting the variables of Q[x0,x1,x2]
ActionSpec permutation_action() {
    auto perms = s3_perms();
    std::vector<std::vector<size_t>> t(6, std::vector<size_t>(6));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
            t[i][j] = std::find(perms.begin(), perms.end(), c) - perms.begin();
        }
    PolyRing R(Q(), {"x0", "x1", "x2"});
    std::vector<std::vector<Poly>> table;
    for (const auto& p : perms) table.push_back({Poly::var(R, p[0]), Poly::var(R, p[1]), Poly::var(R, p[2])});
    return ActionSpec(group_algebra(Q(), t), AffineAlgebra(Ideal::zero(R)), table);
}

Point pt(const PolyRing& R, std::vector<long> c) {
    Vec v;
    for (long x : c) v.push_back(Scalar(R.field(), x));
    return Point::from_user(R, v);
}

Ideal ideal_of(const PolyRing& R, std::initializer_list<const char*> gens) {
    std::vector<Poly> g;
    for (const char* s : gens) g.push_back(parse_poly(R, s));
    return Ideal(R, g);
}

// t·(generator) ∈ core for every basis t
bool is_stable(const ActionSpec& spec, const Ideal& c) {
    Actor a(spec);
    for (const auto& g : c.groebner())
        for (size_t t = 0; t < spec.hopf().dim(); ++t)
            if (!c.contains(a.act_basis(t, g))) return false;
    return true;
}

}  // namespace

TEST_CASE("taft action on the plane") {
    auto spec = taft_plane(2, Q());
    CHECK(verify_module_algebra(spec).pass);
    const PolyRing& R = spec.ring();
    Vec x = unit_vec(Q(), 4, 1);
    CHECK(act(spec, x, parse_poly(R, "u*v")) == parse_poly(R, "u^2"));
    CHECK(act(spec, x, parse_poly(R, "v^2")).is_zero());

    for (long a : {1L, 2L, -3L}) {
        Ideal c = core(spec, pt(R, {a, 0}).ideal());
        CHECK(c == ideal_of(R, {("u-" + std::to_string(a)).c_str(), "v^2"}));
    }
    // at u = 0 the point ideal is already stable
    CHECK(core(spec, pt(R, {0, 0}).ideal()) == pt(R, {0, 0}).ideal());

    auto k3 = make_field(0, 3);
    auto s3 = taft_plane(3, k3);
    CHECK(verify_module_algebra(s3).pass);
    CHECK(core(s3, pt(s3.ring(), {1, 0}).ideal()) == ideal_of(s3.ring(), {"u-1", "v^3"}));
}

TEST_CASE("corrupted taft action fails verification") {
    auto rep = verify_module_algebra(taft_plane(2, Q(), true));
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.failure.empty());
}

TEST_CASE("relations must be preserved") {
    PolyRing R(Q(), {"u"});
    // u ↦ −u does not preserve u² − u
    CHECK_THROWS_AS(ActionSpec(group_algebra(Q(), cyclic_group_table(2)),
                               AffineAlgebra(ideal_of(R, {"u^2-u"})), {{Poly::var(R, 0)}, {-Poly::var(R, 0)}}),
                    DomainError);
}

TEST_CASE("trivial and sign actions") {
    auto c2 = group_algebra(Q(), cyclic_group_table(2));
    PolyRing R(Q(), {"u", "v"});
    auto triv = trivial_action(c2, AffineAlgebra(Ideal::zero(R)));
    CHECK(verify_module_algebra(triv).pass);
    Point m = pt(R, {3, -1});
    CHECK(core(triv, m.ideal()) == m.ideal());

    auto sgn = sign_action();
    const PolyRing& S = sgn.ring();
    Ideal c = core(sgn, ideal_of(S, {"u-1"}));
    CHECK(c == ideal_of(S, {"u^2-1"}));
    CHECK(c == ideal_of(S, {"u-1"}).intersect(ideal_of(S, {"u+1"})));
    CHECK(core(sgn, ideal_of(S, {"u"})) == ideal_of(S, {"u"}));
}

TEST_CASE("invariants") {
    auto sgn = sign_action();
    auto inv = invariants_up_to_degree(sgn, 4);
    CHECK(inv.size() == 3);  // 1, u², u⁴
    for (const auto& p : inv)
        for (const auto& t : p.terms()) CHECK(t.e[0] % 2 == 0);
    auto taft = taft_plane(3, make_field(0, 3));
    for (const auto& p : invariants_up_to_degree(taft, 3))
        for (size_t t = 0; t < 9; ++t)
            CHECK(act(taft, unit_vec(taft.hopf().field(), 9, t), p) == p.scaled(taft.hopf().counit()[t]));
}

TEST_CASE("orbit records") {
    auto spec = taft_plane(2, Q());
    auto rec = orbit(spec, pt(spec.ring(), {1, 0}));
    CHECK(rec.dimension() == 2);
    CHECK(rec.members.size() == 1);
    CHECK(rec.frobenius.frobenius);
    CHECK(rec.t_simple.t_simple);
    CHECK_FALSE(rec.semisimple);
    CHECK_FALSE(orbital_semisimplicity_at(spec, pt(spec.ring(), {1, 0})));

    // k[v]/v² with the trivial action is not T-simple: ⟨v⟩ is stable
    auto tp = truncated_polynomial(Q(), 2);
    std::vector<Matrix> triv{Matrix::identity(Q(), 2), Matrix::identity(Q(), 2)};
    auto cert = is_T_simple(tp, triv);
    CHECK_FALSE(cert.t_simple);
    CHECK(cert.proper_stable_ideal.size() == 1);

    auto sgn = sign_action();
    auto r2 = orbit(sgn, pt(sgn.ring(), {1}));
    CHECK(r2.members.size() == 2);
    CHECK(r2.semisimple);
    CHECK(r2.t_simple.t_simple);
    CHECK(orbital_semisimplicity_at(sgn, pt(sgn.ring(), {1})));
}

TEST_CASE("laurent inversion action") {
    auto spec = inversion_action();
    CHECK(verify_module_algebra(spec).pass);
    const PolyRing& R = spec.ring();
    auto rec = orbit(spec, pt(R, {2}));
    CHECK(rec.members.size() == 2);
    CHECK(rec.core == ideal_of(R, {"x^2-5/2*x+1"}));
    auto fixed = orbit(spec, pt(R, {1}));
    CHECK(fixed.members.size() == 1);
    CHECK(fixed.core == ideal_of(R, {"x-1"}));
    CHECK(fixed.semisimple);
}

TEST_CASE("dual group action is a grading") {
    // δ_e kills odd parts, δ_g keeps them; u has degree g
    auto kg = dual(group_algebra(Q(), cyclic_group_table(2)));
    PolyRing R(Q(), {"u"});
    Poly u = Poly::var(R, 0);
    ActionSpec spec(kg, AffineAlgebra(Ideal::zero(R)), {{Poly(R)}, {u}});
    CHECK(verify_module_algebra(spec).pass);
    CHECK(core(spec, ideal_of(R, {"u-3"})) == ideal_of(R, {"u^2-9"}));
}

TEST_CASE("permutation action of S3") {
    auto spec = permutation_action();
    CHECK(verify_module_algebra(spec).pass);
    const PolyRing& R = spec.ring();
    auto gen = orbit(spec, pt(R, {1, 2, 3}));
    CHECK(gen.members.size() == 6);
    CHECK(gen.semisimple);
    auto deg = orbit(spec, pt(R, {1, 1, 2}));
    CHECK(deg.members.size() == 3);
    CHECK(deg.semisimple);
}

TEST_CASE("degree bound exhaustion") {
    auto spec = taft_plane(2, Q()).with_degree_bound(1);
    // v² is needed, which has degree 2
    CHECK_THROWS_AS(core(spec, pt(spec.ring(), {1, 0}).ideal()), DegreeBoundExhausted);
}

TEST_CASE("property: cores are stable, inside I, and cofinite") {
    testgen::Rng rng(17);
    std::vector<ActionSpec> specs{taft_plane(2, Q()), sign_action(), inversion_action(), permutation_action()};
    int cases = 0;
    for (int k = 0; k < 40; ++k) {
        const ActionSpec& spec = specs[k % specs.size()];
        const PolyRing& R = spec.ring();
        std::vector<long> c;
        for (size_t i = 0; i < R.nuser(); ++i) {
            long x = testgen::uniform(rng, -3, 3);
            if (R.is_laurent(i) && x == 0) x = 1;
            c.push_back(x);
        }
        Point m = pt(R, c);
        Ideal I = m.ideal();
        Ideal co = core(spec, I);
        REQUIRE(I.contains(co));
        REQUIRE(is_stable(spec, co));
        REQUIRE(finite_staircase(R, co.groebner()).has_value());
        // every member shares the core (checked inside orbit) and semisimplicity agrees
        auto rec = orbit(spec, m);
        Ideal inter = Ideal::unit(R);
        for (const auto& p : rec.members) inter = inter.intersect(p.ideal());
        REQUIRE((inter == co) == rec.semisimple);
        REQUIRE(rec.frobenius.frobenius);
        REQUIRE(rec.t_simple.t_simple);
        ++cases;
    }
    CHECK(cases == 40);
}

TEST_CASE("property: grouplike cores control cores") {
    auto spec = taft_plane(2, Q());
    const PolyRing& R = spec.ring();
    std::vector<Point> pts;
    for (long a : {1L, 2L})
        for (long b : {0L, 1L, -1L, 2L}) pts.push_back(pt(R, {a, b}));
    std::vector<Ideal> cores, gcores;
    for (const auto& p : pts) {
        auto rep = coradical_core_containment(spec, p);
        CHECK(rep.contained);
        cores.push_back(rep.core);
        gcores.push_back(rep.grouplike_core);
    }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) CHECK((cores[i] == cores[j]) == (gcores[i] == gcores[j]));
}

TEST_CASE("serial and parallel orbit sweeps agree") {
    auto spec = permutation_action();
    const PolyRing& R = spec.ring();
    std::vector<Point> pts{pt(R, {1, 2, 3}), pt(R, {0, 0, 1}), pt(R, {2, 2, 2}), pt(R, {-1, 1, 0})};
    set_parallel_kernels(false);
    auto a = orbits(spec, pts);
    set_parallel_kernels(true);
    auto b = orbits(spec, pts);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].core == b[i].core);
        CHECK(a[i].members == b[i].members);
    }
}
