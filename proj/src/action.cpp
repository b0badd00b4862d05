#include "hopforbit/action.hpp"

#include "hopforbit/errors.hpp"

#include <algorithm>
#include <deque>

namespace hopforbit {

namespace {

bool is_grouplike_basis(const FDHopf& h, size_t t) {
    const SparseVec& d = h.comult(t);
    return d.size() == 1 && d[0].first == t * h.dim() + t && d[0].second.is_one() && h.counit()[t].is_one();
}

// (c·x^a)⁻¹ for a unit monomial of a Laurent ring: swap each Laurent
// variable's exponent with its partner's.
Poly invert_unit_monomial(const Poly& p) {
    const PolyRing& R = p.ring();
    if (p.size() != 1) throw SchemaError("cannot invert " + p.to_string() + "; give the action on x^-1 explicitly");
    const Exp& e = p.lm();
    Exp inv(e.size(), 0);
    for (size_t i = 0; i < R.nvars(); ++i) {
        if (e[i] == 0) continue;
        if (R.partner(i) < 0) throw SchemaError("cannot invert " + p.to_string() + "; give the action on x^-1 explicitly");
        inv[R.partner(i)] = e[i];
    }
    return Poly::monomial(R, inv, p.lc().inverse());
}

std::string show_vars(const PolyRing& R, size_t v) { return R.name(v); }

}  // namespace

ActionSpec::ActionSpec(FDHopf hopf, AffineAlgebra algebra, std::vector<std::vector<Poly>> table, int degree_bound)
    : hopf_(std::move(hopf)), algebra_(std::move(algebra)), table_(std::move(table)), degree_bound_(degree_bound) {
    const PolyRing& R = algebra_.ring();
    if (R.has_elimination()) throw SchemaError("module algebra ring must not carry elimination variables");
    if (hopf_.field() != R.field()) throw DescriptorMismatch("Hopf algebra and module algebra use different fields");
    if (table_.size() != hopf_.dim())
        throw SchemaError("action table has " + std::to_string(table_.size()) + " rows, expected " +
                          std::to_string(hopf_.dim()));
    for (size_t t = 0; t < table_.size(); ++t) {
        auto& row = table_[t];
        if (row.size() == R.nuser() && R.nvars() > R.nuser()) {
            if (!is_grouplike_basis(hopf_, t))
                throw SchemaError("action on Laurent inverses must be given explicitly for non-grouplike basis element " +
                                  std::to_string(t));
            row.resize(R.nvars());
            for (size_t v = 0; v < R.nuser(); ++v)
                if (R.is_laurent(v)) row[R.partner(v)] = algebra_.nf(invert_unit_monomial(algebra_.nf(row[v])));
        }
        if (row.size() != R.nvars())
            throw SchemaError("action table row " + std::to_string(t) + " has the wrong number of entries");
        for (auto& p : row) {
            if (p.ring() != R) throw RingMismatch("action value in the wrong ring");
            p = algebra_.nf(p);
        }
    }
    if (degree_bound_ <= 0) degree_bound_ = default_degree_bound(hopf_, algebra_);

    // the defining ideal must be stable: t·r ∈ I for every generator r
    Actor actor(*this);
    for (const auto& r : algebra_.ideal().groebner())
        for (size_t t = 0; t < hopf_.dim(); ++t)
            if (!actor.act_basis(t, r).is_zero())
                throw DomainError("action does not preserve the defining relation " + r.to_string() +
                                  " under basis element " + std::to_string(t));
}

ActionSpec ActionSpec::with_degree_bound(int d) const {
    ActionSpec s = *this;
    s.degree_bound_ = d > 0 ? d : default_degree_bound(hopf_, algebra_);
    return s;
}

int ActionSpec::default_degree_bound(const FDHopf& hopf, const AffineAlgebra& algebra) {
    int maxdeg = 1;
    for (const auto& g : algebra.ideal().generators()) maxdeg = std::max(maxdeg, g.degree());
    return 2 * maxdeg * static_cast<int>(hopf.dim());
}

ActionSpec trivial_action(const FDHopf& hopf, const AffineAlgebra& algebra) {
    const PolyRing& R = algebra.ring();
    std::vector<std::vector<Poly>> table(hopf.dim());
    for (size_t t = 0; t < hopf.dim(); ++t)
        for (size_t v = 0; v < R.nvars(); ++v) table[t].push_back(Poly::var(R, v).scaled(hopf.counit()[t]));
    return ActionSpec(hopf, algebra, std::move(table));
}

// ---------------------------------------------------------------------------

const Poly& Actor::on_monomial(size_t t, const Exp& e) {
    auto key = std::make_pair(t, e);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const ActionSpec& s = *spec_;
    const PolyRing& R = s.ring();
    const size_t n = s.hopf().dim();
    Poly out(R);
    auto v = std::find_if(e.begin(), e.end(), [](int k) { return k > 0; });
    if (v == e.end()) {
        out = Poly::constant(R, s.hopf().counit()[t]);
    } else {
        size_t var = static_cast<size_t>(v - e.begin());
        Exp rest = e;
        --rest[var];
        // t·(x·m) = Σ (t₁·x)(t₂·m)
        for (const auto& [jk, c] : s.hopf().comult(t)) {
            const Poly& left = s.value(jk / n, var);
            if (left.is_zero()) continue;
            Poly right = on_monomial(jk % n, rest);
            if (right.is_zero()) continue;
            out += (left * right).scaled(c);
        }
        out = s.algebra().nf(out);
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

Poly Actor::act_basis(size_t t, const Poly& f) {
    Poly out(spec_->ring());
    for (const auto& term : f.terms()) out += on_monomial(t, term.e).scaled(term.c);
    return out;
}

Poly Actor::act(const Vec& t, const Poly& f) {
    Poly out(spec_->ring());
    for (size_t i = 0; i < t.size(); ++i)
        if (!t[i].is_zero()) out += act_basis(i, f).scaled(t[i]);
    return out;
}

Poly act(const ActionSpec& spec, const Vec& t, const Poly& f) { return Actor(spec).act(t, f); }

// ---------------------------------------------------------------------------

ModuleAlgebraReport verify_module_algebra(const ActionSpec& spec) {
    ModuleAlgebraReport rep;
    auto fail = [&](std::string what, std::string witness) {
        rep.pass = false;
        rep.failure = std::move(what);
        rep.witness = std::move(witness);
        return rep;
    };
    const FDHopf& h = spec.hopf();
    const auto& hv = h.verify();
    if (!hv.pass) return fail("hopf axioms", hv.axiom);

    const PolyRing& R = spec.ring();
    const size_t n = h.dim();
    const FieldDescriptor& f = h.field();
    Actor actor(spec);
    auto label = [&](size_t t) {
        const auto& l = h.alg().labels();
        return t < l.size() ? l[t] : "e" + std::to_string(t);
    };

    for (size_t v = 0; v < R.nvars(); ++v) {
        Poly x = Poly::var(R, v);
        if (actor.act(h.alg().unit(), x) != spec.algebra().nf(x)) return fail("unit acts as identity", show_vars(R, v));
    }
    // (st)·x = s·(t·x)
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t) {
            Vec st = h.alg().basis_product(s, t);
            for (size_t v = 0; v < R.nvars(); ++v) {
                Poly x = Poly::var(R, v);
                if (actor.act(st, x) != actor.act_basis(s, actor.act_basis(t, x)))
                    return fail("module associativity", label(s) + "*" + label(t) + " on " + show_vars(R, v));
            }
        }
    // measuring is only well defined if splitting x·y in either order agrees
    for (size_t t = 0; t < n; ++t)
        for (size_t v = 0; v < R.nvars(); ++v)
            for (size_t w = v + 1; w < R.nvars(); ++w) {
                Poly xy = Poly::var(R, v) * Poly::var(R, w);
                Poly swapped(R);
                for (const auto& [jk, c] : h.comult(t))
                    swapped += (spec.value(jk / n, w) * spec.value(jk % n, v)).scaled(c);
                if (actor.act_basis(t, xy) != spec.algebra().nf(swapped))
                    return fail("measuring", label(t) + " on " + show_vars(R, v) + "*" + show_vars(R, w));
            }
    // measuring on products of small monomials, checked against Δ directly
    auto monos = standard_monomials_up_to(R, spec.algebra().ideal().groebner(), 2);
    for (size_t t = 0; t < n; ++t)
        for (size_t a = 0; a < monos.size(); ++a)
            for (size_t b = a; b < monos.size(); ++b) {
                Poly pa = Poly::monomial(R, monos[a], Scalar::one(f)), pb = Poly::monomial(R, monos[b], Scalar::one(f));
                Poly rhs(R);
                for (const auto& [jk, c] : h.comult(t))
                    rhs += (actor.act_basis(jk / n, pa) * actor.act_basis(jk % n, pb)).scaled(c);
                if (actor.act_basis(t, spec.algebra().nf(pa * pb)) != spec.algebra().nf(rhs))
                    return fail("measuring", label(t) + " on " + pa.to_string() + "*" + pb.to_string());
            }
    for (const auto& r : spec.algebra().ideal().groebner())
        for (size_t t = 0; t < n; ++t)
            if (!actor.act_basis(t, r).is_zero()) return fail("relations preserved", label(t) + " on " + r.to_string());
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Vec> basis_elements(const FDHopf& h) {
    std::vector<Vec> out;
    for (size_t i = 0; i < h.dim(); ++i) out.push_back(h.alg().basis(i));
    return out;
}

// Solves Σ c_m (t·m − ε(t) m) = 0 over the given monomials.
std::vector<Poly> invariants_among(Actor& actor, const ActionSpec& spec, const std::vector<Exp>& monos,
                                   const std::vector<Vec>& acting) {
    const PolyRing& R = spec.ring();
    const FieldDescriptor& f = R.field();
    std::map<std::pair<size_t, Exp>, size_t> rows;
    std::vector<std::vector<std::pair<size_t, Scalar>>> cols(monos.size());
    for (size_t m = 0; m < monos.size(); ++m) {
        Poly pm = Poly::monomial(R, monos[m], Scalar::one(f));
        for (size_t a = 0; a < acting.size(); ++a) {
            Poly r = actor.act(acting[a], pm) - pm.scaled(spec.hopf().epsilon(acting[a]));
            for (const auto& term : r.terms()) {
                auto key = std::make_pair(a, term.e);
                auto it = rows.emplace(key, rows.size()).first;
                cols[m].emplace_back(it->second, term.c);
            }
        }
    }
    Matrix M(f, rows.size(), monos.size());
    for (size_t m = 0; m < monos.size(); ++m)
        for (const auto& [r, c] : cols[m]) M(r, m) += c;
    std::vector<Poly> out;
    for (const auto& k : kernel(M)) {
        Poly p(R);
        for (size_t m = 0; m < monos.size(); ++m)
            if (!k[m].is_zero()) p += Poly::monomial(R, monos[m], k[m]);
        out.push_back(p);
    }
    return out;
}

Matrix action_matrix(Actor& actor, const AffineAlgebra& B, const FiniteData& fd, const Vec& t) {
    const PolyRing& R = B.ring();
    std::vector<Vec> cols;
    for (const auto& e : fd.basis) cols.push_back(B.coords(actor.act(t, Poly::monomial(R, e, Scalar::one(R.field())))));
    return Matrix::from_columns(R.field(), cols, fd.basis.size());
}

}  // namespace

std::vector<Poly> invariants_up_to_degree(const ActionSpec& spec, int d, const std::vector<Vec>& acting) {
    Actor actor(spec);
    return invariants_among(actor, spec, standard_monomials_up_to(spec.ring(), spec.algebra().ideal().groebner(), d),
                            acting);
}

std::vector<Poly> invariants_up_to_degree(const ActionSpec& spec, int d) {
    return invariants_up_to_degree(spec, d, basis_elements(spec.hopf()));
}

Ideal core_for(const ActionSpec& spec, const Ideal& I, const std::vector<Vec>& acting) {
    const PolyRing& R = spec.ring();
    if (I.ring() != R) throw RingMismatch("ideal and module algebra live in different rings");
    spec.hopf().require_verified();
    const Ideal& defining = spec.algebra().ideal();
    Ideal full = I + defining;
    if (full.is_unit()) return full;
    const FieldDescriptor& f = R.field();
    Actor actor(spec);

    // Step 1: the invariants lying in I generate a stable ideal J ⊆ I; raise
    // the degree until A/J is finite.
    std::optional<Ideal> J;
    size_t last_count = 0;
    for (int d = 1; d <= spec.degree_bound() && !J; ++d) {
        auto monos = standard_monomials_up_to(R, defining.groebner(), d);
        auto inv = invariants_among(actor, spec, monos, acting);
        // combinations vanishing modulo I
        std::vector<Poly> reduced;
        std::map<Exp, size_t> rows;
        for (const auto& p : inv) {
            reduced.push_back(full.normal_form(p));
            for (const auto& t : reduced.back().terms()) rows.emplace(t.e, rows.size());
        }
        Matrix M(f, rows.size(), inv.size());
        for (size_t c = 0; c < inv.size(); ++c)
            for (const auto& t : reduced[c].terms()) M(rows[t.e], c) = t.c;
        std::vector<Poly> gens = defining.generators();
        size_t count = 0;
        for (const auto& k : kernel(M)) {
            Poly p(R);
            for (size_t c = 0; c < inv.size(); ++c)
                if (!k[c].is_zero()) p += inv[c].scaled(k[c]);
            if (!p.is_zero()) {
                gens.push_back(p);
                ++count;
            }
        }
        if (count == 0 || count == last_count) continue;
        last_count = count;
        Ideal cand(R, gens);
        if (finite_staircase(R, cand.groebner())) J = cand;
    }
    if (!J) throw DegreeBoundExhausted(spec.degree_bound());

    // Step 2: inside the finite quotient B = A/J, the core is the largest
    // stable subspace of Ī, i.e. {x ∈ B : t·x ∈ Ī for all acting t}.
    AffineAlgebra B(R, *J);
    const FiniteData* fd = B.finite_data();
    const size_t n = fd->basis.size();
    Subspace Ibar(f, n);
    for (const auto& g : I.generators())
        for (const auto& e : fd->basis) Ibar.insert(B.coords(g * Poly::monomial(R, e, Scalar::one(f))));
    std::vector<Matrix> mats;
    Subspace K = Ibar;
    for (const auto& t : acting) {
        mats.push_back(action_matrix(actor, B, *fd, t));
        K = K.intersect(preimage(mats.back(), Ibar));
    }
    for (const auto& m : fd->mult)
        if (!image(m, K).subset_of(K)) throw CertificateFailure("core subspace is not an ideal");
    for (const auto& m : mats)
        if (!image(m, K).subset_of(K)) throw CertificateFailure("core subspace is not stable");

    std::vector<Poly> extra;
    for (const auto& v : K.basis()) extra.push_back(B.from_coords(v));
    Ideal out = J->with(extra);
    if (!full.contains(out)) throw CertificateFailure("core is not contained in the ideal");
    return out;
}

Ideal core(const ActionSpec& spec, const Ideal& I) { return core_for(spec, I, basis_elements(spec.hopf())); }

Ideal core_under_grouplikes(const ActionSpec& spec, const Ideal& I) {
    return core_for(spec, I, grouplikes(spec.hopf()));
}

// ---------------------------------------------------------------------------

namespace {

Subspace stable_closure(const std::vector<Matrix>& ops, const std::vector<Vec>& gens, size_t n,
                        const FieldDescriptor& f) {
    Subspace s(f, n);
    std::deque<Vec> todo;
    for (const auto& g : gens)
        if (s.insert(g)) todo.push_back(g);
    while (!todo.empty()) {
        Vec v = std::move(todo.front());
        todo.pop_front();
        for (const auto& m : ops) {
            Vec w = m.apply(v);
            if (s.insert(w)) todo.push_back(std::move(w));
        }
    }
    return s;
}

// Lift an idempotent modulo a nilpotent ideal: e ← 3e² − 2e³.
Vec lift_idempotent(const FDAlgebra& a, Vec e) {
    const FieldDescriptor& f = a.field();
    for (size_t it = 0; it < 64; ++it) {
        Vec e2 = a.mul(e, e);
        if (e2 == e) return e;
        Vec e3 = a.mul(e2, e);
        e = sub(scale(Scalar(f, 3L), e2), scale(Scalar(f, 2L), e3));
    }
    throw CertificateFailure("idempotent lifting did not converge");
}

}  // namespace

TSimpleCertificate is_T_simple(const FDAlgebra& B, const std::vector<Matrix>& action_matrices) {
    const size_t n = B.dim();
    const FieldDescriptor& f = B.field();
    TSimpleCertificate cert;
    if (n == 0) return cert;
    std::vector<Matrix> ops = action_matrices;
    for (size_t i = 0; i < n; ++i) ops.push_back(B.left_matrix(B.basis(i)));

    for (size_t i = 0; i < n; ++i) cert.basis_closure_dims.push_back(stable_closure(ops, {B.basis(i)}, n, f).dim());

    // Every nonzero stable ideal contains a minimal ideal of B; these are the
    // pieces e·soc(B) for the primitive idempotents e.
    Subspace rad = nilradical_commutative(B);
    Matrix stack(f, rad.dim() * n, n);
    for (size_t r = 0; r < rad.dim(); ++r) {
        Matrix L = B.left_matrix(rad.basis()[r]);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) stack(r * n + i, j) = L(i, j);
    }
    Subspace soc = rad.dim() == 0 ? Subspace::whole(f, n) : Subspace::span(f, n, kernel(stack));
    auto w = wedderburn_with_radical(B, rad);
    cert.t_simple = true;
    for (const auto& blk : w.blocks) {
        Vec e = lift_idempotent(B, w.semisimple.lift(blk.idempotent));
        Subspace piece = image(B.left_matrix(e), soc);
        if (piece.dim() != static_cast<size_t>(blk.center_degree))
            throw CertificateFailure("socle piece is not a simple module; cannot certify T-simplicity");
        Subspace cl = stable_closure(ops, piece.basis(), n, f);
        cert.socle_closure_dims.push_back(cl.dim());
        if (cl.dim() != n) {
            cert.t_simple = false;
            if (cert.proper_stable_ideal.empty()) cert.proper_stable_ideal = cl.basis();
        }
    }
    return cert;
}

TSimpleCertificate is_T_simple(const OrbitRecord& record) { return is_T_simple(record.quotient, record.action_matrices); }

OrbitRecord orbit_quotient(const ActionSpec& spec, const Ideal& core_ideal) {
    OrbitRecord rec;
    rec.core = core_ideal;
    AffineAlgebra B(spec.ring(), core_ideal);
    const FiniteData* fd = B.finite_data();
    if (!fd) throw InfiniteQuotient("orbit quotient is not finite-dimensional");
    rec.quotient = fdalgebra_of(B);
    Actor actor(spec);
    for (size_t t = 0; t < spec.hopf().dim(); ++t)
        rec.action_matrices.push_back(action_matrix(actor, B, *fd, spec.hopf().alg().basis(t)));
    rec.frobenius = is_frobenius_commutative(rec.quotient);
    rec.t_simple = is_T_simple(rec.quotient, rec.action_matrices);
    rec.semisimple = nilradical_commutative(rec.quotient).dim() == 0;
    return rec;
}

OrbitRecord orbit(const ActionSpec& spec, const Point& m) {
    Ideal c = core(spec, m.ideal());
    OrbitRecord rec = orbit_quotient(spec, c);
    rec.members = solve_zero_dim(c);
    if (std::find(rec.members.begin(), rec.members.end(), m) == rec.members.end())
        throw CertificateFailure("point " + m.to_string() + " is missing from its own orbit");
    for (const auto& p : rec.members)
        if (p != m && core(spec, p.ideal()) != c)
            throw CertificateFailure("orbit member " + p.to_string() + " has a different core");
    return rec;
}

bool orbital_semisimplicity_at(const ActionSpec& spec, const Point& m) {
    OrbitRecord rec = orbit(spec, m);
    Ideal inter = Ideal::unit(spec.ring());
    for (const auto& p : rec.members) inter = inter.intersect(p.ideal() + spec.algebra().ideal());
    bool radical_core = inter == rec.core;
    if (radical_core != rec.semisimple)
        throw CertificateFailure("semisimplicity of the orbit quotient disagrees with core = ⋂ members");
    return rec.semisimple;
}

ContainmentReport coradical_core_containment(const ActionSpec& spec, const Point& m) {
    auto corad = spec.hopf().coradical_length();
    if (!corad) throw DomainError("coradical filtration length unknown for " + spec.hopf().name());
    ContainmentReport rep;
    Ideal I = m.ideal();
    rep.core = core(spec, I);
    rep.grouplike_core = core_under_grouplikes(spec, I);
    rep.exponent = *corad + 1;
    if (!rep.grouplike_core.contains(rep.core)) throw CertificateFailure("core is not inside the grouplike core");
    rep.contained = rep.core.contains(rep.grouplike_core.power(static_cast<unsigned>(rep.exponent)));
    return rep;
}

std::vector<OrbitRecord> orbits(const ActionSpec& spec, const std::vector<Point>& points) {
    std::vector<OrbitRecord> out(points.size());
    spec.hopf().verify();
    spec.algebra().ideal().groebner();
    std::vector<std::exception_ptr> errs(points.size());
    const long np = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic) if (parallel_kernels())
    for (long i = 0; i < np; ++i) {
        try {
            out[i] = orbit(spec, points[i]);
        } catch (...) {
            errs[i] = std::current_exception();
        }
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace hopforbit
