#include "hopforbit/cbf.hpp"

#include "hopforbit/errors.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <sstream>

namespace hopforbit {

// ---------------------------------------------------------------- tensor rings

TensorRing TensorRing::make(const AffineAlgebra& a, int copies) {
    TensorRing t;
    const PolyRing& R = a.ring();
    t.base = R;
    t.copies = copies;
    if (copies == 1) {
        t.ring = R;
        std::vector<size_t> id(R.nvars());
        for (size_t i = 0; i < id.size(); ++i) id[i] = i;
        t.copy_var = {id};
        t.ideal = a.ideal();
        return t;
    }
    std::vector<std::string> names;
    std::vector<bool> laurent;
    for (int c = 0; c < copies; ++c)
        for (size_t i = 0; i < R.nuser(); ++i) {
            names.push_back(R.name(i) + std::string(static_cast<size_t>(c), '\''));
            laurent.push_back(R.is_laurent(i));
        }
    t.ring = PolyRing(R.field(), names, laurent);
    t.copy_var.assign(copies, std::vector<size_t>(R.nvars()));
    for (int c = 0; c < copies; ++c) {
        for (size_t i = 0; i < R.nuser(); ++i) t.copy_var[c][i] = c * R.nuser() + i;
        for (size_t i = 0; i < R.nuser(); ++i)
            if (R.is_laurent(i)) t.copy_var[c][R.partner(i)] = t.ring.partner(t.copy_var[c][i]);
    }
    std::vector<Poly> gens;
    for (int c = 0; c < copies; ++c)
        for (const auto& g : a.ideal().groebner()) gens.push_back(t.copy(g, c));
    t.ideal = Ideal(t.ring, gens);
    return t;
}

Poly TensorRing::copy(const Poly& f, int c) const {
    if (copies == 1) return f;
    std::vector<Poly::Term> terms;
    for (const auto& term : f.terms()) {
        Exp e(ring.nvars(), 0);
        for (size_t i = 0; i < term.e.size(); ++i) e[copy_var[c][i]] = term.e[i];
        terms.push_back({std::move(e), term.c});
    }
    return Poly::from_terms(ring, std::move(terms));
}

Exp TensorRing::part(const Exp& e, int c) const {
    Exp out(base.nvars(), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = e[copy_var[c][i]];
    return out;
}

namespace {

// copy c of `from` becomes copy target[c] of `to`
Poly move_copies(const TensorRing& from, const Poly& f, const TensorRing& to, const std::vector<int>& target) {
    std::vector<Poly::Term> terms;
    for (const auto& term : f.terms()) {
        Exp e(to.ring.nvars(), 0);
        for (int c = 0; c < from.copies; ++c)
            for (size_t i = 0; i < from.base.nvars(); ++i) e[to.copy_var[target[c]][i]] += term.e[from.copy_var[c][i]];
        terms.push_back({std::move(e), term.c});
    }
    return Poly::from_terms(to.ring, std::move(terms));
}

void add_to(std::map<size_t, Poly>& acc, size_t k, const Poly& p) {
    if (p.is_zero()) return;
    auto it = acc.find(k);
    if (it == acc.end())
        acc.emplace(k, p);
    else
        it->second += p;
}

std::map<size_t, Poly> cleaned(std::map<size_t, Poly> m, const Ideal& I) {
    for (auto it = m.begin(); it != m.end();) {
        it->second = I.normal_form(it->second);
        if (it->second.is_zero())
            it = m.erase(it);
        else
            ++it;
    }
    return m;
}

Poly mono(const PolyRing& R, const Exp& e) { return Poly::monomial(R, e, Scalar::one(R.field())); }

std::string label_of(const CleftData& d, size_t h) {
    return h < d.labels.size() ? d.labels[h] : "h" + std::to_string(h);
}

}  // namespace

// ---------------------------------------------------------------- the presentation

struct CleftPresentation::Impl {
    CleftData d;
    TensorRing t1, t2, t3;
    std::vector<long> gen_pos;
    std::vector<std::vector<HCoords>> prod;
    std::vector<Scalar> eps;
    FDHopf hbar;
    ActionSpec measuring;
    std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>> dbar;
    std::vector<HTensor> delta;
    std::vector<HCoords> S;
    Vec eps2;  // ε_A on every variable of the two-copy ring

    mutable std::once_flag left_once, right_once;
    mutable ActionSpec left_spec, right_spec;

    Poly eps_poly(const Poly& a) const { return Poly::constant(d.A.ring(), a.evaluate(d.eps_A)); }
    Poly S_A(const Poly& a) const { return d.A.nf(substitute(a, d.A.ring(), d.antipode_A)); }
    Poly delta_A(const Poly& a) const { return t2.ideal.normal_form(substitute(a, t2.ring, d.delta_A)); }
};

struct CleftAccess {
    static const CleftPresentation::Impl& impl(const CleftPresentation& p) {
        if (!p.impl_) throw DomainError("empty presentation");
        return *p.impl_;
    }
};

namespace {

using Impl = CleftPresentation::Impl;

// Per-call arithmetic state (memo tables, an Actor); never shared between threads.
class Calc {
public:
    explicit Calc(const Impl& p) : p_(p), actor_(p.measuring) {}

    HCoords mul(const HCoords& u, const HCoords& v) {
        std::map<size_t, Poly> acc;
        for (const auto& [h, a] : u) {
            if (a.is_zero()) continue;
            for (const auto& [g, b] : v) {
                if (b.is_zero()) continue;
                for (const auto& [j, l, c] : p_.dbar[h]) {
                    Poly hb = actor_.act_basis(j, b);
                    if (hb.is_zero()) continue;
                    Poly coef = p_.d.A.nf((a * hb).scaled(c));
                    if (coef.is_zero()) continue;
                    for (const auto& [k, ck] : p_.prod[l][g]) add_to(acc, k, coef * ck);
                }
            }
        }
        return cleaned(std::move(acc), p_.d.A.ideal());
    }

    HTensor mul2(const HTensor& u, const HTensor& v) {
        const size_t n = p_.d.n;
        std::map<size_t, Poly> acc;
        for (const auto& [tau, P] : u) {
            if (P.is_zero()) continue;
            const size_t t1 = tau % n, t2 = tau / n;
            for (const auto& [g, Q] : v) {
                if (Q.is_zero()) continue;
                for (const auto& [j1, l1, c1] : p_.dbar[t1])
                    for (const auto& [j2, l2, c2] : p_.dbar[t2]) {
                        Poly hq = act2(j1, j2, Q);
                        if (hq.is_zero()) continue;
                        Poly coef = p_.t2.ideal.normal_form((P * hq).scaled(c1 * c2));
                        if (coef.is_zero()) continue;
                        for (const auto& [k, ck] : prod2(l1 + n * l2, g)) add_to(acc, k, coef * ck);
                    }
            }
        }
        return cleaned(std::move(acc), p_.t2.ideal);
    }

    Poly act(size_t h, const Poly& a) { return actor_.act_basis(h, a); }

private:
    Poly act2(size_t j1, size_t j2, const Poly& Q) {
        Poly out(p_.t2.ring);
        for (const auto& term : Q.terms()) out += act_mono2(j1, j2, term.e).scaled(term.c);
        return out;
    }

    const Poly& act_mono2(size_t j1, size_t j2, const Exp& e) {
        auto key = std::make_pair(j1 * p_.d.n + j2, e);
        auto it = memo2_.find(key);
        if (it != memo2_.end()) return it->second;
        const PolyRing& R = p_.d.A.ring();
        Poly a = p_.t2.copy(actor_.act_basis(j1, mono(R, p_.t2.part(e, 0))), 0);
        Poly b = p_.t2.copy(actor_.act_basis(j2, mono(R, p_.t2.part(e, 1))), 1);
        return memo2_.emplace(key, p_.t2.ideal.normal_form(a * b)).first->second;
    }

    const HTensor& prod2(size_t l, size_t g) {
        const size_t n = p_.d.n;
        auto key = std::make_pair(l, g);
        auto it = prod2_.find(key);
        if (it != prod2_.end()) return it->second;
        std::map<size_t, Poly> acc;
        for (const auto& [k1, c1] : p_.prod[l % n][g % n])
            for (const auto& [k2, c2] : p_.prod[l / n][g / n])
                add_to(acc, k1 + n * k2, p_.t2.copy(c1, 0) * p_.t2.copy(c2, 1));
        return prod2_.emplace(key, cleaned(std::move(acc), p_.t2.ideal)).first->second;
    }

    const Impl& p_;
    Actor actor_;
    std::map<std::pair<size_t, Exp>, Poly> memo2_;
    std::map<std::pair<size_t, size_t>, HTensor> prod2_;
};

HCoords unit_coords(const Impl& p, const Poly& a) {
    HCoords c;
    if (!a.is_zero()) c.emplace(p.d.unit, a);
    return c;
}

HCoords basis_coords(const Impl& p, size_t h) {
    HCoords c;
    c.emplace(h, Poly::constant(p.d.A.ring(), 1L));
    return c;
}

// Σ Δ_A(a_h)·Δ(γ(h))
HTensor comult_coords(const Impl& p, const HCoords& u) {
    std::map<size_t, Poly> acc;
    for (const auto& [h, a] : u) {
        Poly da = p.delta_A(a);
        for (const auto& [tau, P] : p.delta[h]) add_to(acc, tau, da * P);
    }
    return cleaned(std::move(acc), p.t2.ideal);
}

HCoords antipode_coords(const Impl& p, Calc& calc, const HCoords& u) {
    std::map<size_t, Poly> acc;
    for (const auto& [h, a] : u)
        for (const auto& [k, c] : calc.mul(p.S[h], unit_coords(p, p.S_A(a)))) add_to(acc, k, c);
    return cleaned(std::move(acc), p.d.A.ideal());
}

Scalar counit_coords(const Impl& p, const HCoords& u) {
    Scalar s = Scalar::zero(p.d.A.field());
    for (const auto& [h, a] : u) s += a.evaluate(p.d.eps_A) * p.eps[h];
    return s;
}

// Images of the variables of the two-copy ring for a partial evaluation
// into A: copy c goes to first[c] (one image per base variable).
std::vector<Poly> two_copy_images(const Impl& p, const std::vector<Poly>& copy0, const std::vector<Poly>& copy1) {
    std::vector<Poly> img(p.t2.ring.nvars());
    for (size_t i = 0; i < p.t2.base.nvars(); ++i) {
        img[p.t2.copy_var[0][i]] = copy0[i];
        img[p.t2.copy_var[1][i]] = copy1[i];
    }
    return img;
}

std::vector<Poly> A_vars(const Impl& p) {
    std::vector<Poly> v;
    for (size_t i = 0; i < p.d.A.ring().nvars(); ++i) v.push_back(Poly::var(p.d.A.ring(), i));
    return v;
}
std::vector<Poly> A_eps_consts(const Impl& p) {
    std::vector<Poly> v;
    for (size_t i = 0; i < p.d.A.ring().nvars(); ++i) v.push_back(Poly::constant(p.d.A.ring(), p.d.eps_A[i]));
    return v;
}
std::vector<Poly> A_antipode_images(const Impl& p) { return p.d.antipode_A; }

// ad_l(u)(a) = Σ u₁ a S(u₂)
HCoords ad_left_coords(const Impl& p, Calc& calc, const HTensor& du, const Poly& a) {
    const size_t n = p.d.n;
    const PolyRing& R = p.d.A.ring();
    std::map<size_t, Poly> acc;
    for (const auto& [tau, P] : du) {
        const size_t j = tau % n, l = tau / n;
        // group P by its second-copy exponent
        std::map<Exp, Poly> by_second;
        for (const auto& term : P.terms()) {
            Exp e1 = p.t2.part(term.e, 1);
            Poly c = mono(R, p.t2.part(term.e, 0)).scaled(term.c);
            auto it = by_second.find(e1);
            if (it == by_second.end())
                by_second.emplace(e1, c);
            else
                it->second += c;
        }
        HCoords left = calc.mul(basis_coords(p, j), unit_coords(p, a));
        HCoords mid = calc.mul(left, p.S[l]);
        for (const auto& [e1, Q] : by_second) {
            HCoords r = calc.mul(mid, unit_coords(p, p.S_A(mono(R, e1))));
            for (const auto& [k, c] : r) add_to(acc, k, Q * c);
        }
    }
    return cleaned(std::move(acc), p.d.A.ideal());
}

// ad_r(u)(a) = Σ S(u₁) a u₂
HCoords ad_right_coords(const Impl& p, Calc& calc, const HTensor& du, const Poly& a) {
    const size_t n = p.d.n;
    std::map<size_t, Poly> acc;
    for (const auto& [tau, P] : du) {
        const size_t j = tau % n, l = tau / n;
        // Σ S(x γ_j) a y γ_l = S(γ_j)·(Σ S_A(x) a y)·γ_l
        Poly mid = p.d.A.nf(substitute(P, p.d.A.ring(), two_copy_images(p, A_antipode_images(p), A_vars(p))) * a);
        if (mid.is_zero()) continue;
        HCoords r = calc.mul(calc.mul(p.S[j], unit_coords(p, mid)), basis_coords(p, l));
        for (const auto& [k, c] : r) add_to(acc, k, c);
    }
    return cleaned(std::move(acc), p.d.A.ideal());
}

void check_owner(const CleftPresentation& p, const std::shared_ptr<const void>& owner) {
    if (owner != p.identity()) throw PresentationMismatch("element belongs to a different presentation");
}

std::string coords_string(const CleftData& d, const HCoords& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [h, a] : c) {
        if (!first) os << " + ";
        first = false;
        os << "(" << a.to_string() << ")#" << label_of(d, h);
    }
    return os.str();
}

}  // namespace

CleftPresentation CleftPresentation::build(CleftData data) {
    auto impl = std::make_shared<Impl>();
    Impl& p = *impl;
    p.d = std::move(data);
    CleftData& d = p.d;
    const PolyRing& R = d.A.ring();
    const FieldDescriptor& f = R.field();
    const size_t n = d.n;

    if (n == 0 || d.unit >= n) throw SchemaError("presentation needs a nonempty H̄-basis with a unit");
    if (d.delta_A.size() != R.nvars() || d.eps_A.size() != R.nvars() || d.antipode_A.size() != R.nvars())
        throw SchemaError("Hopf data of A must be given on every ring variable");
    if (d.words.size() != n || d.rmul.size() != n || d.measuring.size() != n)
        throw SchemaError("per-basis tables have the wrong length");
    const size_t ng = d.generators.size();
    if (d.gen_comult.size() != ng || d.gen_antipode.size() != ng || d.gen_counit.size() != ng)
        throw SchemaError("per-generator tables have the wrong length");
    if (d.labels.size() != n) {
        d.labels.clear();
        for (size_t i = 0; i < n; ++i) d.labels.push_back("h" + std::to_string(i));
    }
    p.gen_pos.assign(n, -1);
    for (size_t g = 0; g < ng; ++g) {
        if (d.generators[g] >= n) throw SchemaError("generator index out of range");
        p.gen_pos[d.generators[g]] = static_cast<long>(g);
    }
    for (const auto& w : d.words)
        for (size_t s : w)
            if (s >= n || p.gen_pos[s] < 0) throw SchemaError("word uses a non-generator");
    for (const auto& row : d.rmul)
        if (row.size() != ng) throw SchemaError("rmul row has the wrong length");

    p.t1 = TensorRing::make(d.A, 1);
    p.t2 = TensorRing::make(d.A, 2);
    p.t3 = TensorRing::make(d.A, 3);
    for (auto& x : d.delta_A) {
        if (x.ring() != p.t2.ring) throw RingMismatch("Δ_A must live in the two-copy ring");
        x = p.t2.ideal.normal_form(x);
    }
    for (auto& x : d.antipode_A) x = d.A.nf(x);
    p.eps2 = zero_vec(f, p.t2.ring.nvars());
    for (int c = 0; c < 2; ++c)
        for (size_t i = 0; i < R.nvars(); ++i) p.eps2[p.t2.copy_var[c][i]] = d.eps_A[i];

    // lifted products along words
    p.prod.assign(n, std::vector<HCoords>(n));
    for (size_t h = 0; h < n; ++h)
        for (size_t g = 0; g < n; ++g) {
            std::map<size_t, Poly> cur;
            cur.emplace(h, Poly::constant(R, 1L));
            for (size_t s : d.words[g]) {
                std::map<size_t, Poly> next;
                for (const auto& [k, c] : cur)
                    for (const auto& [k2, c2] : d.rmul[k][p.gen_pos[s]]) add_to(next, k2, c * c2);
                cur = cleaned(std::move(next), d.A.ideal());
            }
            p.prod[h][g] = std::move(cur);
        }
    p.eps.assign(n, Scalar::one(f));
    for (size_t h = 0; h < n; ++h)
        for (size_t s : d.words[h]) p.eps[h] *= d.gen_counit[p.gen_pos[s]];

    // H̄ = H/A⁺H: evaluate coefficients at ε_A
    auto epsA = [&](const Poly& a) { return a.evaluate(d.eps_A); };
    std::vector<SparseVec> products(n * n);
    for (size_t h = 0; h < n; ++h)
        for (size_t g = 0; g < n; ++g) {
            Vec v = zero_vec(f, n);
            for (const auto& [k, c] : p.prod[h][g]) v[k] += epsA(c);
            products[h * n + g] = sparsify(v);
        }
    FDAlgebra alg(f, n, products, unit_vec(f, n, d.unit), d.labels);

    using T2 = std::map<std::pair<size_t, size_t>, Scalar>;
    auto tmul = [&](const T2& a, const T2& b) {
        T2 out;
        for (const auto& [ij, c] : a)
            for (const auto& [kl, e] : b)
                for (const auto& [x, u] : alg.product(ij.first, kl.first))
                    for (const auto& [y, w] : alg.product(ij.second, kl.second)) out[{x, y}] += c * e * u * w;
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    };
    std::vector<T2> gbar(ng);
    std::vector<Vec> sbar_gen(ng);
    for (size_t g = 0; g < ng; ++g) {
        for (const auto& [tau, P] : d.gen_comult[g]) {
            Scalar c = P.evaluate(p.eps2);
            if (!c.is_zero()) gbar[g][{tau % n, tau / n}] += c;
        }
        sbar_gen[g] = zero_vec(f, n);
        for (const auto& [k, c] : d.gen_antipode[g]) sbar_gen[g][k] += epsA(c);
    }
    std::vector<SparseVec> comult(n);
    Matrix sbar(f, n, n);
    Vec counit(n, Scalar::zero(f));
    for (size_t h = 0; h < n; ++h) {
        T2 cur{{{d.unit, d.unit}, Scalar::one(f)}};
        Vec s = unit_vec(f, n, d.unit);
        for (size_t x : d.words[h]) {
            cur = tmul(cur, gbar[p.gen_pos[x]]);
            s = alg.mul(sbar_gen[p.gen_pos[x]], s);
        }
        Vec dense = zero_vec(f, n * n);
        for (const auto& [jk, c] : cur) dense[jk.first * n + jk.second] = c;
        comult[h] = sparsify(dense);
        sbar.set_col(h, s);
        counit[h] = p.eps[h];
    }
    p.hbar = FDHopf(alg, comult, counit, sbar, d.coradical_length, d.name + "-bar");
    p.dbar.assign(n, {});
    for (size_t h = 0; h < n; ++h)
        for (const auto& [idx, c] : p.hbar.comult(h)) p.dbar[h].emplace_back(idx / n, idx % n, c);

    p.measuring = ActionSpec(p.hbar, d.A, d.measuring);

    // lifted Δ and S along words
    Calc calc(p);
    p.delta.assign(n, {});
    p.S.assign(n, {});
    for (size_t h = 0; h < n; ++h) {
        HTensor cur;
        cur.emplace(d.unit + n * d.unit, Poly::constant(p.t2.ring, 1L));
        HCoords s = basis_coords(p, d.unit);
        for (size_t x : d.words[h]) {
            cur = calc.mul2(cur, d.gen_comult[p.gen_pos[x]]);
            s = calc.mul(d.gen_antipode[p.gen_pos[x]], s);
        }
        p.delta[h] = std::move(cur);
        p.S[h] = std::move(s);
    }

    CleftPresentation out;
    out.impl_ = impl;
    out.id_ = impl;
    return out;
}

const CleftData& CleftPresentation::data() const { return CleftAccess::impl(*this).d; }
const FDHopf& CleftPresentation::hbar() const { return CleftAccess::impl(*this).hbar; }
const ActionSpec& CleftPresentation::measuring() const { return CleftAccess::impl(*this).measuring; }
const TensorRing& CleftPresentation::tensor(int copies) const {
    const auto& p = CleftAccess::impl(*this);
    return copies == 1 ? p.t1 : copies == 2 ? p.t2 : p.t3;
}
const HCoords& CleftPresentation::lift_product(size_t h, size_t g) const { return CleftAccess::impl(*this).prod.at(h).at(g); }
const HTensor& CleftPresentation::lift_comult(size_t h) const { return CleftAccess::impl(*this).delta.at(h); }
const HCoords& CleftPresentation::lift_antipode(size_t h) const { return CleftAccess::impl(*this).S.at(h); }
const Scalar& CleftPresentation::lift_counit(size_t h) const { return CleftAccess::impl(*this).eps.at(h); }

HElement CleftPresentation::element(const HCoords& c) const {
    const auto& p = CleftAccess::impl(*this);
    for (const auto& [h, a] : c) {
        if (h >= p.d.n) throw SchemaError("H̄-index out of range");
        if (a.ring() != ring()) throw RingMismatch("coefficient outside A");
    }
    return HElement{id_, cleaned(c, p.d.A.ideal())};
}
HElement CleftPresentation::from_A(const Poly& a) const { return element(unit_coords(CleftAccess::impl(*this), a)); }
HElement CleftPresentation::lift(size_t h) const { return element(basis_coords(CleftAccess::impl(*this), h)); }
HElement CleftPresentation::lift(const Vec& v) const {
    HCoords c;
    for (size_t h = 0; h < v.size(); ++h)
        if (!v[h].is_zero()) c.emplace(h, Poly::constant(ring(), v[h]));
    return element(c);
}

HElement multiply(const CleftPresentation& p, const HElement& u, const HElement& v) {
    check_owner(p, u.owner);
    check_owner(p, v.owner);
    Calc calc(CleftAccess::impl(p));
    return HElement{p.identity(), calc.mul(u.coords, v.coords)};
}

HTensorElement comultiply(const CleftPresentation& p, const HElement& u) {
    check_owner(p, u.owner);
    return HTensorElement{p.identity(), 2, comult_coords(CleftAccess::impl(p), u.coords)};
}

HElement antipode(const CleftPresentation& p, const HElement& u) {
    check_owner(p, u.owner);
    const auto& impl = CleftAccess::impl(p);
    Calc calc(impl);
    return HElement{p.identity(), antipode_coords(impl, calc, u.coords)};
}

Scalar counit(const CleftPresentation& p, const HElement& u) {
    check_owner(p, u.owner);
    return counit_coords(CleftAccess::impl(p), u.coords);
}

HElement add(const CleftPresentation& p, const HElement& u, const HElement& v) {
    check_owner(p, u.owner);
    check_owner(p, v.owner);
    std::map<size_t, Poly> acc = u.coords;
    for (const auto& [k, c] : v.coords) add_to(acc, k, c);
    return HElement{p.identity(), cleaned(std::move(acc), p.A().ideal())};
}

HElement scale(const CleftPresentation& p, const Scalar& c, const HElement& u) {
    check_owner(p, u.owner);
    HCoords out;
    for (const auto& [k, a] : u.coords) out.emplace(k, a.scaled(c));
    return HElement{p.identity(), cleaned(std::move(out), p.A().ideal())};
}

bool equal(const CleftPresentation& p, const HElement& u, const HElement& v) {
    check_owner(p, u.owner);
    check_owner(p, v.owner);
    return u.coords == v.coords;
}

std::string to_string(const CleftPresentation& p, const HElement& u) { return coords_string(p.data(), u.coords); }

std::string to_string(const CleftPresentation& p, const HTensorElement& u) {
    if (u.coords.empty()) return "0";
    const size_t n = p.n();
    std::ostringstream os;
    bool first = true;
    for (const auto& [tau, P] : u.coords) {
        if (!first) os << " + ";
        first = false;
        os << "(" << P.to_string() << ")";
        size_t t = tau;
        for (int c = 0; c < u.copies; ++c) {
            os << (c ? "⊗" : "·") << label_of(p.data(), t % n);
            t /= n;
        }
    }
    return os.str();
}

HElement ad_left(const CleftPresentation& p, const HElement& u, const Poly& a) {
    check_owner(p, u.owner);
    const auto& impl = CleftAccess::impl(p);
    Calc calc(impl);
    return HElement{p.identity(), ad_left_coords(impl, calc, comult_coords(impl, u.coords), impl.d.A.nf(a))};
}

HElement ad_right(const CleftPresentation& p, const HElement& u, const Poly& a) {
    check_owner(p, u.owner);
    const auto& impl = CleftAccess::impl(p);
    Calc calc(impl);
    return HElement{p.identity(), ad_right_coords(impl, calc, comult_coords(impl, u.coords), impl.d.A.nf(a))};
}

// ---------------------------------------------------------------- normality & adjoint actions

NormalityReport check_normality(const CleftPresentation& p) {
    const auto& impl = CleftAccess::impl(p);
    const auto& d = impl.d;
    const PolyRing& R = d.A.ring();
    Calc calc(impl);
    NormalityReport rep;
    rep.left.assign(d.n, std::vector<Poly>(R.nvars(), Poly(R)));
    rep.right = rep.left;
    auto fail = [&](const std::string& w) {
        if (rep.pass) rep.witness = w;
        rep.pass = false;
    };
    for (size_t h = 0; h < d.n; ++h)
        for (size_t v = 0; v < R.nvars(); ++v) {
            Poly x = Poly::var(R, v);
            HCoords l = ad_left_coords(impl, calc, impl.delta[h], x);
            HCoords r = ad_right_coords(impl, calc, impl.delta[h], x);
            for (auto [side, c, store] : {std::tuple{"ad_l", &l, &rep.left}, std::tuple{"ad_r", &r, &rep.right}}) {
                for (const auto& [k, a] : *c)
                    if (k != d.unit) {
                        fail(std::string(side) + "(" + label_of(d, h) + ")(" + R.name(v) + ") = " + coords_string(d, *c) +
                             " leaves A#1");
                        break;
                    }
                auto it = c->find(d.unit);
                if (it != c->end()) (*store)[h][v] = it->second;
            }
            if (rep.left[h][v] != impl.measuring.value(h, v))
                fail("ad_l(" + label_of(d, h) + ")(" + R.name(v) + ") = " + rep.left[h][v].to_string() +
                     " differs from the measuring value " + impl.measuring.value(h, v).to_string());
        }
    return rep;
}

namespace {

ActionSpec build_adjoint(const CleftPresentation& p, Side side) {
    const auto& impl = CleftAccess::impl(p);
    const auto& d = impl.d;
    const PolyRing& R = d.A.ring();
    const FieldDescriptor& f = R.field();
    Calc calc(impl);
    const size_t n = d.n;
    std::vector<std::vector<Poly>> table(n, std::vector<Poly>(R.nvars(), Poly(R)));
    FDHopf T = side == Side::left ? impl.hbar : co_opposite(impl.hbar);
    for (size_t h = 0; h < n; ++h) {
        HCoords u = basis_coords(impl, h);
        if (side == Side::right) u = p.lift(impl.hbar.S(unit_vec(f, n, h))).coords;
        HTensor du = comult_coords(impl, u);
        for (size_t v = 0; v < R.nvars(); ++v) {
            HCoords c = side == Side::left ? ad_left_coords(impl, calc, du, Poly::var(R, v))
                                           : ad_right_coords(impl, calc, du, Poly::var(R, v));
            for (const auto& [k, a] : c)
                if (k != d.unit)
                    throw FactorizationFailure("adjoint image of " + R.name(v) + " under " + label_of(d, h) +
                                               " leaves A: " + coords_string(d, c));
            auto it = c.find(d.unit);
            if (it != c.end()) table[h][v] = it->second;
        }
    }
    ActionSpec spec;
    try {
        spec = ActionSpec(T, d.A, table);
    } catch (const DomainError& e) {
        throw FactorizationFailure(std::string(side == Side::left ? "left" : "right") + " adjoint action: " + e.what());
    }
    auto rep = verify_module_algebra(spec);
    if (!rep.pass)
        throw FactorizationFailure(std::string(side == Side::left ? "left" : "right") + " adjoint action fails " +
                                   rep.failure + " (" + rep.witness + ")");
    // A⁺H acts by zero: ad((x − ε(x))γ(h)) kills every generator
    for (size_t h = 0; h < n; ++h) {
        if (h != d.unit && impl.gen_pos[h] < 0) continue;
        for (size_t v = 0; v < R.nuser(); ++v) {
            Poly xv = Poly::var(R, v) - Poly::constant(R, d.eps_A[v]);
            HCoords u = side == Side::left ? calc.mul(unit_coords(impl, xv), basis_coords(impl, h))
                                           : calc.mul(basis_coords(impl, h), unit_coords(impl, xv));
            HTensor du = comult_coords(impl, u);
            for (size_t w = 0; w < R.nuser(); ++w) {
                HCoords c = side == Side::left ? ad_left_coords(impl, calc, du, Poly::var(R, w))
                                               : ad_right_coords(impl, calc, du, Poly::var(R, w));
                if (!c.empty())
                    throw FactorizationFailure("A⁺H does not act trivially: (" + xv.to_string() + ")·" +
                                               label_of(d, h) + " on " + R.name(w));
            }
        }
    }
    return spec;
}

}  // namespace

ActionSpec adjoint_action(const CleftPresentation& p, Side side) {
    const auto& impl = CleftAccess::impl(p);
    if (side == Side::left) {
        std::call_once(impl.left_once, [&] { impl.left_spec = build_adjoint(p, side); });
        return impl.left_spec;
    }
    std::call_once(impl.right_once, [&] { impl.right_spec = build_adjoint(p, side); });
    return impl.right_spec;
}

// ---------------------------------------------------------------- verification

const CheckResult* PresentationReport::failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

PresentationReport verify_presentation(const CleftPresentation& p) {
    const auto& impl = CleftAccess::impl(p);
    const auto& d = impl.d;
    const PolyRing& R = d.A.ring();
    const size_t n = d.n;
    Calc calc(impl);
    PresentationReport rep;
    auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.checks.push_back({name, ok, ok ? "" : detail});
        if (!ok) rep.pass = false;
    };
    auto guarded = [&](const std::string& name, auto&& fn) {
        try {
            std::string w = fn();
            record(name, w.empty(), w);
        } catch (const std::exception& e) {
            record(name, false, e.what());
        }
    };
    const Ideal& I = d.A.ideal();

    guarded("hbar_axioms", [&] {
        const auto& r = impl.hbar.verify();
        return r.pass ? std::string() : "H̄ fails " + r.axiom;
    });
    guarded("words", [&] {
        for (size_t h = 0; h < n; ++h)
            if (impl.prod[d.unit][h] != basis_coords(impl, h))
                return "the word of " + label_of(d, h) + " multiplies to " + coords_string(d, impl.prod[d.unit][h]);
        return std::string();
    });
    guarded("hopf_structure_of_A", [&] {
        for (const auto& r : I.groebner()) {
            if (!impl.t2.ideal.contains(substitute(r, impl.t2.ring, d.delta_A))) return "Δ_A does not preserve " + r.to_string();
            if (!r.evaluate(d.eps_A).is_zero()) return "ε_A does not kill " + r.to_string();
            if (!I.contains(substitute(r, R, d.antipode_A))) return "S_A does not preserve " + r.to_string();
        }
        // coassociativity, counit and antipode on the variables
        std::vector<Poly> img_left(impl.t2.ring.nvars()), img_right(impl.t2.ring.nvars());
        for (size_t i = 0; i < R.nvars(); ++i) {
            img_left[impl.t2.copy_var[0][i]] = move_copies(impl.t2, d.delta_A[i], impl.t3, {0, 1});
            img_left[impl.t2.copy_var[1][i]] = Poly::var(impl.t3.ring, impl.t3.copy_var[2][i]);
            img_right[impl.t2.copy_var[0][i]] = Poly::var(impl.t3.ring, impl.t3.copy_var[0][i]);
            img_right[impl.t2.copy_var[1][i]] = move_copies(impl.t2, d.delta_A[i], impl.t3, {1, 2});
        }
        for (size_t i = 0; i < R.nvars(); ++i) {
            Poly x = Poly::var(R, i);
            const Poly& dx = d.delta_A[i];
            if (!impl.t3.ideal.contains(substitute(dx, impl.t3.ring, img_left) - substitute(dx, impl.t3.ring, img_right)))
                return "Δ_A not coassociative on " + R.name(i);
            if (d.A.nf(substitute(dx, R, two_copy_images(impl, A_eps_consts(impl), A_vars(impl)))) != d.A.nf(x) ||
                d.A.nf(substitute(dx, R, two_copy_images(impl, A_vars(impl), A_eps_consts(impl)))) != d.A.nf(x))
                return "counit of A fails on " + R.name(i);
            Poly e = Poly::constant(R, d.eps_A[i]);
            if (d.A.nf(substitute(dx, R, two_copy_images(impl, d.antipode_A, A_vars(impl)))) != e ||
                d.A.nf(substitute(dx, R, two_copy_images(impl, A_vars(impl), d.antipode_A))) != e)
                return "antipode of A fails on " + R.name(i);
        }
        return std::string();
    });
    guarded("measuring_module_algebra", [&] {
        auto r = verify_module_algebra(impl.measuring);
        return r.pass ? std::string() : r.failure + ": " + r.witness;
    });

    // generators of H: the variables of A and the lifted generators of H̄
    std::vector<std::pair<std::string, HCoords>> gens;
    for (size_t v = 0; v < R.nvars(); ++v) gens.push_back({R.name(v), unit_coords(impl, Poly::var(R, v))});
    for (size_t s : d.generators) gens.push_back({label_of(d, s), basis_coords(impl, s)});

    guarded("associativity", [&]() -> std::string {
        for (const auto& [an, a] : gens)
            for (const auto& [bn, b] : gens) {
                HCoords ab = calc.mul(a, b);
                for (const auto& [cn, c] : gens)
                    if (calc.mul(ab, c) != calc.mul(a, calc.mul(b, c))) return "(" + an + "·" + bn + ")·" + cn;
            }
        const bool full = n * n * d.generators.size() <= 6000;
        for (size_t h = 0; h < n; ++h) {
            HCoords gh = basis_coords(impl, h);
            for (size_t s : d.generators) {
                HCoords gs = basis_coords(impl, s);
                for (size_t v = 0; v < R.nvars(); ++v) {
                    HCoords x = unit_coords(impl, Poly::var(R, v));
                    if (calc.mul(calc.mul(gh, gs), x) != calc.mul(gh, calc.mul(gs, x)))
                        return "(" + label_of(d, h) + "·" + label_of(d, s) + ")·" + R.name(v);
                }
                if (!full) continue;
                for (size_t g = 0; g < n; ++g) {
                    HCoords gg = basis_coords(impl, g);
                    if (calc.mul(calc.mul(gh, gg), gs) != calc.mul(gh, calc.mul(gg, gs)))
                        return "(" + label_of(d, h) + "·" + label_of(d, g) + ")·" + label_of(d, s);
                }
            }
        }
        return "";
    });
    guarded("comultiplication_multiplicative", [&]() -> std::string {
        for (size_t h = 0; h < n; ++h)
            for (size_t gi = 0; gi < d.generators.size(); ++gi) {
                size_t s = d.generators[gi];
                if (comult_coords(impl, d.rmul[h][gi]) != calc.mul2(impl.delta[h], impl.delta[s]))
                    return "Δ(" + label_of(d, h) + "·" + label_of(d, s) + ")";
                if (!(counit_coords(impl, d.rmul[h][gi]) == impl.eps[h] * impl.eps[s]))
                    return "ε(" + label_of(d, h) + "·" + label_of(d, s) + ")";
            }
        for (size_t s : d.generators)
            for (size_t v = 0; v < R.nvars(); ++v) {
                HCoords x = unit_coords(impl, Poly::var(R, v));
                HTensor dx;
                dx.emplace(d.unit + n * d.unit, d.delta_A[v]);
                if (comult_coords(impl, calc.mul(basis_coords(impl, s), x)) != calc.mul2(impl.delta[s], dx))
                    return "Δ(" + label_of(d, s) + "·" + R.name(v) + ")";
            }
        return "";
    });
    guarded("antipode_antimultiplicative", [&]() -> std::string {
        for (size_t h = 0; h < n; ++h)
            for (size_t gi = 0; gi < d.generators.size(); ++gi) {
                size_t s = d.generators[gi];
                if (antipode_coords(impl, calc, d.rmul[h][gi]) != calc.mul(impl.S[s], impl.S[h]))
                    return "S(" + label_of(d, h) + "·" + label_of(d, s) + ")";
            }
        for (size_t s : d.generators)
            for (size_t v = 0; v < R.nvars(); ++v) {
                HCoords x = unit_coords(impl, Poly::var(R, v));
                HCoords sx = unit_coords(impl, impl.S_A(Poly::var(R, v)));
                if (antipode_coords(impl, calc, calc.mul(basis_coords(impl, s), x)) != calc.mul(sx, impl.S[s]))
                    return "S(" + label_of(d, s) + "·" + R.name(v) + ")";
            }
        return "";
    });
    guarded("coassociativity", [&]() -> std::string {
        const TensorRing& t2 = impl.t2;
        const TensorRing& t3 = impl.t3;
        for (size_t s : d.generators) {
            std::map<size_t, Poly> lhs, rhs;
            for (const auto& [tau, P] : impl.delta[s]) {
                const size_t j = tau % n, l = tau / n;
                for (const auto& term : P.terms()) {
                    Poly a0 = mono(R, t2.part(term.e, 0)), a1 = mono(R, t2.part(term.e, 1));
                    Poly X = move_copies(t2, impl.delta_A(a0), t3, {0, 1}) * t3.copy(a1, 2);
                    X = X.scaled(term.c);
                    for (const auto& [sig, Q] : impl.delta[j]) add_to(lhs, sig + n * n * l, X * move_copies(t2, Q, t3, {0, 1}));
                    Poly Y = t3.copy(a0, 0) * move_copies(t2, impl.delta_A(a1), t3, {1, 2});
                    Y = Y.scaled(term.c);
                    for (const auto& [sig, Q] : impl.delta[l]) add_to(rhs, j + n * sig, Y * move_copies(t2, Q, t3, {1, 2}));
                }
            }
            if (cleaned(lhs, t3.ideal) != cleaned(rhs, t3.ideal)) return "generator " + label_of(d, s);
        }
        return "";
    });
    guarded("counit", [&]() -> std::string {
        for (size_t s : d.generators) {
            std::map<size_t, Poly> l1, r1;
            for (const auto& [tau, P] : impl.delta[s]) {
                const size_t j = tau % n, l = tau / n;
                add_to(l1, l, substitute(P, R, two_copy_images(impl, A_eps_consts(impl), A_vars(impl))).scaled(impl.eps[j]));
                add_to(r1, j, substitute(P, R, two_copy_images(impl, A_vars(impl), A_eps_consts(impl))).scaled(impl.eps[l]));
            }
            HCoords expect = basis_coords(impl, s);
            if (cleaned(l1, I) != expect || cleaned(r1, I) != expect) return "generator " + label_of(d, s);
        }
        return "";
    });
    guarded("antipode", [&]() -> std::string {
        for (size_t s : d.generators) {
            std::map<size_t, Poly> lsum, rsum;
            for (const auto& [tau, P] : impl.delta[s]) {
                const size_t j = tau % n, l = tau / n;
                Poly q = d.A.nf(substitute(P, R, two_copy_images(impl, d.antipode_A, A_vars(impl))));
                for (const auto& [k, c] : calc.mul(calc.mul(impl.S[j], unit_coords(impl, q)), basis_coords(impl, l)))
                    add_to(lsum, k, c);
                std::map<Exp, Poly> by_second;
                for (const auto& term : P.terms()) {
                    Exp e1 = impl.t2.part(term.e, 1);
                    Poly c = mono(R, impl.t2.part(term.e, 0)).scaled(term.c);
                    auto it = by_second.find(e1);
                    if (it == by_second.end())
                        by_second.emplace(e1, c);
                    else
                        it->second += c;
                }
                for (const auto& [e1, Q] : by_second) {
                    HCoords left = calc.mul(basis_coords(impl, j), impl.S[l]);
                    HCoords prodl;
                    for (const auto& [k, c] : left) prodl.emplace(k, Q * c);
                    for (const auto& [k, c] : calc.mul(prodl, unit_coords(impl, impl.S_A(mono(R, e1))))) add_to(rsum, k, c);
                }
            }
            HCoords expect = unit_coords(impl, Poly::constant(R, impl.eps[s]));
            if (cleaned(lsum, I) != expect) return "S ⋆ id on " + label_of(d, s);
            if (cleaned(rsum, I) != expect) return "id ⋆ S on " + label_of(d, s);
        }
        return "";
    });
    guarded("normality", [&] {
        auto r = check_normality(p);
        return r.pass ? std::string() : r.witness;
    });
    guarded("augmentation_ideal", [&]() -> std::string {
        // γ(h)·A⁺ ⊆ A⁺H
        for (size_t h = 0; h < n; ++h)
            for (size_t v = 0; v < R.nuser(); ++v) {
                Poly xv = Poly::var(R, v) - Poly::constant(R, d.eps_A[v]);
                for (const auto& [k, c] : calc.mul(basis_coords(impl, h), unit_coords(impl, xv)))
                    if (!c.evaluate(d.eps_A).is_zero())
                        return label_of(d, h) + "·(" + xv.to_string() + ") has a coefficient outside A⁺";
            }
        return "";
    });
    guarded("left_adjoint_factorizes", [&] {
        adjoint_action(p, Side::left);
        return std::string();
    });
    guarded("right_adjoint_factorizes", [&] {
        adjoint_action(p, Side::right);
        return std::string();
    });
    guarded("krull_dim", [&] {
        int k = d.A.krull_dim();
        return k == d.krull_dim_expected ? std::string()
                                         : "Kdim(A) = " + std::to_string(k) + ", expected " + std::to_string(d.krull_dim_expected);
    });
    return rep;
}

// ---------------------------------------------------------------- quotients and simples

FDAlgebra stable_quotient(const CleftPresentation& p, const Ideal& J) {
    const auto& impl = CleftAccess::impl(p);
    const auto& d = impl.d;
    const PolyRing& R = d.A.ring();
    if (J.ring() != R) throw RingMismatch("ideal outside A");
    if (!J.contains(d.A.ideal())) throw DomainError("ideal does not contain the defining ideal of A");
    for (Side side : {Side::left, Side::right}) {
        ActionSpec spec = adjoint_action(p, side);
        Actor actor(spec);
        for (const auto& r : J.groebner())
            for (size_t t = 0; t < spec.hopf().dim(); ++t) {
                Poly tr = actor.act_basis(t, r);
                if (!J.contains(tr))
                    throw NotStable(side == Side::left ? "left" : "right",
                                    label_of(d, t) + " · (" + r.to_string() + ") = " + tr.to_string());
            }
    }
    AffineAlgebra B(R, J);
    const FiniteData* fd = B.finite_data();
    if (!fd) throw InfiniteQuotient("A/J is infinite-dimensional");
    const size_t dA = fd->basis.size(), n = d.n, N = dA * n;
    Calc calc(impl);
    std::vector<Poly> mon;
    for (const auto& e : fd->basis) mon.push_back(mono(R, e));
    std::vector<SparseVec> products(N * N);
    for (size_t h = 0; h < n; ++h)
        for (size_t j = 0; j < dA; ++j)
            for (size_t g = 0; g < n; ++g) {
                HCoords base;
                base.emplace(g, mon[j]);
                HCoords w = calc.mul(basis_coords(impl, h), base);
                for (size_t i = 0; i < dA; ++i) {
                    Vec out = zero_vec(p.field(), N);
                    for (const auto& [k, c] : w) {
                        Vec cc = B.coords(mon[i] * c);
                        for (size_t r = 0; r < dA; ++r)
                            if (!cc[r].is_zero()) out[k * dA + r] += cc[r];
                    }
                    products[(h * dA + i) * N + (g * dA + j)] = sparsify(out);
                }
            }
    std::vector<std::string> labels;
    for (size_t h = 0; h < n; ++h)
        for (size_t i = 0; i < dA; ++i) labels.push_back(mon[i].to_string() + "#" + label_of(d, h));
    Vec unit = zero_vec(p.field(), N);
    unit[d.unit * dA + 0] = Scalar::one(p.field());
    if (fd->basis[0] != Exp(R.nvars(), 0)) throw CertificateFailure("standard monomial basis does not start at 1");
    return FDAlgebra(p.field(), N, std::move(products), std::move(unit), std::move(labels));
}

SimpleDimsReport simple_dims_at(const CleftPresentation& p, const Point& m) {
    const auto& d = p.data();
    SimpleDimsReport rep;
    ActionSpec left = adjoint_action(p, Side::left);
    rep.core = core(left, m.ideal());
    AffineAlgebra B(p.ring(), rep.core);
    rep.core_dim = B.dimension();
    FDAlgebra Q = stable_quotient(p, rep.core);
    rep.quotient_dim = Q.dim();
    Wedderburn w = wedderburn(Q);
    const size_t dA = rep.core_dim;
    for (const auto& blk : w.blocks) {
        if (!blk.simple_dim) throw NonSplitBlock(blk.center_degree);
        // A/J → block: a ↦ e_block·π(a#1)
        const FDAlgebra& S = w.semisimple.alg;
        Matrix img(p.field(), S.dim(), dA);
        for (size_t i = 0; i < dA; ++i) {
            Vec v = w.semisimple.project(Q.basis(d.unit * dA + i));
            img.set_col(i, S.mul(blk.idempotent, v));
        }
        size_t ann = kernel(img).size();
        rep.annihilator_dims.push_back(ann);
        rep.simple_dims.push_back(*blk.simple_dim);
        if (ann == 0) rep.annihilator_matched_dims.push_back(*blk.simple_dim);
    }
    std::sort(rep.simple_dims.begin(), rep.simple_dims.end());
    std::sort(rep.annihilator_matched_dims.begin(), rep.annihilator_matched_dims.end());
    for (size_t v : rep.annihilator_matched_dims)
        if (v < rep.core_dim || v > d.n) rep.chain_holds = false;
    if (!rep.chain_holds)
        throw CertificateFailure("simple module dimension outside [dim A/core, dim H̄] at " + m.to_string());
    return rep;
}

PIDegreeReport pi_degree_scan(const CleftPresentation& p, const std::vector<Point>& sample) {
    if (sample.empty()) throw DomainError("pi_degree_scan needs a nonempty sample");
    PIDegreeReport rep;
    rep.per_point.resize(sample.size());
    // warm the shared caches before fanning out
    adjoint_action(p, Side::left);
    adjoint_action(p, Side::right);
    std::vector<std::exception_ptr> errors(sample.size());
    const long m = static_cast<long>(sample.size());
#pragma omp parallel for schedule(dynamic) if (parallel_kernels())
    for (long i = 0; i < m; ++i) {
        try {
            rep.per_point[i] = simple_dims_at(p, sample[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (const auto& r : rep.per_point)
        for (size_t v : r.simple_dims) rep.max_simple_dim = std::max(rep.max_simple_dim, v);
    if (p.data().group) {
        StructureChain chain = structure_chain_group_case(p);
        rep.gamma_order = chain.gamma_order;
        rep.matches_gamma = rep.max_simple_dim == chain.gamma_order;
    }
    return rep;
}

DimensionReport dimension_invariants(const CleftPresentation& p, int degree_bound) {
    const auto& impl = CleftAccess::impl(p);
    const auto& d = impl.d;
    DimensionReport rep;
    rep.krull_dim = d.A.krull_dim();
    rep.expected = d.krull_dim_expected;
    rep.krull_matches = rep.krull_dim == rep.expected;
    ActionSpec left = adjoint_action(p, Side::left);
    rep.degree = degree_bound > 0 ? degree_bound : std::min(left.degree_bound(), 4);
    rep.invariants = invariants_up_to_degree(left, rep.degree);
    Calc calc(impl);
    for (const auto& f : rep.invariants) {
        for (size_t h = 0; h < d.n && rep.invariants_central; ++h) {
            HCoords a = unit_coords(impl, f), g = basis_coords(impl, h);
            if (calc.mul(a, g) != calc.mul(g, a)) {
                rep.invariants_central = false;
                rep.witness = f.to_string() + " does not commute with " + label_of(d, h);
            }
        }
    }
    return rep;
}

std::vector<Poly> coinvariants_up_to(const CleftPresentation& p, const Ideal& J, int deg) {
    const auto& impl = CleftAccess::impl(p);
    const auto& d = impl.d;
    const PolyRing& R = d.A.ring();
    std::vector<Poly> gens;
    for (const auto& g : d.A.ideal().groebner()) gens.push_back(impl.t2.copy(g, 0));
    for (const auto& g : J.groebner()) gens.push_back(impl.t2.copy(g, 1));
    Ideal IJ(impl.t2.ring, gens);
    auto mons = standard_monomials_up_to(R, d.A.ideal().groebner(), deg);
    std::vector<Poly> diffs;
    std::map<Exp, size_t> index;
    for (const auto& e : mons) {
        Poly m = mono(R, e);
        Poly diff = IJ.normal_form(impl.delta_A(m) - impl.t2.copy(m, 0));
        for (const auto& t : diff.terms()) index.emplace(t.e, 0);
        diffs.push_back(diff);
    }
    size_t row = 0;
    for (auto& [e, i] : index) i = row++;
    Matrix M(p.field(), std::max<size_t>(row, 1), mons.size());
    for (size_t c = 0; c < mons.size(); ++c)
        for (const auto& t : diffs[c].terms()) M(index[t.e], c) = t.c;
    std::vector<Poly> out;
    for (const auto& k : kernel(M)) {
        Poly f(R);
        for (size_t c = 0; c < mons.size(); ++c)
            if (!k[c].is_zero()) f += mono(R, mons[c]).scaled(k[c]);
        out.push_back(f);
    }
    return out;
}

}  // namespace hopforbit
