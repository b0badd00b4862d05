#include "hopforbit/cbf.hpp"

#include "hopforbit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hopforbit {

namespace {

using IVec = std::vector<long>;
using Lattice = std::vector<IVec>;

// Row-style Hermite normal form: nonzero rows, positive pivots, entries above
// each pivot reduced into [0, pivot).
Lattice hnf(Lattice rows, size_t dim) {
    Lattice out;
    size_t r0 = 0;
    for (size_t col = 0; col < dim && r0 < rows.size(); ++col) {
        // Euclid on column `col` among rows r0..
        while (true) {
            size_t best = rows.size();
            for (size_t i = r0; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || std::labs(rows[i][col]) < std::labs(rows[best][col])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r0], rows[best]);
            bool done = true;
            for (size_t i = r0 + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                long q = rows[i][col] / rows[r0][col];
                for (size_t k = col; k < dim; ++k) rows[i][k] -= q * rows[r0][k];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (r0 < rows.size() && rows[r0][col] != 0) {
            if (rows[r0][col] < 0)
                for (auto& x : rows[r0]) x = -x;
            for (size_t i = 0; i < r0; ++i) {
                long q = rows[i][col] / rows[r0][col];
                if (rows[i][col] - q * rows[r0][col] < 0) --q;
                for (size_t k = col; k < dim; ++k) rows[i][k] -= q * rows[r0][k];
            }
            ++r0;
        }
    }
    rows.resize(r0);
    return rows;
}

// v ∈ span_ℤ(H) for H in Hermite normal form
bool in_lattice(const Lattice& h, IVec v) {
    for (const auto& row : h) {
        size_t piv = 0;
        while (row[piv] == 0) ++piv;
        for (size_t k = 0; k < piv; ++k)
            if (v[k] != 0) return false;
        if (v[piv] % row[piv] != 0) return false;
        long q = v[piv] / row[piv];
        for (size_t k = 0; k < v.size(); ++k) v[k] -= q * row[k];
    }
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

struct GroupView {
    const GroupPresentation& g;
    size_t r, nf, identity;
    explicit GroupView(const GroupPresentation& gp)
        : g(gp), r(gp.rank()), nf(gp.F_table.size()), identity(check_group_table(gp.F_table)) {}
    bool torsion(size_t j) const { return j >= static_cast<size_t>(g.free_rank); }
    long order(size_t j) const { return g.torsion[j - g.free_rank]; }
    IVec act(size_t f, const IVec& v) const {
        IVec out(r, 0);
        for (size_t j = 0; j < r; ++j)
            for (size_t i = 0; i < r; ++i) out[i] += g.F_action[f][i][j] * v[j];
        return out;
    }
    Lattice relations() const {
        Lattice rel;
        for (size_t j = 0; j < r; ++j)
            if (torsion(j)) {
                IVec v(r, 0);
                v[j] = order(j);
                rel.push_back(v);
            }
        return rel;
    }
    IVec unit(size_t j) const {
        IVec v(r, 0);
        v[j] = 1;
        return v;
    }
    std::vector<size_t> subgroup_of_F(std::vector<size_t> gens) const {
        std::set<size_t> s{identity};
        std::vector<size_t> todo{identity};
        while (!todo.empty()) {
            size_t a = todo.back();
            todo.pop_back();
            for (size_t x : gens) {
                size_t b = g.F_table[a][x];
                if (s.insert(b).second) todo.push_back(b);
            }
        }
        return {s.begin(), s.end()};
    }
    std::vector<size_t> normal_closure_in_F(const std::vector<size_t>& gens) const {
        std::vector<size_t> conj;
        for (size_t x : gens)
            for (size_t f = 0; f < nf; ++f) {
                size_t finv = 0;
                while (g.F_table[f][finv] != identity) ++finv;
                conj.push_back(g.F_table[g.F_table[f][x]][finv]);
            }
        return subgroup_of_F(conj);
    }
};

std::string describe(const GroupView& gv, const SubgroupRep& s) {
    std::vector<std::string> parts;
    for (const auto& row : s.lattice) {
        bool relation = false;
        for (size_t j = 0; j < gv.r; ++j)
            if (gv.torsion(j) && row[j] == gv.order(j)) {
                bool only = true;
                for (size_t k = 0; k < gv.r; ++k)
                    if (k != j && row[k] != 0) only = false;
                relation = relation || only;
            }
        if (relation) continue;
        std::string w;
        for (size_t j = 0; j < gv.r; ++j) {
            if (row[j] == 0) continue;
            std::string name = j < gv.g.N_names.size() ? gv.g.N_names[j] : "n" + std::to_string(j);
            w += (w.empty() ? "" : "·") + name + (row[j] == 1 ? "" : "^" + std::to_string(row[j]));
        }
        parts.push_back(w);
    }
    for (size_t f : s.f_part)
        if (f != gv.identity) parts.push_back(f < gv.g.F_names.size() ? gv.g.F_names[f] : "f" + std::to_string(f));
    std::string out = "⟨";
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    return out + "⟩";
}

SubgroupRep make_rep(const GroupView& gv, Lattice lat, std::vector<size_t> fpart) {
    SubgroupRep s;
    auto rel = gv.relations();
    lat.insert(lat.end(), rel.begin(), rel.end());
    s.lattice = hnf(std::move(lat), gv.r);
    std::sort(fpart.begin(), fpart.end());
    s.f_part = std::move(fpart);
    s.description = describe(gv, s);
    return s;
}

// Smallest L ⋊ F' with L ⊇ gens, stable under `acting` and containing
// v − f(v) for f ∈ `commutators` and v ∈ N.
SubgroupRep close_lattice(const GroupView& gv, Lattice gens, const std::vector<size_t>& fpart,
                          const std::vector<size_t>& acting, const std::vector<size_t>& commutators) {
    for (size_t f : commutators)
        for (size_t j = 0; j < gv.r; ++j) {
            IVec v = gv.unit(j), fv = gv.act(f, v);
            for (size_t k = 0; k < gv.r; ++k) v[k] -= fv[k];
            gens.push_back(v);
        }
    SubgroupRep s = make_rep(gv, gens, fpart);
    while (true) {
        Lattice more = s.lattice;
        bool grew = false;
        for (size_t f : acting)
            for (const auto& row : s.lattice) {
                IVec img = gv.act(f, row);
                if (!in_lattice(s.lattice, img)) {
                    more.push_back(img);
                    grew = true;
                }
            }
        if (!grew) return s;
        s = make_rep(gv, more, fpart);
    }
}

}  // namespace

SubgroupRep subgroup_generated(const GroupPresentation& g, const std::vector<std::vector<long>>& n_gens,
                               const std::vector<size_t>& f_gens) {
    GroupView gv(g);
    for (const auto& v : n_gens)
        if (v.size() != gv.r) throw SchemaError("subgroup generator has the wrong rank");
    auto F1 = gv.subgroup_of_F(f_gens);
    return close_lattice(gv, n_gens, F1, F1, {});
}

bool subgroup_contains(const SubgroupRep& big, const SubgroupRep& small) {
    for (const auto& row : small.lattice)
        if (!in_lattice(big.lattice, row)) return false;
    return std::includes(big.f_part.begin(), big.f_part.end(), small.f_part.begin(), small.f_part.end());
}

bool subgroup_equal(const SubgroupRep& a, const SubgroupRep& b) { return a.lattice == b.lattice && a.f_part == b.f_part; }

size_t quotient_free_rank(const GroupPresentation& g, const SubgroupRep& s) {
    const size_t fr = static_cast<size_t>(g.free_rank);
    Lattice proj;
    for (const auto& row : s.lattice) proj.emplace_back(row.begin(), row.begin() + fr);
    return fr - hnf(proj, fr).size();
}

StructureChain structure_chain_group_case(const CleftPresentation& p) {
    const CleftData& d = p.data();
    if (!d.group) throw NotAbelianByFinite("the presentation is not a group algebra of N ⋊ F");
    const GroupPresentation& g = *d.group;
    GroupView gv(g);
    const auto& mu = d.multipliers;
    const long ch = p.field().characteristic();
    if (ch != 0) {
        for (long t : g.torsion)
            if (t % ch == 0) throw BadCharacteristic("characteristic divides a torsion order");
        if (static_cast<long>(gv.nf) % ch == 0) throw BadCharacteristic("characteristic divides |F|");
    }
    const size_t fr = static_cast<size_t>(g.free_rank);
    const PolyRing& R = p.ring();

    StructureChain c;
    c.NA = p.A().ideal();  // A is reduced (char 0 or coprime to the torsion)
    std::vector<Poly> pg = c.NA.generators();
    for (size_t j = fr; j < gv.r; ++j) pg.push_back(Poly::var(R, j) - Poly::constant(R, 1L));
    c.P = Ideal(R, pg);

    // subgroups of G
    Lattice M, TM, TN, all;
    for (size_t j = 0; j < gv.r; ++j) {
        IVec v = gv.unit(j);
        all.push_back(v);
        if (gv.torsion(j)) TN.push_back(v);
        v[j] = mu[j];
        M.push_back(v);
        if (gv.torsion(j)) TM.push_back(v);
    }
    std::vector<size_t> allF(gv.nf);
    std::iota(allF.begin(), allF.end(), 0);
    c.C = make_rep(gv, {}, {gv.identity});
    c.B = make_rep(gv, TM, {gv.identity});
    c.A = make_rep(gv, M, {gv.identity});
    c.H = make_rep(gv, all, allF);

    // Γ: the action of F on the free part of M, in the basis μ_j e_j
    std::vector<std::vector<std::vector<long>>> mats(gv.nf);
    for (size_t f = 0; f < gv.nf; ++f) {
        mats[f].assign(fr, std::vector<long>(fr, 0));
        for (size_t j = 0; j < fr; ++j) {
            IVec v = gv.unit(j);
            v[j] = mu[j];
            IVec img = gv.act(f, v);
            for (size_t i = 0; i < fr; ++i) {
                if (img[i] % mu[i] != 0) throw CertificateFailure("M is not F-stable");
                mats[f][i][j] = img[i] / mu[i];
            }
        }
    }
    for (size_t f = 0; f < gv.nf; ++f) {
        if (mats[f] == mats[gv.identity]) c.gamma_kernel.push_back(f);
        if (std::find(c.gamma.begin(), c.gamma.end(), mats[f]) == c.gamma.end()) c.gamma.push_back(mats[f]);
    }
    c.gamma_order = c.gamma.size();
    if (c.gamma_order * c.gamma_kernel.size() != gv.nf) throw CertificateFailure("|Γ|·|F₀| ≠ |F|");

    c.D = make_rep(gv, all, c.gamma_kernel);
    // finite radical of N ⋊ F₀ is T_N ⋊ F₀; L is its augmentation ideal times D
    c.L = close_lattice(gv, TN, c.gamma_kernel, c.gamma_kernel, c.gamma_kernel);
    // normal closure in G: stable under all of F, closed under [N, F₀'']
    auto Fcl = gv.normal_closure_in_F(c.gamma_kernel);
    c.E = close_lattice(gv, TN, Fcl, allF, Fcl);

    // D/L: abelian and torsion-free ⇔ k[D/L] is a Laurent domain
    c.D_mod_L_rank = quotient_free_rank(g, c.L);
    bool torsion_free = true;
    for (size_t j = fr; j < gv.r; ++j)
        if (!in_lattice(c.L.lattice, gv.unit(j))) torsion_free = false;
    bool abelian = c.L.f_part == c.D.f_part;
    for (size_t f : c.gamma_kernel)
        for (size_t j = 0; j < gv.r; ++j) {
            IVec v = gv.unit(j), fv = gv.act(f, v);
            for (size_t k = 0; k < gv.r; ++k) v[k] -= fv[k];
            if (!in_lattice(c.L.lattice, v)) abelian = false;
        }
    // a lattice between L and Zʳ⊕torsion of full torsion part: D/L ≅ ℤ^rank iff the
    // free projection of L is saturated (here: L's free part is zero)
    bool saturated = true;
    for (const auto& row : c.L.lattice)
        for (size_t j = 0; j < fr; ++j)
            if (row[j] != 0) saturated = false;
    c.D_mod_L_domain = torsion_free && abelian && saturated;

    // A/P ⊆ Z(D/PD): F₀ moves generators of M only by torsion
    c.A_mod_P_central = true;
    for (size_t f : c.gamma_kernel)
        for (const auto& v : M) {
            IVec fv = gv.act(f, v);
            for (size_t i = 0; i < fr; ++i)
                if (fv[i] != v[i]) c.A_mod_P_central = false;
        }

    auto inc = [&](const std::string& name, const SubgroupRep& small, const SubgroupRep& big) {
        if (!subgroup_contains(big, small)) throw CertificateFailure("structure chain: " + name + " fails");
        c.inclusions.push_back({name, !subgroup_equal(small, big)});
    };
    inc("C⊆B", c.C, c.B);
    inc("B⊆A", c.B, c.A);
    inc("A⊆D", c.A, c.D);
    inc("D⊆H", c.D, c.H);
    inc("B⊆E", c.B, c.E);
    inc("E⊆D", c.E, c.D);

    // coinvariant cross-checks on A: B = A^{co A/P}, C = A^{co A/N(A)}
    int deg = 1;
    for (size_t j = fr; j < gv.r; ++j) deg = std::max<int>(deg, static_cast<int>(gv.order(j) / mu[j]));
    auto only_torsion = [&](const Poly& f) {
        for (size_t i = 0; i < R.nvars(); ++i)
            if (i < fr || R.is_partner(i))
                if (f.uses_variable(i)) return false;
        return true;
    };
    auto coB = coinvariants_up_to(p, c.P, deg);
    size_t expectB = 0;
    for (const auto& e : standard_monomials_up_to(R, p.A().ideal().groebner(), deg)) {
        bool ok = true;
        for (size_t i = 0; i < R.nvars(); ++i)
            if ((i < fr || R.is_partner(i)) && e[i] != 0) ok = false;
        if (ok) ++expectB;
    }
    c.B_coinvariants_match = coB.size() == expectB && std::all_of(coB.begin(), coB.end(), only_torsion);
    auto coC = coinvariants_up_to(p, c.NA, deg);
    c.C_coinvariants_match = coC.size() == 1 && coC[0].is_constant();
    return c;
}

size_t gamma_stabilizer_order(const CleftPresentation& p, const StructureChain& chain, const Point& m) {
    const auto& g = *p.data().group;
    const size_t fr = static_cast<size_t>(g.free_rank);
    const Vec& x = m.coords;
    size_t count = 0;
    for (const auto& mat : chain.gamma) {
        bool fixed = true;
        for (size_t j = 0; j < fr && fixed; ++j) {
            Scalar v = Scalar::one(p.field());
            for (size_t i = 0; i < fr; ++i) v *= x[i].pow(mat[i][j]);
            if (v != x[j]) fixed = false;
        }
        if (fixed) ++count;
    }
    return count;
}

}  // namespace hopforbit
