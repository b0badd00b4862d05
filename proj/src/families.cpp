#include "hopforbit/cbf.hpp"

#include "hopforbit/errors.hpp"

#include <numeric>
#include <sstream>

namespace hopforbit {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
long mod(long a, long b) { return a - b * floor_div(a, b); }

// Shared scaffolding: a ring, its two-copy tensor ring and the usual
// coefficient shorthands.
struct Frame {
    FieldDescriptor f;
    PolyRing R;
    AffineAlgebra A;
    TensorRing t2;

    Frame(const FieldDescriptor& field, const std::vector<std::string>& names, const std::vector<bool>& laurent,
          const std::vector<std::string>& relations = {})
        : f(field), R(field, names, laurent) {
        std::vector<Poly> rel;
        for (const auto& r : relations) rel.push_back(parse_poly(R, r));
        A = AffineAlgebra(R, Ideal(R, rel));
        t2 = TensorRing::make(A, 2);
    }
    Poly c(const Scalar& s) const { return Poly::constant(R, s); }
    Poly c(long v) const { return Poly::constant(R, v); }
    Poly v(size_t i) const { return Poly::var(R, i); }
    Poly lp(size_t i, long k) const { return Poly::laurent_power(R, i, k); }
    Poly hat(size_t i) const { return Poly::var(R, static_cast<size_t>(R.partner(i))); }
    Poly c0(const Poly& p) const { return t2.copy(p, 0); }
    Poly c1(const Poly& p) const { return t2.copy(p, 1); }
    Poly one2() const { return Poly::constant(t2.ring, 1L); }
    Poly grouplike(size_t i) const { return c0(v(i)) * c1(v(i)); }
    Poly primitive(size_t i) const { return c0(v(i)) + c1(v(i)); }
};

void put(HCoords& h, size_t k, const Poly& p) {
    if (p.is_zero()) return;
    auto it = h.find(k);
    if (it == h.end())
        h.emplace(k, p);
    else {
        it->second += p;
        if (it->second.is_zero()) h.erase(it);
    }
}

std::string power_label(const std::string& x, long e) {
    if (e == 0) return "";
    return e == 1 ? x : x + "^" + std::to_string(e);
}
std::string join_label(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts)
        if (!p.empty()) s += (s.empty() ? "" : " ") + p;
    return s.empty() ? "1" : s;
}

void init_tables(CleftData& d, size_t n, size_t ngens) {
    d.n = n;
    d.labels.assign(n, "");
    d.words.assign(n, {});
    d.rmul.assign(n, std::vector<HCoords>(ngens));
    d.measuring.assign(n, {});
    d.gen_comult.assign(ngens, {});
    d.gen_antipode.assign(ngens, {});
}

Scalar q_root(const FieldDescriptor& f, long order, long q_power) {
    if (std::gcd(q_power, order) != 1)
        throw BadParameters("q = ζ^" + std::to_string(q_power) + " is not a primitive " + std::to_string(order) +
                            "-th root of unity");
    return Scalar::zeta(f).pow(mod(q_power, order));
}

}  // namespace

// x^j g^i style families share the layout basis index = i·inner + j.

CleftData taft_data(long n, long t, long q_power) {
    if (n < 2) throw BadParameters("Taft: n ≥ 2 required");
    const long tm = mod(t, n);
    const long np = n / std::gcd(n, tm);
    if (np < 2) throw BadParameters("Taft: n' = n/gcd(n,t) must be at least 2");
    Frame F(make_field(0, n), {"X"}, {false});
    const Scalar q = q_root(F.f, n, q_power);
    const size_t N = static_cast<size_t>(n * np);
    auto idx = [&](long i, long j) { return static_cast<size_t>(mod(i, n) * np + j); };

    CleftData d;
    d.name = "taft";
    d.params = {{"n", std::to_string(n)}, {"t", std::to_string(t)}, {"q_power", std::to_string(q_power)}};
    d.A = F.A;
    d.delta_A = {F.primitive(0)};
    d.eps_A = {Scalar::zero(F.f)};
    d.antipode_A = {-F.v(0)};
    d.unit = 0;
    d.generators = {idx(1, 0), idx(0, 1)};
    init_tables(d, N, 2);
    const Poly X = F.v(0);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < np; ++j) {
            size_t h = idx(i, j);
            d.labels[h] = join_label({power_label("g", i), power_label("x", j)});
            d.words[h].insert(d.words[h].end(), i, idx(1, 0));
            d.words[h].insert(d.words[h].end(), j, idx(0, 1));
            put(d.rmul[h][0], idx(i + 1, j), F.c(q.pow(j)));
            if (j + 1 < np)
                put(d.rmul[h][1], idx(i, j + 1), F.c(1));
            else
                put(d.rmul[h][1], idx(i, 0), X.scaled(q.pow(-np * i)));
            d.measuring[h] = {j == 0 ? X.scaled(q.pow(-np * i)) : Poly(F.R)};
        }
    d.gen_comult[0] = {{idx(1, 0) + N * idx(1, 0), F.one2()}};
    d.gen_comult[1] = {{idx(0, 1) + N * idx(0, 0), F.one2()}, {idx(tm, 0) + N * idx(0, 1), F.one2()}};
    d.gen_antipode[0] = {{idx(n - 1, 0), F.c(1)}};
    d.gen_antipode[1] = {{idx(n - tm, 1), F.c(-1)}};
    d.gen_counit = {Scalar::one(F.f), Scalar::zero(F.f)};
    d.krull_dim_expected = 1;
    d.coradical_length = static_cast<int>(np - 1);
    return d;
}

CleftData liu_data(long n, long w, long q_power) {
    if (n < 2) throw BadParameters("Liu: n ≥ 2 required");
    if (w == 0) throw BadParameters("Liu: w ≠ 0 required");
    Frame F(make_field(0, n), {"x"}, {true});
    const Scalar q = q_root(F.f, n, q_power);
    const size_t N = static_cast<size_t>(n * n);
    auto idx = [&](long i, long j) { return static_cast<size_t>(mod(i, n) * n + j); };

    CleftData d;
    d.name = "liu";
    d.params = {{"n", std::to_string(n)}, {"w", std::to_string(w)}, {"q_power", std::to_string(q_power)}};
    d.A = F.A;
    const size_t xh = static_cast<size_t>(F.R.partner(0));
    d.delta_A.assign(F.R.nvars(), Poly());
    d.delta_A[0] = F.grouplike(0);
    d.delta_A[xh] = F.grouplike(xh);
    d.eps_A = {Scalar::one(F.f), Scalar::one(F.f)};
    d.antipode_A.assign(F.R.nvars(), Poly());
    d.antipode_A[0] = F.hat(0);
    d.antipode_A[xh] = F.v(0);
    d.unit = 0;
    d.generators = {idx(1, 0), idx(0, 1)};
    init_tables(d, N, 2);
    const Poly xw = F.lp(0, w);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            size_t h = idx(i, j);
            d.labels[h] = join_label({power_label("g", i), power_label("y", j)});
            d.words[h].insert(d.words[h].end(), i, idx(1, 0));
            d.words[h].insert(d.words[h].end(), j, idx(0, 1));
            put(d.rmul[h][0], idx(i + 1, j), i + 1 < n ? F.c(q.pow(j)) : xw.scaled(q.pow(j)));
            put(d.rmul[h][1], j + 1 < n ? idx(i, j + 1) : idx(i, 0), j + 1 < n ? F.c(1) : F.c(1) - xw);
            d.measuring[h] = {j == 0 ? F.v(0) : Poly(F.R), j == 0 ? F.hat(0) : Poly(F.R)};
        }
    d.gen_comult[0] = {{idx(1, 0) + N * idx(1, 0), F.one2()}};
    d.gen_comult[1] = {{idx(0, 1) + N * idx(0, 0), F.one2()}, {idx(1, 0) + N * idx(0, 1), F.one2()}};
    d.gen_antipode[0] = {{idx(n - 1, 0), F.lp(0, -w)}};
    d.gen_antipode[1] = {{idx(n - 1, 1), -F.lp(0, -w)}};
    d.gen_counit = {Scalar::one(F.f), Scalar::zero(F.f)};
    d.krull_dim_expected = 1;
    d.coradical_length = static_cast<int>(n - 1);
    return d;
}

CleftData quantum_plane_data(long n, long l, long q_power) {
    if (l < 2) throw BadParameters("quantum plane: l ≥ 2 required");
    const long lp = l / std::gcd(n, l);
    const long e = n / std::gcd(n, l);
    Frame F(make_field(0, l), {"X", "Y"}, {true, false});
    const Scalar q = q_root(F.f, l, q_power);
    const size_t N = static_cast<size_t>(l * lp);
    auto idx = [&](long i, long j) { return static_cast<size_t>(mod(i, l) * lp + j); };
    const size_t Xh = static_cast<size_t>(F.R.partner(0));
    const Poly X = F.v(0), Y = F.v(1);

    CleftData d;
    d.name = "quantum_plane";
    d.params = {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"q_power", std::to_string(q_power)}};
    d.A = F.A;
    d.delta_A.assign(F.R.nvars(), Poly());
    d.delta_A[0] = F.grouplike(0);
    d.delta_A[Xh] = F.grouplike(Xh);
    d.delta_A[1] = F.c0(Y) + F.c0(F.lp(0, e)) * F.c1(Y);
    d.eps_A = {Scalar::one(F.f), Scalar::zero(F.f), Scalar::one(F.f)};
    d.antipode_A.assign(F.R.nvars(), Poly());
    d.antipode_A[0] = F.hat(0);
    d.antipode_A[Xh] = X;
    d.antipode_A[1] = -(F.lp(0, -e) * Y);
    d.unit = 0;
    const bool has_y = lp > 1;
    d.generators = {idx(1, 0)};
    if (has_y) d.generators.push_back(idx(0, 1));
    init_tables(d, N, d.generators.size());
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < lp; ++j) {
            size_t h = idx(i, j);
            d.labels[h] = join_label({power_label("x", i), power_label("y", j)});
            d.words[h].insert(d.words[h].end(), i, idx(1, 0));
            d.words[h].insert(d.words[h].end(), j, idx(0, 1));
            put(d.rmul[h][0], idx(i + 1, j), i + 1 < l ? F.c(q.pow(-j)) : X.scaled(q.pow(-j)));
            if (has_y) {
                if (j + 1 < lp)
                    put(d.rmul[h][1], idx(i, j + 1), F.c(1));
                else
                    put(d.rmul[h][1], idx(i, 0), Y.scaled(q.pow(i * lp)));
            }
            const bool base = j == 0;
            d.measuring[h] = {base ? X : Poly(F.R), base ? Y.scaled(q.pow(i * lp)) : Poly(F.R), base ? F.hat(0) : Poly(F.R)};
        }
    d.gen_comult[0] = {{idx(1, 0) + N * idx(1, 0), F.one2()}};
    d.gen_antipode[0] = {{idx(l - 1, 0), F.hat(0)}};
    d.gen_counit = {Scalar::one(F.f)};
    if (has_y) {
        const long c2 = floor_div(n, l), r2 = mod(n, l);
        const long c = floor_div(-n, l), r = mod(-n, l);
        d.gen_comult[1] = {{idx(0, 1) + N * idx(0, 0), F.one2()}, {idx(r2, 0) + N * idx(0, 1), F.c0(F.lp(0, c2))}};
        d.gen_antipode[1] = {{idx(r, 1), -F.lp(0, c)}};
        d.gen_counit.push_back(Scalar::zero(F.f));
    }
    d.krull_dim_expected = 2;
    d.coradical_length = static_cast<int>(lp - 1);
    return d;
}

CleftData gz_b_data(long n, const std::vector<long>& p, long q_power) {
    if (p.size() < 2) throw BadParameters("GZ_B: need p₀ and at least one further pᵢ");
    if (n < 1 || p[0] < 1 || n % p[0] != 0) throw BadParameters("GZ_B: p₀ must divide n");
    const size_t s = p.size() - 1;
    long P = 1;
    for (size_t i = 1; i <= s; ++i) {
        if (p[i] < 2) throw BadParameters("GZ_B: pᵢ ≥ 2 required for i ≥ 1");
        for (size_t j = 1; j < i; ++j)
            if (std::gcd(p[i], p[j]) != 1) throw BadParameters("GZ_B: p₁, …, pₛ must be pairwise coprime");
        P *= p[i];
    }
    std::vector<long> m(s);
    for (size_t i = 0; i < s; ++i) m[i] = P / p[i + 1];
    const long ell = (n / p[0]) * P;
    if (ell < 2) throw BadParameters("GZ_B: ℓ ≥ 2 required");

    // the numerical semigroup generated by the mᵢ and its Apéry set w.r.t. P
    long bound = P;
    for (long mi : m) bound += mi * P;
    std::vector<bool> inS(static_cast<size_t>(bound) + 1, false);
    inS[0] = true;
    for (long v = 1; v <= bound; ++v)
        for (long mi : m)
            if (v >= mi && inS[v - mi]) inS[v] = true;
    std::vector<long> apery(P, -1);
    for (long v = 0; v <= bound; ++v)
        if (inS[v] && apery[v % P] < 0) apery[v % P] = v;
    for (long a : apery)
        if (a < 0) throw BadParameters("GZ_B: the mᵢ do not generate all residues modulo P");
    std::vector<long> ap = apery;
    std::sort(ap.begin(), ap.end());
    std::map<long, size_t> pos;
    for (size_t k = 0; k < ap.size(); ++k) pos[ap[k]] = k;

    Frame F(make_field(0, ell), {"X", "Y"}, {true, false});
    const Scalar q = q_root(F.f, ell, q_power);
    const size_t N = static_cast<size_t>(ell * P);
    auto idx = [&](long i, long j) { return static_cast<size_t>(mod(i, ell) * P) + pos.at(j); };
    const size_t Xh = static_cast<size_t>(F.R.partner(0));
    const Poly X = F.v(0), Y = F.v(1);

    CleftData d;
    d.name = "gz_b";
    std::ostringstream ps;
    for (size_t i = 0; i < p.size(); ++i) ps << (i ? "," : "") << p[i];
    d.params = {{"n", std::to_string(n)}, {"p", ps.str()}, {"q_power", std::to_string(q_power)}};
    d.A = F.A;
    d.delta_A.assign(F.R.nvars(), Poly());
    d.delta_A[0] = F.grouplike(0);
    d.delta_A[Xh] = F.grouplike(Xh);
    d.delta_A[1] = F.c0(Y) + F.c0(F.lp(0, p[0])) * F.c1(Y);
    d.eps_A = {Scalar::one(F.f), Scalar::zero(F.f), Scalar::one(F.f)};
    d.antipode_A.assign(F.R.nvars(), Poly());
    d.antipode_A[0] = F.hat(0);
    d.antipode_A[Xh] = X;
    d.antipode_A[1] = -(F.lp(0, -p[0]) * Y);
    d.unit = 0;
    d.generators = {idx(1, 0)};
    for (long mi : m) d.generators.push_back(idx(0, mi));
    init_tables(d, N, d.generators.size());

    auto y_word = [&](long j) {
        std::vector<size_t> w;
        while (j > 0) {
            size_t k = 0;
            while (!(j >= m[k] && inS[j - m[k]])) ++k;
            w.push_back(d.generators[k + 1]);
            j -= m[k];
        }
        return w;
    };
    for (long i = 0; i < ell; ++i)
        for (long j : ap) {
            size_t h = idx(i, j);
            d.labels[h] = join_label({power_label("x", i), power_label("y", j)});
            d.words[h].insert(d.words[h].end(), i, idx(1, 0));
            auto yw = y_word(j);
            d.words[h].insert(d.words[h].end(), yw.begin(), yw.end());
            put(d.rmul[h][0], idx(i + 1, j), i + 1 < ell ? F.c(q.pow(-j)) : X.scaled(q.pow(-j)));
            for (size_t k = 0; k < s; ++k) {
                const long v = j + m[k], sv = apery[v % P], e = (v - sv) / P;
                put(d.rmul[h][k + 1], idx(i, sv), Y.pow(static_cast<unsigned>(e)).scaled(q.pow(i * P * e)));
            }
            const bool base = j == 0;
            d.measuring[h] = {base ? X : Poly(F.R), base ? Y.scaled(q.pow(i * P)) : Poly(F.R), base ? F.hat(0) : Poly(F.R)};
        }
    d.gen_comult[0] = {{idx(1, 0) + N * idx(1, 0), F.one2()}};
    d.gen_antipode[0] = {{idx(ell - 1, 0), F.hat(0)}};
    d.gen_counit = {Scalar::one(F.f)};
    for (size_t k = 0; k < s; ++k) {
        const long mn = m[k] * n;
        d.gen_comult[k + 1] = {{idx(0, m[k]) + N * idx(0, 0), F.one2()},
                               {idx(mod(mn, ell), 0) + N * idx(0, m[k]), F.c0(F.lp(0, floor_div(mn, ell)))}};
        d.gen_antipode[k + 1] = {{idx(mod(-mn, ell), m[k]), -F.lp(0, floor_div(-mn, ell))}};
        d.gen_counit.push_back(Scalar::zero(F.f));
    }
    d.krull_dim_expected = 2;
    return d;
}

// ------------------------------------------------------------ group algebras

namespace {

struct GroupArith {
    const GroupPresentation& g;
    size_t rank, identity;

    explicit GroupArith(const GroupPresentation& gp) : g(gp), rank(gp.rank()), identity(check_group_table(gp.F_table)) {}

    bool is_torsion(size_t j) const { return j >= static_cast<size_t>(g.free_rank); }
    long order(size_t j) const { return g.torsion[j - g.free_rank]; }
    std::vector<long> reduce(std::vector<long> v) const {
        for (size_t j = 0; j < rank; ++j)
            if (is_torsion(j)) v[j] = mod(v[j], order(j));
        return v;
    }
    std::vector<long> act(size_t f, const std::vector<long>& v) const {
        std::vector<long> out(rank, 0);
        for (size_t j = 0; j < rank; ++j)
            for (size_t i = 0; i < rank; ++i) out[i] += g.F_action[f][i][j] * v[j];
        return reduce(out);
    }
    std::vector<long> unit(size_t j) const {
        std::vector<long> v(rank, 0);
        v[j] = 1;
        return v;
    }
    size_t inverse(size_t f) const {
        for (size_t h = 0; h < g.F_table.size(); ++h)
            if (g.F_table[f][h] == identity) return h;
        throw NotAGroup("no inverse");
    }
};

std::string n_name(const GroupPresentation& g, size_t j) {
    return j < g.N_names.size() ? g.N_names[j] : "n" + std::to_string(j);
}
std::string f_name(const GroupPresentation& g, size_t f) {
    return f < g.F_names.size() ? g.F_names[f] : "f" + std::to_string(f);
}

}  // namespace

static void validate_group(const GroupPresentation& g, const std::vector<long>& mu) {
    if (g.free_rank < 0) throw SchemaError("negative free rank");
    if (g.F_table.empty()) throw SchemaError("F must be nonempty");
    GroupArith ga(g);
    const size_t r = ga.rank, nf = g.F_table.size();
    for (long d : g.torsion)
        if (d < 2) throw BadParameters("torsion orders must be ≥ 2");
    if (g.F_action.size() != nf) throw SchemaError("one action matrix per element of F required");
    for (const auto& mat : g.F_action) {
        if (mat.size() != r) throw SchemaError("action matrix has the wrong size");
        for (const auto& row : mat)
            if (row.size() != r) throw SchemaError("action matrix has the wrong size");
    }
    for (size_t j = 0; j < r; ++j)
        if (ga.act(ga.identity, ga.unit(j)) != ga.reduce(ga.unit(j)))
            throw BadParameters("the identity of F must act trivially");
    for (size_t a = 0; a < nf; ++a)
        for (size_t b = 0; b < nf; ++b)
            for (size_t j = 0; j < r; ++j)
                if (ga.act(g.F_table[a][b], ga.unit(j)) != ga.act(a, ga.act(b, ga.unit(j))))
                    throw BadParameters("F does not act by a homomorphism (" + f_name(g, a) + ", " + f_name(g, b) + ")");
    for (size_t a = 0; a < nf; ++a)
        for (size_t j = 0; j < r; ++j) {
            if (!ga.is_torsion(j)) continue;
            auto img = ga.act(a, ga.unit(j));
            for (size_t i = 0; i < r; ++i) {
                long v = img[i] * ga.order(j);
                if (ga.is_torsion(i) ? mod(v, ga.order(i)) != 0 : v != 0)
                    throw BadParameters("the action does not respect the torsion of " + n_name(g, j));
            }
        }
    if (mu.size() != r) throw SchemaError("one multiplier per generator of N required");
    for (size_t j = 0; j < r; ++j) {
        if (mu[j] < 1) throw BadParameters("multipliers must be positive");
        if (ga.is_torsion(j) && ga.order(j) % mu[j] != 0) throw BadParameters("multiplier must divide the torsion order");
    }
    for (size_t a = 0; a < nf; ++a)
        for (size_t j = 0; j < r; ++j) {
            auto v = ga.unit(j);
            v[j] = mu[j];
            auto img = ga.act(a, ga.reduce(v));
            for (size_t i = 0; i < r; ++i)
                if (mod(img[i], mu[i]) != 0) throw BadParameters("M is not stable under F");
        }
}

CleftData group_data(const FieldDescriptor& f, const GroupPresentation& g, const std::vector<long>& multipliers) {
    std::vector<long> mu = multipliers;
    if (mu.empty()) mu.assign(g.rank(), 1);
    validate_group(g, mu);
    GroupArith ga(g);
    const size_t r = ga.rank, nf = g.F_table.size();

    std::vector<std::string> names;
    std::vector<bool> laurent;
    std::vector<std::string> rel;
    std::vector<long> o(r, 0);
    for (size_t j = 0; j < r; ++j) {
        names.push_back(mu[j] == 1 ? n_name(g, j) : n_name(g, j) + "_" + std::to_string(mu[j]));
        laurent.push_back(!ga.is_torsion(j));
        if (ga.is_torsion(j)) {
            o[j] = ga.order(j) / mu[j];
            rel.push_back(names[j] + "^" + std::to_string(o[j]) + " - 1");
        }
    }
    Frame F(f, names, laurent, rel);

    // coset representatives c with 0 ≤ c_j < μ_j
    size_t Q = 1;
    for (long m : mu) Q *= static_cast<size_t>(m);
    auto c_index = [&](const std::vector<long>& c) {
        size_t k = 0;
        for (size_t j = r; j-- > 0;) k = k * mu[j] + c[j];
        return k;
    };
    auto c_of = [&](size_t k) {
        std::vector<long> c(r);
        for (size_t j = 0; j < r; ++j) {
            c[j] = static_cast<long>(k % mu[j]);
            k /= mu[j];
        }
        return c;
    };
    // (v, f) = (M-part) · γ(c, f)
    auto split = [&](const std::vector<long>& v, size_t fel) {
        std::vector<long> c(r);
        Poly m = F.c(1);
        for (size_t j = 0; j < r; ++j) {
            c[j] = mod(v[j], mu[j]);
            long e = (v[j] - c[j]) / mu[j];
            m = m * (ga.is_torsion(j) ? F.v(j).pow(static_cast<unsigned>(mod(e, o[j]))) : F.lp(j, e));
        }
        HCoords out;
        put(out, fel * Q + c_index(c), F.A.nf(m));
        return out;
    };
    auto add_vec = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> s(r);
        for (size_t j = 0; j < r; ++j) s[j] = a[j] + b[j];
        return ga.reduce(s);
    };

    CleftData d;
    d.name = "group";
    d.A = F.A;
    d.delta_A.assign(F.R.nvars(), Poly());
    d.eps_A = zero_vec(f, F.R.nvars());
    d.antipode_A.assign(F.R.nvars(), Poly());
    for (size_t i = 0; i < F.R.nvars(); ++i) {
        d.delta_A[i] = F.grouplike(i);
        d.eps_A[i] = Scalar::one(f);
    }
    for (size_t j = 0; j < r; ++j) {
        if (ga.is_torsion(j)) {
            d.antipode_A[j] = F.v(j).pow(static_cast<unsigned>(o[j] - 1));
        } else {
            size_t h = static_cast<size_t>(F.R.partner(j));
            d.antipode_A[j] = F.v(h);
            d.antipode_A[h] = F.v(j);
        }
    }
    const size_t N = Q * nf;
    d.unit = ga.identity * Q;
    std::vector<std::pair<std::vector<long>, size_t>> gens;
    for (size_t j = 0; j < r; ++j)
        if (mu[j] > 1) {
            d.generators.push_back(ga.identity * Q + c_index(ga.unit(j)));
            gens.push_back({ga.unit(j), ga.identity});
        }
    for (size_t a = 0; a < nf; ++a)
        if (a != ga.identity) {
            d.generators.push_back(a * Q);
            gens.push_back({std::vector<long>(r, 0), a});
        }
    init_tables(d, N, gens.size());
    for (size_t a = 0; a < nf; ++a)
        for (size_t k = 0; k < Q; ++k) {
            const size_t h = a * Q + k;
            const auto c = c_of(k);
            std::vector<std::string> parts;
            for (size_t j = 0; j < r; ++j) {
                parts.push_back(power_label(n_name(g, j), c[j]));
                d.words[h].insert(d.words[h].end(), static_cast<size_t>(c[j]), ga.identity * Q + c_index(ga.unit(j)));
            }
            if (a != ga.identity) {
                parts.push_back(f_name(g, a));
                d.words[h].push_back(a * Q);
            }
            d.labels[h] = join_label(parts);
            for (size_t s = 0; s < gens.size(); ++s)
                d.rmul[h][s] = split(add_vec(c, ga.act(a, gens[s].first)), g.F_table[a][gens[s].second]);
            // conjugation by (c, a) on M: only a matters
            for (size_t j = 0; j < r; ++j) {
                auto v = ga.unit(j);
                v[j] = mu[j];
                const auto& img = split(ga.act(a, ga.reduce(v)), ga.identity);
                d.measuring[h].push_back(img.begin()->second);
            }
        }
    for (size_t s = 0; s < gens.size(); ++s) {
        const size_t gi = d.generators[s];
        d.gen_comult[s] = {{gi + N * gi, F.one2()}};
        // (v, a)⁻¹ = (−a⁻¹(v), a⁻¹)
        const size_t ai = ga.inverse(gens[s].second);
        auto v = ga.act(ai, gens[s].first);
        for (auto& x : v) x = -x;
        d.gen_antipode[s] = split(ga.reduce(v), ai);
        d.gen_counit.push_back(Scalar::one(f));
    }
    d.krull_dim_expected = g.free_rank;
    d.coradical_length = 0;
    d.group = g;
    d.multipliers = mu;
    std::ostringstream ms;
    for (size_t j = 0; j < r; ++j) ms << (j ? "," : "") << mu[j];
    d.params = {{"free_rank", std::to_string(g.free_rank)}, {"F_order", std::to_string(nf)}, {"multipliers", ms.str()}};
    return d;
}

GroupPresentation dihedral_group() {
    GroupPresentation g;
    g.free_rank = 1;
    g.F_table = cyclic_group_table(2);
    g.F_action = {{{1}}, {{-1}}};
    g.N_names = {"b"};
    g.F_names = {"1", "a"};
    return g;
}

CleftData dihedral_data() {
    CleftData d = group_data(make_field(0, 1), dihedral_group(), {1});
    d.name = "dihedral";
    return d;
}

GroupPresentation z_times_s3_by_c2() {
    GroupPresentation g;
    g.free_rank = 1;
    g.torsion = {3};
    // F = ⟨β⟩ × ⟨a⟩ = {1, β, a, βa}, multiplication is XOR of the indices
    g.F_table = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    g.F_action = {{{1, 0}, {0, 1}}, {{1, 0}, {0, 2}}, {{-1, 0}, {0, 1}}, {{-1, 0}, {0, 2}}};
    g.N_names = {"x", "s"};
    g.F_names = {"1", "beta", "a", "beta*a"};
    return g;
}

// ------------------------------------------------------------ restricted sl2

CleftData restricted_sl2_data(long p, long cyclotomic_order) {
    if (p != 2 && p != 3) throw BadParameters("restricted sl2: p ∈ {2, 3}");
    Frame F(make_field(p, cyclotomic_order), {"E", "F", "C"}, {false, false, false});
    const FieldDescriptor& f = F.f;
    const size_t P = static_cast<size_t>(p), N = P * P * P;
    auto idx = [&](size_t a, size_t b, size_t c) { return (a * P + b) * P + c; };
    // Adds coef · e^a f^b h(poly) with wrap-arounds e^p = E, f^p = F, h^p = C + h.
    auto emit = [&](HCoords& out, size_t a, size_t b, std::vector<Scalar> hp, Poly coef) {
        if (a == P) {
            coef = coef * F.v(0);
            a = 0;
        }
        if (b == P) {
            coef = coef * F.v(1);
            b = 0;
        }
        if (hp.size() > P) {
            Scalar top = hp[P];
            hp.resize(P);
            put(out, idx(a, b, 0), (coef * F.v(2)).scaled(top));
            hp[1] += top;
        }
        for (size_t c = 0; c < hp.size(); ++c)
            if (!hp[c].is_zero()) put(out, idx(a, b, c), coef.scaled(hp[c]));
    };
    // coefficients of (h + k)^c
    auto shifted = [&](long k, size_t c) {
        std::vector<Scalar> v(c + 1, Scalar::zero(f));
        v[0] = Scalar::one(f);
        for (size_t t = 0; t < c; ++t) {
            std::vector<Scalar> w(c + 1, Scalar::zero(f));
            for (size_t i = 0; i <= t; ++i) {
                w[i + 1] += v[i];
                w[i] += v[i] * Scalar(f, k);
            }
            v = w;
        }
        return v;
    };

    CleftData d;
    d.name = "restricted_sl2";
    d.params = {{"p", std::to_string(p)}};
    d.A = F.A;
    for (size_t i = 0; i < 3; ++i) {
        d.delta_A.push_back(F.primitive(i));
        d.antipode_A.push_back(-F.v(i));
    }
    d.eps_A = zero_vec(f, 3);
    d.unit = 0;
    d.generators = {idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)};
    init_tables(d, N, 3);
    for (size_t a = 0; a < P; ++a)
        for (size_t b = 0; b < P; ++b)
            for (size_t c = 0; c < P; ++c) {
                const size_t h = idx(a, b, c);
                d.labels[h] = join_label({power_label("e", a), power_label("f", b), power_label("h", c)});
                d.words[h].insert(d.words[h].end(), a, idx(1, 0, 0));
                d.words[h].insert(d.words[h].end(), b, idx(0, 1, 0));
                d.words[h].insert(d.words[h].end(), c, idx(0, 0, 1));
                // · e:  e^{a+1} f^b (h+2)^c − b e^a f^{b−1} (h−b+1)(h+2)^c
                emit(d.rmul[h][0], a + 1, b, shifted(2, c), F.c(1));
                if (b > 0) {
                    auto hp = shifted(2, c);
                    std::vector<Scalar> prod(hp.size() + 1, Scalar::zero(f));
                    const Scalar shift(f, 1 - static_cast<long>(b));
                    for (size_t i = 0; i < hp.size(); ++i) {
                        prod[i + 1] += hp[i];
                        prod[i] += hp[i] * shift;
                    }
                    emit(d.rmul[h][0], a, b - 1, prod, F.c(-static_cast<long>(b)));
                }
                // · f:  e^a f^{b+1} (h−2)^c
                emit(d.rmul[h][1], a, b + 1, shifted(-2, c), F.c(1));
                // · h
                std::vector<Scalar> hc(c + 2, Scalar::zero(f));
                hc[c + 1] = Scalar::one(f);
                emit(d.rmul[h][2], a, b, hc, F.c(1));
                d.measuring[h].assign(3, Poly(F.R));
                if (h == 0)
                    for (size_t i = 0; i < 3; ++i) d.measuring[h][i] = F.v(i);
            }
    for (size_t s = 0; s < 3; ++s) {
        const size_t gi = d.generators[s];
        d.gen_comult[s] = {{gi + N * 0, F.one2()}, {0 + N * gi, F.one2()}};
        d.gen_antipode[s] = {{gi, F.c(-1)}};
        d.gen_counit.push_back(Scalar::zero(f));
    }
    d.krull_dim_expected = 3;
    d.coradical_length = static_cast<int>(3 * (p - 1));
    return d;
}

// ------------------------------------------------------------ dispatch

CleftData family_data(const FamilyParams& fp) {
    CleftData d;
    const std::string& fam = fp.family;
    if (fam == "taft")
        d = taft_data(fp.n, fp.t, fp.q_power);
    else if (fam == "liu")
        d = liu_data(fp.n, fp.w, fp.q_power);
    else if (fam == "quantum_plane")
        d = quantum_plane_data(fp.n, fp.l, fp.q_power);
    else if (fam == "gz_b")
        d = gz_b_data(fp.n, fp.gz_p, fp.q_power);
    else if (fam == "dihedral")
        d = dihedral_data();
    else if (fam == "group") {
        if (!fp.group) throw SchemaError("group family needs a group presentation");
        d = group_data(make_field(fp.p, fp.q_order > 0 ? fp.q_order : 1), *fp.group, fp.multipliers);
    } else if (fam == "restricted_sl2")
        d = restricted_sl2_data(fp.p, fp.q_order > 0 ? fp.q_order : 1);
    else
        throw SchemaError("unknown family '" + fam + "'");
    return d;
}

CleftPresentation make_family(const FamilyParams& fp) {
    CleftPresentation p = CleftPresentation::build(family_data(fp));
    PresentationReport rep = verify_presentation(p);
    if (const CheckResult* bad = rep.failure())
        throw CertificateFailure(p.name() + ": " + bad->name + " fails: " + bad->detail);
    return p;
}

}  // namespace hopforbit
