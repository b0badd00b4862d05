#include "hopforbit/solve.hpp"

#include "hopforbit/errors.hpp"

#include <algorithm>
#include <set>

namespace hopforbit {

Point Point::from_user(const PolyRing& ring, const Vec& user) {
    Point p{ring, zero_vec(ring.field(), ring.nvars())};
    for (size_t i = 0; i < ring.nuser(); ++i) {
        p.coords[i] = user[i];
        if (ring.is_laurent(i)) {
            if (user[i].is_zero()) throw DomainError("Laurent coordinate must be nonzero");
            p.coords[ring.partner(i)] = user[i].inverse();
        }
    }
    return p;
}

Vec Point::user_coords() const { return Vec(coords.begin(), coords.begin() + ring.nuser()); }

Ideal Point::ideal() const {
    std::vector<Poly> g;
    for (size_t i = 0; i < ring.nuser(); ++i)
        g.push_back(Poly::var(ring, i) - Poly::constant(ring, coords[i]));
    return Ideal(ring, g);
}

std::string Point::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < ring.nuser(); ++i) {
        if (i) s += ", ";
        s += ring.name(i) + "=" + coords[i].to_string();
    }
    return s + ")";
}

namespace {

mpz_class eval_mod(const std::vector<mpz_class>& g, const mpz_class& x, const mpz_class& m) {
    mpz_class v = 0;
    for (size_t i = g.size(); i-- > 0;) v = (v * x + g[i]) % m;
    return v < 0 ? mpz_class(v + m) : v;
}

// Integer roots of a monic squarefree integer polynomial: roots modulo a
// prime where it stays squarefree, Newton-lifted past the Cauchy bound.
std::vector<mpz_class> integer_roots_monic(const std::vector<mpz_class>& g) {
    const size_t n = g.size() - 1;
    mpz_class bound = 0;
    for (size_t i = 0; i < n; ++i)
        if (abs(g[i]) > bound) bound = abs(g[i]);
    bound += 1;
    std::vector<mpz_class> dg;
    for (size_t i = 1; i <= n; ++i) dg.push_back(g[i] * static_cast<unsigned long>(i));
    for (long p = 3; p < 100000; p += 2) {
        if (!is_prime(p)) continue;
        FieldDescriptor fp = make_field(p, 1);
        auto reduce = [&](const std::vector<mpz_class>& c) {
            Vec v;
            for (const auto& x : c) v.emplace_back(fp, mpq_class(x));
            return UPoly(fp, v);
        };
        UPoly gp = reduce(g);
        if (gcd(gp, reduce(dg)).degree() != 0) continue;
        std::vector<mpz_class> out;
        mpz_class P = p;
        for (long r0 = 0; r0 < p; ++r0) {
            if (eval_mod(g, r0, P) != 0) continue;
            mpz_class r = r0, m = P;
            while (m <= 2 * bound) {
                m *= m;
                mpz_class d = eval_mod(dg, r, m), inv;
                if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0)
                    throw CertificateFailure("Hensel lift lost invertibility");
                r = (r - eval_mod(g, r, m) * inv) % m;
                if (r < 0) r += m;
            }
            if (r > m / 2) r -= m;
            mpz_class v = 0;
            for (size_t i = g.size(); i-- > 0;) v = v * r + g[i];
            if (v == 0) out.push_back(r);
        }
        return out;
    }
    throw FactorizationFailure("no good prime for root lifting");
}

std::vector<Scalar> rational_roots(const UPoly& f) {
    const FieldDescriptor& fld = f.field();
    // clear denominators
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) {
        mpz_class den = c.coeffs()[0].get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> a;
    for (const auto& c : f.coeffs()) a.push_back(mpz_class(c.coeffs()[0] * l));
    std::set<mpq_class> roots;
    size_t low = 0;
    while (low < a.size() && a[low] == 0) ++low;
    if (low > 0) roots.insert(0);
    a.erase(a.begin(), a.begin() + low);
    const size_t n = a.size() - 1;
    if (n == 1) {
        mpq_class r(-a[0], a[1]);
        r.canonicalize();
        roots.insert(r);
    } else if (n >= 2) {
        // y = a_n x turns a_n^(n-1) f(y / a_n) into a monic integer polynomial
        std::vector<mpz_class> g(n + 1);
        mpz_class pw = 1;
        for (size_t i = n; i-- > 0;) {
            g[i] = a[i] * pw;
            pw *= a[n];
        }
        g[n] = 1;
        for (const auto& y : integer_roots_monic(g)) {
            mpq_class r(y, a[n]);
            r.canonicalize();
            roots.insert(r);
        }
    }
    std::vector<Scalar> out;
    for (const auto& r : roots) out.emplace_back(fld, r);
    return out;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    return r < 0 ? mpz_class(r + m) : r;
}

mpz_class ceil_abs(const mpq_class& q) {
    mpz_class n = abs(q.get_num()), d = q.get_den();
    return mpz_class((n + d - 1) / d);
}

// Inverse of a square matrix over Z/M where it is invertible mod p.
std::vector<std::vector<mpz_class>> inverse_mod(std::vector<std::vector<mpz_class>> a, const mpz_class& M,
                                                const mpz_class& p) {
    const size_t n = a.size();
    std::vector<std::vector<mpz_class>> inv(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] % p == 0) ++piv;
        if (piv == n) throw CertificateFailure("Vandermonde matrix singular modulo p");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        mpz_class u;
        mpz_invert(u.get_mpz_t(), a[c][c].get_mpz_t(), M.get_mpz_t());
        for (size_t j = 0; j < n; ++j) {
            a[c][j] = mod_pos(a[c][j] * u, M);
            inv[c][j] = mod_pos(inv[c][j] * u, M);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpz_class f = a[r][c];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] = mod_pos(a[r][j] - f * a[c][j], M);
                inv[r][j] = mod_pos(inv[r][j] - f * inv[c][j], M);
            }
        }
    }
    return inv;
}

// Roots in K = Q(zeta_n) of a squarefree f of degree ≥ 2.
//
// f is scaled to a monic polynomial g over Z[zeta], whose roots are then
// algebraic integers of K, i.e. integral in the power basis. For a prime
// p ≡ 1 (mod n), Φ_n splits into d linear factors, giving d embeddings
// Z[zeta] → Z_p; roots of each image are Hensel-lifted and every
// combination is pulled back through the Vandermonde matrix of the
// embedded zetas, then checked exactly. The lifting precision exceeds twice
// the bound |c_i| ≤ d·(1 + max‖g_i‖₁)·max_i‖δ_i‖₁ on root coordinates,
// with δ the trace-dual of the power basis.
std::vector<Scalar> cyclotomic_roots(const UPoly& f) {
    const FieldDescriptor& K = f.field();
    const int d = K.degree();
    const long n = K.cyclotomic_order();
    const int m = f.degree();
    if (m == 1) return {-f[0] / f[1]};

    // 1. rational integer leading coefficient: multiply by N(a)/a, then clear denominators
    Vec coeffs = f.coeffs();
    {
        Scalar a = f.lead();
        Matrix mult(make_field(0, 1), d, d);
        Scalar z = Scalar::zeta(K);
        for (int j = 0; j < d; ++j) {
            Scalar col = a * z.pow(j);
            for (int i = 0; i < d; ++i) mult(i, j) = Scalar(make_field(0, 1), col.coeffs()[i]);
        }
        // N(a) = det(mult) via elimination
        Matrix e = mult;
        mpq_class det = 1;
        for (int c = 0; c < d; ++c) {
            int piv = c;
            while (piv < d && e(piv, c).is_zero()) ++piv;
            if (piv == d) throw CertificateFailure("zero norm of nonzero element");
            if (piv != c) {
                det = -det;
                for (int j = 0; j < d; ++j) std::swap(e(piv, j), e(c, j));
            }
            det *= e(c, c).coeffs()[0];
            for (int r = c + 1; r < d; ++r) {
                if (e(r, c).is_zero()) continue;
                Scalar q = e(r, c) / e(c, c);
                for (int j = c; j < d; ++j) e(r, j) = e(r, j) - q * e(c, j);
            }
        }
        Scalar conj = Scalar(K, det) * a.inverse();
        for (auto& c : coeffs) c = c * conj;
    }
    mpz_class L = 1;
    for (const auto& c : coeffs)
        for (const auto& q : c.coeffs()) {
            mpz_class den = q.get_den();
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den.get_mpz_t());
        }
    for (auto& c : coeffs) c = c * Scalar(K, mpq_class(L));
    const mpz_class A = coeffs[m].coeffs()[0].get_num();

    // 2. monic g(y) = A^(m-1) f(y / A) with integral coordinates
    std::vector<std::vector<mpz_class>> g(m + 1, std::vector<mpz_class>(d, 0));
    {
        mpz_class pw = 1;
        for (int i = m - 1; i >= 0; --i) {
            for (int k = 0; k < d; ++k) g[i][k] = mpz_class(coeffs[i].coeffs()[k] * pw);
            pw *= A;
        }
        g[m][0] = 1;
    }
    Vec gK;
    for (int i = 0; i <= m; ++i) {
        std::vector<mpq_class> cs(g[i].begin(), g[i].end());
        gK.push_back(Scalar::from_coeffs(K, cs));
    }
    UPoly gpoly(K, gK);

    // 3. coordinate bound
    mpz_class H = 0;
    for (int i = 0; i < m; ++i) {
        mpz_class s = 0;
        for (int k = 0; k < d; ++k) s += abs(g[i][k]);
        if (s > H) H = s;
    }
    mpz_class bound;
    {
        FieldDescriptor Q = make_field(0, 1);
        Scalar z = Scalar::zeta(K);
        auto trace = [&](const Scalar& x) {
            mpq_class t = 0;
            for (int j = 0; j < d; ++j) t += (x * z.pow(j)).coeffs()[j];
            return t;
        };
        Matrix T(Q, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) T(i, j) = Scalar(Q, trace(z.pow(i + j)));
        auto Ti = inverse(T);
        if (!Ti) throw CertificateFailure("degenerate trace form");
        mpz_class D = 0;
        for (int i = 0; i < d; ++i) {
            mpz_class s = 0;
            for (int j = 0; j < d; ++j) s += ceil_abs((*Ti)(i, j).coeffs()[0]);
            if (s > D) D = s;
        }
        bound = mpz_class(d) * (H + 1) * D;
    }

    std::vector<mpz_class> phi;
    for (const auto& c : K.modulus()) phi.push_back(c.get_num());

    for (long p = n + 1; p < 1000000; p += n) {
        if (!is_prime(p)) continue;
        const mpz_class P = p;
        std::vector<long> omegas;
        for (long x = 1; x < p && static_cast<int>(omegas.size()) < d; ++x)
            if (eval_mod(phi, x, P) == 0) omegas.push_back(x);
        if (static_cast<int>(omegas.size()) != d) continue;
        // squarefree images under every embedding
        FieldDescriptor fp = make_field(p, 1);
        auto image_mod = [&](long w, const mpz_class& M) {
            std::vector<mpz_class> out;
            for (int i = 0; i <= m; ++i) out.push_back(eval_mod(g[i], w, M));
            return out;
        };
        bool good = true;
        for (long w : omegas) {
            auto im = image_mod(w, P);
            Vec v, dv;
            for (int i = 0; i <= m; ++i) v.emplace_back(fp, mpq_class(im[i]));
            for (int i = 1; i <= m; ++i) dv.emplace_back(fp, mpq_class(im[i] * i));
            if (gcd(UPoly(fp, v), UPoly(fp, dv)).degree() != 0) {
                good = false;
                break;
            }
        }
        if (!good) continue;

        mpz_class M = P;
        while (M <= 2 * bound) M *= M;
        auto newton = [&](const std::vector<mpz_class>& poly, mpz_class r) {
            std::vector<mpz_class> dp;
            for (size_t i = 1; i < poly.size(); ++i) dp.push_back(poly[i] * static_cast<unsigned long>(i));
            for (mpz_class prec = P; prec < M;) {
                prec *= prec;
                mpz_class dv = eval_mod(dp, r, M), inv;
                if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), M.get_mpz_t()) == 0)
                    throw CertificateFailure("Hensel lift lost invertibility");
                r = mod_pos(r - eval_mod(poly, r, M) * inv, M);
            }
            return r;
        };
        std::vector<mpz_class> wl;
        for (long w : omegas) wl.push_back(newton(phi, w));
        // roots under each embedding
        std::vector<std::vector<mpz_class>> lifted;
        for (int j = 0; j < d; ++j) {
            std::vector<mpz_class> gm;
            for (int i = 0; i <= m; ++i) {
                mpz_class acc = 0;
                for (int k = d; k-- > 0;) acc = mod_pos(acc * wl[j] + g[i][k], M);
                gm.push_back(acc);
            }
            std::vector<mpz_class> rs;
            for (long r0 = 0; r0 < p; ++r0)
                if (eval_mod(gm, r0, P) == 0) rs.push_back(newton(gm, r0));
            if (rs.empty()) return {};
            lifted.push_back(rs);
        }
        std::vector<std::vector<mpz_class>> V(d, std::vector<mpz_class>(d));
        for (int j = 0; j < d; ++j) {
            mpz_class pw = 1;
            for (int i = 0; i < d; ++i) {
                V[j][i] = pw;
                pw = mod_pos(pw * wl[j], M);
            }
        }
        auto Vi = inverse_mod(V, M, P);
        std::vector<Scalar> out;
        std::vector<size_t> pick(d, 0);
        const Scalar Ainv = Scalar(K, mpq_class(A)).inverse();
        while (true) {
            std::vector<mpq_class> cs(d);
            for (int i = 0; i < d; ++i) {
                mpz_class c = 0;
                for (int j = 0; j < d; ++j) c += Vi[i][j] * lifted[j][pick[j]];
                c = mod_pos(c, M);
                if (c > M / 2) c -= M;
                cs[i] = c;
            }
            Scalar y = Scalar::from_coeffs(K, cs);
            if (gpoly.eval(y).is_zero()) out.push_back(y * Ainv);
            int k = 0;
            while (k < d && ++pick[k] == lifted[k].size()) pick[k++] = 0;
            if (k == d) break;
        }
        return out;
    }
    throw FactorizationFailure("no suitable prime for cyclotomic root lifting");
}

}  // namespace

RootReport roots_in_field(const UPoly& f0) {
    RootReport rep;
    if (f0.degree() <= 0) return rep;
    const FieldDescriptor& K = f0.field();
    UPoly f = squarefree_part(f0);
    std::vector<Scalar> roots;
    if (K.characteristic() > 0) {
        for (const auto& x : enumerate_field(K))
            if (f.eval(x).is_zero()) roots.push_back(x);
    } else if (K.degree() == 1) {
        roots = rational_roots(f);
    } else {
        roots = cyclotomic_roots(f);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    UPoly rest = f;
    for (const auto& r : roots) rest = rest.divmod(UPoly::linear_root(r)).first;
    rep.roots = roots;
    rep.unresolved_degree = rest.degree();
    return rep;
}

SolveReport solve_zero_dim_partial(const Ideal& I) {
    SolveReport rep;
    AffineAlgebra A(I);
    const FiniteData* fd = A.finite_data();
    if (!fd) throw InfiniteQuotient("ideal is not zero-dimensional: " + I.to_string());
    const size_t n = fd->basis.size();
    if (n == 0) return rep;
    const PolyRing& R = I.ring();
    const Vec one = unit_vec(R.field(), n, 0);  // basis is sorted: 1 comes first
    Vec coords = zero_vec(R.field(), R.nvars());
    for (size_t v = 0; v < R.nvars(); ++v) {
        UPoly m = krylov_minimal_polynomial(fd->mult[v], one);
        if (m.degree() == 1) {
            coords[v] = -m[0];
            continue;
        }
        RootReport rr = roots_in_field(m);
        rep.unresolved_degree += rr.unresolved_degree;
        for (const auto& r : rr.roots) {
            SolveReport sub = solve_zero_dim_partial(I.with({Poly::var(R, v) - Poly::constant(R, r)}));
            rep.unresolved_degree += sub.unresolved_degree;
            rep.points.insert(rep.points.end(), sub.points.begin(), sub.points.end());
        }
        std::sort(rep.points.begin(), rep.points.end());
        rep.points.erase(std::unique(rep.points.begin(), rep.points.end()), rep.points.end());
        return rep;
    }
    rep.points.push_back(Point{R, coords});
    return rep;
}

std::vector<Point> solve_zero_dim(const Ideal& I) {
    SolveReport rep = solve_zero_dim_partial(I);
    if (rep.unresolved_degree > 0) throw NonRationalPoint(rep.unresolved_degree);
    return rep.points;
}

}  // namespace hopforbit
