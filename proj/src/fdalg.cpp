#include "hopforbit/fdalg.hpp"

#include "hopforbit/errors.hpp"
#include "hopforbit/solve.hpp"

#include <algorithm>

namespace hopforbit {

SparseVec sparsify(const Vec& v) {
    SparseVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

Vec densify(const FieldDescriptor& f, size_t n, const SparseVec& s) {
    Vec v = zero_vec(f, n);
    for (const auto& [i, c] : s) v[i] = c;
    return v;
}

FDAlgebra::FDAlgebra(const FieldDescriptor& f, size_t dim, std::vector<SparseVec> products, Vec unit,
                     std::vector<std::string> labels)
    : f_(f), n_(dim), mult_(std::move(products)), unit_(std::move(unit)), labels_(std::move(labels)) {
    if (mult_.size() != n_ * n_) throw SchemaError("structure constant table has wrong size");
    if (labels_.empty())
        for (size_t i = 0; i < n_; ++i) labels_.push_back("e" + std::to_string(i));
    commutative_ = true;
    for (size_t i = 0; i < n_ && commutative_; ++i)
        for (size_t j = i + 1; j < n_; ++j)
            if (product(i, j) != product(j, i)) {
                commutative_ = false;
                break;
            }
}

Vec FDAlgebra::mul(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(f_, n_);
    for (size_t i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n_; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (const auto& [k, v] : product(i, j)) out[k] += c * v;
        }
    }
    return out;
}

Vec FDAlgebra::power(const Vec& a, unsigned k) const {
    Vec r = unit_;
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Matrix FDAlgebra::left_matrix(const Vec& a) const {
    Matrix m(f_, n_, n_);
    for (size_t j = 0; j < n_; ++j) m.set_col(j, mul(a, basis(j)));
    return m;
}

Matrix FDAlgebra::right_matrix(const Vec& a) const {
    Matrix m(f_, n_, n_);
    for (size_t j = 0; j < n_; ++j) m.set_col(j, mul(basis(j), a));
    return m;
}

Scalar FDAlgebra::trace_of_left(size_t k) const {
    Scalar t = Scalar::zero(f_);
    for (size_t i = 0; i < n_; ++i)
        for (const auto& [l, c] : product(k, i))
            if (l == i) t += c;
    return t;
}

namespace {

Vec apply_sparse_product(const FDAlgebra& a, const SparseVec& x, size_t l, bool left_factor_is_x) {
    Vec out = zero_vec(a.field(), a.dim());
    for (const auto& [i, c] : x) {
        const SparseVec& p = left_factor_is_x ? a.product(i, l) : a.product(l, i);
        for (const auto& [k, v] : p) out[k] += c * v;
    }
    return out;
}

bool triple_ok(const FDAlgebra& a, size_t i, size_t j, size_t l) {
    Vec lhs = apply_sparse_product(a, a.product(i, j), l, true);
    Vec rhs = apply_sparse_product(a, a.product(j, l), i, false);
    return lhs == rhs;
}

}  // namespace

std::optional<std::array<size_t, 3>> associativity_failure(const FDAlgebra& a) {
    const size_t n = a.dim();
    if (n <= 64) {
        std::vector<char> bad(n, 0);
        std::vector<std::array<size_t, 3>> where(n);
        const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel_kernels())
        for (long i = 0; i < ln; ++i) {
            for (size_t j = 0; j < n && !bad[i]; ++j)
                for (size_t l = 0; l < n; ++l)
                    if (!triple_ok(a, i, j, l)) {
                        bad[i] = 1;
                        where[i] = {static_cast<size_t>(i), j, l};
                        break;
                    }
        }
        for (size_t i = 0; i < n; ++i)
            if (bad[i]) return where[i];
        return std::nullopt;
    }
    // deterministic sample: a linear congruential walk over triples
    unsigned long long s = 12345;
    for (int k = 0; k < 20000; ++k) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        size_t i = (s >> 33) % n, j = (s >> 13) % n, l = (s >> 43) % n;
        if (!triple_ok(a, i, j, l)) return std::array<size_t, 3>{i, j, l};
    }
    return std::nullopt;
}

bool unit_is_identity(const FDAlgebra& a) {
    for (size_t i = 0; i < a.dim(); ++i) {
        Vec e = a.basis(i);
        if (a.mul(a.unit(), e) != e || a.mul(e, a.unit()) != e) return false;
    }
    return true;
}

namespace {

// Radical over a prime field F_p with p ≤ dim: lift the left regular
// representation to integers and use the functionals
//   g_i(a) = (tr(â^(p^i)) mod p^(i+1)) / p^i,
// which are linear on I_(i-1); I_i = {a ∈ I_(i-1) : g_i(ab) = 0 ∀b} and the
// chain reaches the radical at i = ⌊log_p n⌋ (Cohen–Ivanyos–Wales).
using IntMat = std::vector<long>;

IntMat int_mul(const IntMat& x, const IntMat& y, size_t n, long mod) {
    IntMat z(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long xik = x[i * n + k];
            if (!xik) continue;
            for (size_t j = 0; j < n; ++j) z[i * n + j] = (z[i * n + j] + xik * y[k * n + j]) % mod;
        }
    return z;
}

long trace_functional(const FDAlgebra& a, const Vec& x, long p, int i) {
    const size_t n = a.dim();
    long mod = p;
    for (int k = 0; k < i; ++k) mod *= p;  // p^(i+1)
    Matrix l = a.left_matrix(x);
    IntMat m(n * n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) m[r * n + c] = l(r, c).coeffs()[0].get_num().get_si();
    for (int k = 0; k < i; ++k) {  // m ← m^p
        IntMat acc = m;
        for (long e = 1; e < p; ++e) acc = int_mul(acc, m, n, mod);
        m = acc;
    }
    long tr = 0;
    for (size_t r = 0; r < n; ++r) tr = (tr + m[r * n + r]) % mod;
    return tr / (mod / p);
}

Subspace radical_prime_field(const FDAlgebra& a) {
    const FieldDescriptor& f = a.field();
    const long p = f.characteristic();
    const size_t n = a.dim();
    int top = 0;
    for (long q = p; q <= static_cast<long>(n); q *= p) ++top;
    Subspace I = Subspace::whole(f, n);
    for (int i = 0; i <= top && I.dim() > 0; ++i) {
        const auto& basis = I.basis();
        Matrix cond(f, n, basis.size());
        for (size_t j = 0; j < basis.size(); ++j)
            for (size_t k = 0; k < n; ++k) cond(k, j) = Scalar(f, trace_functional(a, a.mul(basis[j], a.basis(k)), p, i));
        std::vector<Vec> next;
        for (const auto& c : kernel(cond)) {
            Vec v = zero_vec(f, n);
            for (size_t j = 0; j < basis.size(); ++j)
                if (!c[j].is_zero()) axpy(v, c[j], basis[j]);
            next.push_back(v);
        }
        I = Subspace::span(f, n, next);
    }
    return I;
}

// The Jacobson radical is a ring invariant, so over 𝔽_p(ζ) of degree d it can
// be computed on the 𝔽_p-algebra with basis ζ^k e_i (index i·d + k).
Subspace radical_by_restriction(const FDAlgebra& a) {
    const FieldDescriptor& K = a.field();
    const FieldDescriptor Fp = make_field(K.characteristic(), 1);
    const size_t n = a.dim(), d = static_cast<size_t>(K.degree()), N = n * d;
    auto restrict_vec = [&](const Vec& v) {
        Vec w = zero_vec(Fp, N);
        for (size_t i = 0; i < n; ++i) {
            const auto& c = v[i].coeffs();
            for (size_t k = 0; k < c.size() && k < d; ++k) w[i * d + k] = Scalar(Fp, c[k]);
        }
        return w;
    };
    std::vector<Scalar> zpow;
    for (size_t k = 0; k < 2 * d; ++k) zpow.push_back(Scalar::zeta(K).pow(static_cast<long>(k)));
    std::vector<SparseVec> prod(N * N);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const SparseVec& eij = a.product(i, j);
            for (size_t k = 0; k < d; ++k)
                for (size_t l = 0; l < d; ++l) {
                    Vec v = zero_vec(K, n);
                    for (const auto& [m, c] : eij) v[m] = c * zpow[k + l];
                    prod[(i * d + k) * N + (j * d + l)] = sparsify(restrict_vec(v));
                }
        }
    FDAlgebra r(Fp, N, std::move(prod), restrict_vec(a.unit()));
    Subspace rad_p = radical_prime_field(r);
    std::vector<Vec> back;
    for (const auto& w : rad_p.basis()) {
        Vec v = zero_vec(K, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < d; ++k)
                if (!w[i * d + k].is_zero()) v[i] += zpow[k] * Scalar(K, w[i * d + k].coeffs()[0]);
        back.push_back(v);
    }
    Subspace rad = Subspace::span(K, n, back);
    if (rad.dim() * d != rad_p.dim()) throw CertificateFailure("radical is not stable under the coefficient field");
    return rad;
}

}  // namespace

Subspace radical(const FDAlgebra& a) {
    const long p = a.field().characteristic();
    if (p > 0 && p <= static_cast<long>(a.dim())) {
        if (a.field().degree() != 1) return radical_by_restriction(a);
        return radical_prime_field(a);
    }
    const size_t n = a.dim();
    Vec tr;
    for (size_t k = 0; k < n; ++k) tr.push_back(a.trace_of_left(k));
    Matrix g(a.field(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar s = Scalar::zero(a.field());
            for (const auto& [k, c] : a.product(i, j)) s += c * tr[k];
            g(i, j) = s;
        }
    return Subspace::span(a.field(), n, kernel(g));
}

Subspace nilradical_commutative(const FDAlgebra& a) {
    const FieldDescriptor& f = a.field();
    const long p = f.characteristic();
    const size_t n = a.dim();
    if (p == 0 || p > static_cast<long>(n)) return radical(a);
    // x ↦ x^(q^k) is linear over F_q; pick q^k ≥ n
    long q = 1;
    for (int i = 0; i < f.degree(); ++i) q *= p;
    long e = q;
    while (e < static_cast<long>(n)) e *= q;
    Matrix m(f, n, n);
    for (size_t j = 0; j < n; ++j) {
        Vec x = a.basis(j), r = a.unit();
        long k = e;
        Vec b = x;
        while (k) {
            if (k & 1) r = a.mul(r, b);
            k >>= 1;
            if (k) b = a.mul(b, b);
        }
        m.set_col(j, r);
    }
    return Subspace::span(f, n, kernel(m));
}

bool is_left_ideal(const FDAlgebra& a, const Subspace& s) {
    for (const auto& v : s.basis())
        for (size_t i = 0; i < a.dim(); ++i)
            if (!s.contains(a.mul(a.basis(i), v))) return false;
    return true;
}

bool is_two_sided_ideal(const FDAlgebra& a, const Subspace& s) {
    for (const auto& v : s.basis())
        for (size_t i = 0; i < a.dim(); ++i) {
            if (!s.contains(a.mul(a.basis(i), v))) return false;
            if (!s.contains(a.mul(v, a.basis(i)))) return false;
        }
    return true;
}

Subspace two_sided_ideal(const FDAlgebra& a, const std::vector<Vec>& gens) {
    Subspace s = Subspace::span(a.field(), a.dim(), gens);
    std::vector<Vec> frontier = s.basis();
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& v : frontier)
            for (size_t i = 0; i < a.dim(); ++i)
                for (const Vec& w : {a.mul(a.basis(i), v), a.mul(v, a.basis(i))})
                    if (s.insert(w)) next.push_back(w);
        frontier = std::move(next);
    }
    return s;
}

Subspace product_space(const FDAlgebra& a, const Subspace& x, const Subspace& y) {
    std::vector<Vec> out;
    for (const auto& u : x.basis())
        for (const auto& v : y.basis()) out.push_back(a.mul(u, v));
    return Subspace::span(a.field(), a.dim(), out);
}

// ----------------------------------------------------------- quotients

Vec Quotient::project(const Vec& x) const {
    Vec r = ideal.reduce(x);
    Vec out;
    out.reserve(cols.size());
    for (size_t c : cols) out.push_back(r[c]);
    return out;
}

Vec Quotient::lift(const Vec& y) const {
    Vec x = zero_vec(alg.field(), ideal.ambient());
    for (size_t k = 0; k < cols.size(); ++k) x[cols[k]] = y[k];
    return x;
}

Quotient quotient(const FDAlgebra& a, const Subspace& ideal) {
    Quotient q;
    q.ideal = ideal;
    std::vector<bool> piv(a.dim(), false);
    for (size_t p : ideal.pivots()) piv[p] = true;
    for (size_t i = 0; i < a.dim(); ++i)
        if (!piv[i]) q.cols.push_back(i);
    const size_t m = q.cols.size();
    std::vector<SparseVec> prods(m * m);
    for (size_t s = 0; s < m; ++s)
        for (size_t t = 0; t < m; ++t)
            prods[s * m + t] = sparsify(q.project(a.basis_product(q.cols[s], q.cols[t])));
    std::vector<std::string> labels;
    for (size_t c : q.cols) labels.push_back(a.labels()[c]);
    q.alg = FDAlgebra(a.field(), m, std::move(prods), q.project(a.unit()), labels);
    return q;
}

Subspace center(const FDAlgebra& a) {
    const size_t n = a.dim();
    Subspace z = Subspace::whole(a.field(), n);
    for (size_t i = 0; i < n && z.dim() > 0; ++i) {
        // coefficients c with Σ c_k [z_k, e_i] = 0
        std::vector<Vec> comm;
        for (const auto& b : z.basis()) comm.push_back(sub(a.mul(b, a.basis(i)), a.mul(a.basis(i), b)));
        Matrix m = Matrix::from_columns(a.field(), comm, n);
        auto ker = kernel(m);
        std::vector<Vec> next;
        for (const auto& c : ker) {
            Vec v = zero_vec(a.field(), n);
            for (size_t k = 0; k < c.size(); ++k) axpy(v, c[k], z.basis()[k]);
            next.push_back(v);
        }
        z = Subspace::span(a.field(), n, next);
    }
    return z;
}

UPoly element_minpoly(const FDAlgebra& a, const Vec& e, const Vec& w) {
    std::vector<Vec> chain;
    Subspace span(a.field(), a.dim());
    Vec cur = e;
    while (span.insert(cur)) {
        chain.push_back(cur);
        cur = a.mul(cur, w);
    }
    auto c = solve(Matrix::from_columns(a.field(), chain, a.dim()), cur);
    if (!c) throw CertificateFailure("minimal polynomial dependency");
    Vec coeffs;
    for (const auto& x : *c) coeffs.push_back(-x);
    coeffs.push_back(Scalar::one(a.field()));
    return UPoly(a.field(), coeffs);
}

namespace {

Vec eval_in_algebra(const FDAlgebra& a, const UPoly& g, const Vec& e, const Vec& w) {
    Vec acc = zero_vec(a.field(), a.dim());
    for (int i = g.degree(); i >= 0; --i) acc = add(a.mul(acc, w), scale(g[i], e));
    return acc;
}

Subspace times_space(const FDAlgebra& a, const Vec& e, const Subspace& s, bool e_on_left) {
    std::vector<Vec> out;
    for (const auto& v : s.basis()) out.push_back(e_on_left ? a.mul(e, v) : a.mul(v, e));
    return Subspace::span(a.field(), a.dim(), out);
}

struct CentralPiece {
    Vec e;
    Subspace z;  // e·Z
};

// Split the commutative semisimple algebra Z (a subspace of `a`, with
// identity e) by eigen-idempotents of minimal polynomials with roots.
std::vector<CentralPiece> split_center(const FDAlgebra& a, const Vec& one, const Subspace& Z) {
    std::vector<CentralPiece> todo{{one, Z}}, done;
    while (!todo.empty()) {
        CentralPiece cp = todo.back();
        todo.pop_back();
        if (cp.z.dim() <= 1) {
            done.push_back(cp);
            continue;
        }
        std::vector<Vec> cands = cp.z.basis();
        const size_t b = cands.size();
        for (size_t i = 0; i < b; ++i)
            for (size_t j = i + 1; j < b; ++j) {
                cands.push_back(add(cands[i], cands[j]));
                cands.push_back(a.mul(cands[i], cands[j]));
            }
        bool split = false;
        for (const auto& w : cands) {
            UPoly g = element_minpoly(a, cp.e, w);
            if (g.degree() < 2) continue;
            RootReport rr = roots_in_field(g);
            // w generates the component: no linear factor means no split idempotent exists
            if (rr.roots.empty() && g.degree() == static_cast<int>(cp.z.dim())) break;
            if (rr.roots.empty()) continue;
            const Scalar& r = rr.roots.front();
            UPoly h = g.divmod(UPoly::linear_root(r)).first;
            Scalar hr = h.eval(r);
            if (hr.is_zero()) continue;  // not squarefree: should not happen when semisimple
            Vec er = scale(hr.inverse(), eval_in_algebra(a, h, cp.e, w));
            Vec rest = sub(cp.e, er);
            todo.push_back({rest, times_space(a, rest, cp.z, true)});
            todo.push_back({er, times_space(a, er, cp.z, true)});
            split = true;
            break;
        }
        if (!split) done.push_back(cp);
    }
    return done;
}

// Minimal left ideal of the block e·S by descent; returns its basis.
Subspace descend_left_ideal(const FDAlgebra& s, const Vec& e, const Subspace& block) {
    Subspace L = block;
    auto right_image = [&](const Subspace& src, const Vec& z) {
        std::vector<Vec> out;
        for (const auto& v : src.basis()) out.push_back(s.mul(v, z));
        return Subspace::span(s.field(), s.dim(), out);
    };
    Subspace whole = Subspace::whole(s.field(), s.dim());
    std::vector<Vec> pool = block.basis();
    const size_t b = pool.size();
    for (size_t i = 0; i < b; ++i)
        for (size_t j = i + 1; j < b; ++j) {
            pool.push_back(add(pool[i], pool[j]));
            pool.push_back(sub(pool[i], pool[j]));
            pool.push_back(s.mul(pool[i], pool[j]));
        }
    bool progress = true;
    while (progress && L.dim() > 1) {
        progress = false;
        auto try_take = [&](const Subspace& cand) {
            if (cand.dim() > 0 && cand.dim() < L.dim() && cand.subset_of(L) && is_left_ideal(s, cand)) {
                L = cand;
                progress = true;
            }
            return progress;
        };
        for (const auto& z : L.basis())
            if (try_take(right_image(whole, z))) break;
        if (progress) continue;
        // singular elements z = w − r·e, r a root of the minimal polynomial of w
        for (const auto& w : pool) {
            UPoly g = element_minpoly(s, e, w);
            if (g.degree() < 2) continue;
            for (const auto& r : roots_in_field(g).roots) {
                Vec z = sub(w, scale(r, e));
                if (try_take(L.intersect(right_image(whole, z)))) break;
                Subspace lz = right_image(L, z);
                if (lz.subset_of(L) && try_take(lz)) break;
            }
            if (progress) break;
        }
    }
    return L;
}

}  // namespace

Wedderburn wedderburn(const FDAlgebra& a) { return wedderburn_with_radical(a, radical(a)); }

Wedderburn wedderburn_with_radical(const FDAlgebra& a, const Subspace& rad) {
    Wedderburn w;
    w.radical = rad;
    w.semisimple = quotient(a, rad);
    const FDAlgebra& s = w.semisimple.alg;
    if (s.dim() == 0) return w;
    Subspace z = center(s);
    auto pieces = split_center(s, s.unit(), z);
    for (const auto& cp : pieces) {
        Block blk;
        blk.idempotent = cp.e;
        blk.center_degree = static_cast<int>(cp.z.dim());
        Subspace block = times_space(s, cp.e, Subspace::whole(s.field(), s.dim()), true);
        blk.block_dim = block.dim();
        if (blk.center_degree == 1) {
            Subspace L = descend_left_ideal(s, cp.e, block);
            if (L.dim() * L.dim() == blk.block_dim) {
                blk.simple_dim = L.dim();
                blk.simple_module = L.basis();
            }
        }
        w.blocks.push_back(std::move(blk));
    }
    std::sort(w.blocks.begin(), w.blocks.end(), [](const Block& x, const Block& y) {
        if (x.block_dim != y.block_dim) return x.block_dim < y.block_dim;
        if (x.center_degree != y.center_degree) return x.center_degree < y.center_degree;
        return y.idempotent < x.idempotent;
    });
    return w;
}

std::vector<Subspace> maximal_ideals_commutative(const FDAlgebra& a) {
    if (!a.commutative()) throw DomainError("maximal_ideals_commutative needs a commutative algebra");
    Wedderburn w = wedderburn_with_radical(a, nilradical_commutative(a));
    std::vector<Subspace> out;
    for (const auto& b : w.blocks) {
        if (!b.simple_dim) throw NonSplitBlock(b.center_degree);
        Matrix m(a.field(), w.semisimple.alg.dim(), a.dim());
        for (size_t j = 0; j < a.dim(); ++j)
            m.set_col(j, w.semisimple.alg.mul(b.idempotent, w.semisimple.project(a.basis(j))));
        out.push_back(Subspace::span(a.field(), a.dim(), kernel(m)));
    }
    return out;
}

bool frobenius_form_nondegenerate(const FDAlgebra& a, const Vec& lambda) {
    const size_t n = a.dim();
    Matrix g(a.field(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar s = Scalar::zero(a.field());
            for (const auto& [k, c] : a.product(i, j)) s += c * lambda[k];
            g(i, j) = s;
        }
    return rank(g) == n;
}

FrobeniusReport is_frobenius_commutative(const FDAlgebra& a) {
    if (!a.commutative()) throw DomainError("is_frobenius_commutative needs a commutative algebra");
    FrobeniusReport rep;
    const size_t n = a.dim();
    const FieldDescriptor& f = a.field();
    // 1. single dual-basis functionals
    for (size_t k = n; k-- > 0;) {
        Vec lam = unit_vec(f, n, k);
        if (frobenius_form_nondegenerate(a, lam)) {
            rep.frobenius = true;
            rep.witness = lam;
            break;
        }
    }
    // 2. socle count: Frobenius iff dim soc = dim A/rad
    Subspace rad = nilradical_commutative(a);
    rep.semisimple_dim = n - rad.dim();
    Subspace soc = Subspace::whole(f, n);
    for (const auto& r : rad.basis()) soc = soc.intersect(Subspace::span(f, n, kernel(a.right_matrix(r))));
    rep.socle_dim = soc.dim();
    if (rep.frobenius) return rep;
    if (soc.dim() != rep.semisimple_dim) {
        rep.socle = soc.basis();
        return rep;
    }
    // 3. moment-curve functionals Σ_k j^k e_k^*; a bounded number must hit
    const long tries = static_cast<long>(n * n + 2);
    for (long j = 1; j <= tries; ++j) {
        Vec lam;
        Scalar x = Scalar(f, j), p = Scalar::one(f);
        for (size_t k = 0; k < n; ++k) {
            lam.push_back(p);
            p *= x;
        }
        if (frobenius_form_nondegenerate(a, lam)) {
            rep.frobenius = true;
            rep.witness = lam;
            return rep;
        }
    }
    throw CertificateFailure("socle count says Frobenius but no nondegenerate functional found");
}

FDAlgebra fdalgebra_of(const AffineAlgebra& A) {
    const FiniteData* fd = A.finite_data();
    if (!fd) throw InfiniteQuotient("quotient is not finite-dimensional");
    const size_t n = fd->basis.size();
    const FieldDescriptor& f = A.field();
    std::vector<std::string> labels;
    for (const auto& e : fd->basis) labels.push_back(Poly::monomial(A.ring(), e, Scalar::one(f)).to_string());
    return FDAlgebra::build(
        f, n,
        [&](size_t i, size_t j) {
            return A.coords(Poly::monomial(A.ring(), mul(fd->basis[i], fd->basis[j]), Scalar::one(f)));
        },
        A.coords(Poly::constant(A.ring(), 1)), labels);
}

FDAlgebra truncated_polynomial(const FieldDescriptor& f, size_t n) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("v^" + std::to_string(i));
    return FDAlgebra::build(
        f, n,
        [&](size_t i, size_t j) {
            Vec v = zero_vec(f, n);
            if (i + j < n) v[i + j] = Scalar::one(f);
            return v;
        },
        unit_vec(f, n, 0), labels);
}

FDAlgebra product_of_fields(const FieldDescriptor& f, size_t copies) {
    Vec one(copies, Scalar::one(f));
    return FDAlgebra::build(
        f, copies,
        [&](size_t i, size_t j) {
            Vec v = zero_vec(f, copies);
            if (i == j) v[i] = Scalar::one(f);
            return v;
        },
        one);
}

FDAlgebra group_algebra_of_table(const FieldDescriptor& f, const std::vector<std::vector<size_t>>& table) {
    const size_t n = table.size();
    size_t id = 0;
    for (size_t i = 0; i < n; ++i) {
        bool is_id = true;
        for (size_t j = 0; j < n; ++j) is_id = is_id && table[i][j] == j;
        if (is_id) id = i;
    }
    return FDAlgebra::build(
        f, n, [&](size_t i, size_t j) { return unit_vec(f, n, table[i][j]); }, unit_vec(f, n, id));
}

}  // namespace hopforbit
