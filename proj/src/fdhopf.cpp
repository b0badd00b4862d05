#include "hopforbit/fdhopf.hpp"

#include "hopforbit/errors.hpp"
#include "hopforbit/solve.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hopforbit {

struct FDHopf::Cache {
    std::once_flag once;
    AxiomReport report;
};

FDHopf::FDHopf(FDAlgebra alg, std::vector<SparseVec> comult, Vec counit, Matrix antipode,
               std::optional<int> coradical_length, std::string name)
    : alg_(std::move(alg)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      corad_(coradical_length),
      name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
    const size_t n = alg_.dim();
    if (comult_.size() != n || counit_.size() != n || antipode_.rows() != n || antipode_.cols() != n)
        throw SchemaError("Hopf structure tensors have inconsistent sizes");
}

namespace {

Tensor2 tensor_product_mul(const FDAlgebra& a, const Tensor2& x, const Tensor2& y) {
    const size_t n = a.dim();
    Tensor2 out = zero_vec(a.field(), n * n);
    SparseVec sx = sparsify(x), sy = sparsify(y);
    for (const auto& [p, c] : sx) {
        size_t i = p / n, j = p % n;
        for (const auto& [q, d] : sy) {
            size_t k = q / n, l = q % n;
            Scalar cd = c * d;
            for (const auto& [u, e1] : a.product(i, k))
                for (const auto& [v, e2] : a.product(j, l)) out[u * n + v] += cd * e1 * e2;
        }
    }
    return out;
}

Tensor2 dense_comult(const FDHopf& h, size_t i) {
    return densify(h.field(), h.dim() * h.dim(), h.comult(i));
}

}  // namespace

Tensor2 FDHopf::comultiply(const Vec& x) const {
    const size_t n = dim();
    Tensor2 out = zero_vec(field(), n * n);
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [k, c] : comult_[i]) out[k] += x[i] * c;
    }
    return out;
}

Tensor2 FDHopf::tensor_mul(const Tensor2& a, const Tensor2& b) const { return tensor_product_mul(alg_, a, b); }

bool FDHopf::cocommutative() const {
    const size_t n = dim();
    for (size_t i = 0; i < n; ++i) {
        Tensor2 d = dense_comult(*this, i);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                if (d[j * n + k] != d[k * n + j]) return false;
    }
    return true;
}

const AxiomReport& FDHopf::verify() const {
    std::call_once(cache_->once, [this] { cache_->report = verify_hopf_axioms(*this); });
    return cache_->report;
}

void FDHopf::require_verified() const {
    const AxiomReport& r = verify();
    if (!r.pass) throw AxiomsNotVerified(name_ + " fails " + r.axiom);
}

namespace {

// Per-basis-element checks that do not involve pairs.
std::string single_failure(const FDHopf& h, size_t i) {
    const size_t n = h.dim();
    const FieldDescriptor& f = h.field();
    const Vec ei = h.alg().basis(i);
    const SparseVec& d = h.comult(i);
    // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ, as maps to n³ coefficients
    std::map<size_t, Scalar> lhs, rhs;
    for (const auto& [p, c] : d) {
        size_t j = p / n, k = p % n;
        for (const auto& [q, e] : h.comult(j)) lhs[q * n + k] += c * e;
        for (const auto& [q, e] : h.comult(k)) rhs[j * n * n + q] += c * e;
    }
    auto clean = [](std::map<size_t, Scalar>& m) {
        for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
    };
    clean(lhs);
    clean(rhs);
    if (lhs != rhs) return "coassociativity";
    // counit laws
    Vec l = zero_vec(f, n), r = zero_vec(f, n);
    for (const auto& [p, c] : d) {
        size_t j = p / n, k = p % n;
        l[k] += h.counit()[j] * c;
        r[j] += c * h.counit()[k];
    }
    if (l != ei || r != ei) return "counit";
    // antipode: Σ S(h1) h2 = ε(h) 1 = Σ h1 S(h2)
    Vec s1 = zero_vec(f, n), s2 = zero_vec(f, n);
    for (const auto& [p, c] : d) {
        size_t j = p / n, k = p % n;
        axpy(s1, c, h.alg().mul(h.antipode().col(j), h.alg().basis(k)));
        axpy(s2, c, h.alg().mul(h.alg().basis(j), h.antipode().col(k)));
    }
    Vec target = scale(h.counit()[i], h.alg().unit());
    if (s1 != target || s2 != target) return "antipode";
    return "";
}

std::string pair_failure(const FDHopf& h, size_t i, size_t j, const std::vector<Tensor2>& dd) {
    Vec prod = h.alg().basis_product(i, j);
    if (h.epsilon(prod) != h.counit()[i] * h.counit()[j]) return "counit multiplicative";
    if (h.comultiply(prod) != h.tensor_mul(dd[i], dd[j])) return "comultiplication multiplicative";
    return "";
}

}  // namespace

AxiomReport verify_hopf_axioms(const FDHopf& h) {
    AxiomReport rep;
    const size_t n = h.dim();
    const FieldDescriptor& f = h.field();
    if (auto bad = associativity_failure(h.alg())) {
        rep.pass = false;
        rep.axiom = "associativity";
        rep.witness = {(*bad)[0], (*bad)[1], (*bad)[2]};
        return rep;
    }
    if (!unit_is_identity(h.alg())) {
        rep.pass = false;
        rep.axiom = "unit";
        return rep;
    }
    // unit is grouplike
    Tensor2 one_one = zero_vec(f, n * n);
    const Vec& u = h.alg().unit();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) one_one[a * n + b] = u[a] * u[b];
    if (h.comultiply(u) != one_one || !h.epsilon(u).is_one()) {
        rep.pass = false;
        rep.axiom = "unit grouplike";
        return rep;
    }
    std::vector<std::string> single(n);
    const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel_kernels())
    for (long i = 0; i < ln; ++i) single[i] = single_failure(h, static_cast<size_t>(i));
    for (size_t i = 0; i < n; ++i)
        if (!single[i].empty()) {
            rep.pass = false;
            rep.axiom = single[i];
            rep.witness = {i};
            return rep;
        }
    std::vector<Tensor2> dd;
    for (size_t i = 0; i < n; ++i) dd.push_back(dense_comult(h, i));
    std::vector<std::string> pair(n * n);
    const long ln2 = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic) if (parallel_kernels())
    for (long p = 0; p < ln2; ++p) pair[p] = pair_failure(h, p / n, p % n, dd);
    for (size_t p = 0; p < n * n; ++p)
        if (!pair[p].empty()) {
            rep.pass = false;
            rep.axiom = pair[p];
            rep.witness = {p / n, p % n};
            return rep;
        }
    return rep;
}

// ----------------------------------------------------------------- builders

size_t check_group_table(const std::vector<std::vector<size_t>>& t) {
    const size_t n = t.size();
    if (n == 0) throw NotAGroup("empty table");
    for (const auto& row : t) {
        if (row.size() != n) throw NotAGroup("table is not square");
        for (size_t x : row)
            if (x >= n) throw NotAGroup("entry out of range");
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    throw NotAGroup("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")");
    size_t id = n;
    for (size_t e = 0; e < n && id == n; ++e) {
        bool ok = true;
        for (size_t a = 0; a < n && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
        if (ok) id = e;
    }
    if (id == n) throw NotAGroup("no identity");
    for (size_t a = 0; a < n; ++a) {
        bool has = false;
        for (size_t b = 0; b < n && !has; ++b) has = t[a][b] == id && t[b][a] == id;
        if (!has) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
    }
    return id;
}

std::vector<std::vector<size_t>> cyclic_group_table(size_t n) {
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<size_t>> symmetric_group_table(size_t n) {
    std::vector<std::vector<size_t>> perms;
    std::vector<size_t> p(n);
    for (size_t i = 0; i < n; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const size_t m = perms.size();
    std::map<std::vector<size_t>, size_t> index;
    for (size_t i = 0; i < m; ++i) index[perms[i]] = i;
    std::vector<std::vector<size_t>> t(m, std::vector<size_t>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            std::vector<size_t> c(n);
            for (size_t k = 0; k < n; ++k) c[k] = perms[i][perms[j][k]];  // i ∘ j
            t[i][j] = index[c];
        }
    return t;
}

FDHopf group_algebra(const FieldDescriptor& f, const std::vector<std::vector<size_t>>& table,
                     const std::string& name) {
    const size_t id = check_group_table(table);
    const size_t n = table.size();
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    FDAlgebra a = FDAlgebra::build(
        f, n, [&](size_t i, size_t j) { return unit_vec(f, n, table[i][j]); }, unit_vec(f, n, id), labels);
    std::vector<SparseVec> d(n);
    Matrix s(f, n, n);
    for (size_t i = 0; i < n; ++i) {
        d[i] = {{i * n + i, Scalar::one(f)}};
        for (size_t j = 0; j < n; ++j)
            if (table[i][j] == id) s(j, i) = Scalar::one(f);
    }
    return FDHopf(a, d, Vec(n, Scalar::one(f)), s, 0, name.empty() ? "kG" : name);
}

FDHopf taft_fd(size_t n, const Scalar& q) {
    if (n < 2) throw WrongOrder("Taft algebra needs n >= 2");
    const FieldDescriptor& f = q.field();
    if (multiplicative_order(q, static_cast<long>(n)) != static_cast<long>(n))
        throw WrongOrder("q = " + q.to_string() + " is not a primitive " + std::to_string(n) + "-th root of unity");
    const size_t N = n * n;
    auto idx = [n](size_t i, size_t j) { return (i % n) * n + j; };
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) labels.push_back("g^" + std::to_string(i) + "*x^" + std::to_string(j));
    // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}
    FDAlgebra a = FDAlgebra::build(
        f, N,
        [&](size_t p, size_t r) {
            size_t i = p / n, j = p % n, k = r / n, l = r % n;
            Vec v = zero_vec(f, N);
            if (j + l < n) v[idx(i + k, j + l)] = q.pow(static_cast<long>(j * k));
            return v;
        },
        unit_vec(f, N, 0), labels);
    const Vec g = unit_vec(f, N, idx(1, 0)), x = unit_vec(f, N, idx(0, 1)), one = unit_vec(f, N, 0);
    auto tens = [&](const Vec& u, const Vec& v) {
        Tensor2 t = zero_vec(f, N * N);
        for (size_t s = 0; s < N; ++s)
            for (size_t r = 0; r < N; ++r)
                if (!u[s].is_zero() && !v[r].is_zero()) t[s * N + r] = u[s] * v[r];
        return t;
    };
    const Tensor2 dg = tens(g, g), dx = add(tens(x, one), tens(g, x));
    // S(g) = g^{n-1}, S(x) = −g^{n-1} x
    const Vec sg = unit_vec(f, N, idx(n - 1, 0)), sx = scale(Scalar(f, -1L), unit_vec(f, N, idx(n - 1, 1)));
    std::vector<SparseVec> d(N);
    Matrix s(f, N, N);
    Vec eps(N, Scalar::zero(f));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Tensor2 t = tens(one, one);
            Vec sv = one;
            for (size_t k = 0; k < i; ++k) {
                t = tensor_product_mul(a, t, dg);
                sv = a.mul(sg, sv);  // S is an anti-homomorphism
            }
            Vec sxj = one;
            for (size_t k = 0; k < j; ++k) {
                t = tensor_product_mul(a, t, dx);
                sxj = a.mul(sxj, sx);
            }
            d[idx(i, j)] = sparsify(t);
            s.set_col(idx(i, j), a.mul(sxj, sv));
            if (j == 0) eps[idx(i, 0)] = Scalar::one(f);
        }
    return FDHopf(a, d, eps, s, static_cast<int>(n - 1), "Taft(" + std::to_string(n) + ")");
}

FDHopf dual(const FDHopf& h) {
    const size_t n = h.dim();
    const FieldDescriptor& f = h.field();
    // e^i e^j = Σ_k Δ-coefficient of e_i⊗e_j in Δ(e_k) · e^k
    std::vector<SparseVec> mult(n * n);
    for (size_t k = 0; k < n; ++k)
        for (const auto& [p, c] : h.comult(k)) mult[p].emplace_back(k, c);
    for (auto& m : mult) std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // Δ(e^k) = Σ c_ij^k e^i⊗e^j
    std::vector<SparseVec> d(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : h.alg().product(i, j)) d[k].emplace_back(i * n + j, c);
    for (auto& m : d) std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> labels;
    for (const auto& l : h.alg().labels()) labels.push_back(l + "*");
    FDAlgebra a(f, n, std::move(mult), h.counit(), labels);
    return FDHopf(a, d, h.alg().unit(), h.antipode().transpose(), std::nullopt, "dual(" + h.name() + ")");
}

namespace {
Matrix antipode_inverse(const FDHopf& h) {
    auto inv = inverse(h.antipode());
    if (!inv) throw DomainError("antipode is not invertible");
    return *inv;
}
}  // namespace

FDHopf opposite(const FDHopf& h) {
    const size_t n = h.dim();
    std::vector<SparseVec> mult(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) mult[i * n + j] = h.alg().product(j, i);
    FDAlgebra a(h.field(), n, std::move(mult), h.alg().unit(), h.alg().labels());
    std::vector<SparseVec> d;
    for (size_t i = 0; i < n; ++i) d.push_back(h.comult(i));
    return FDHopf(a, d, h.counit(), antipode_inverse(h), h.coradical_length(), "op(" + h.name() + ")");
}

FDHopf co_opposite(const FDHopf& h) {
    const size_t n = h.dim();
    std::vector<SparseVec> d(n);
    for (size_t i = 0; i < n; ++i) {
        for (const auto& [p, c] : h.comult(i)) d[i].emplace_back((p % n) * n + p / n, c);
        std::sort(d[i].begin(), d[i].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return FDHopf(h.alg(), d, h.counit(), antipode_inverse(h), h.coradical_length(), "cop(" + h.name() + ")");
}

FDHopf with_antipode(const FDHopf& h, const Matrix& s) {
    std::vector<SparseVec> d;
    for (size_t i = 0; i < h.dim(); ++i) d.push_back(h.comult(i));
    return FDHopf(h.alg(), d, h.counit(), s, h.coradical_length(), h.name() + "[S replaced]");
}

// ---------------------------------------------------------------- integrals

namespace {

// {t : (x·t or t·x) = ε(x) t for all basis x}, by successive kernel intersection
Vec integral(const FDHopf& h, bool left) {
    const size_t n = h.dim();
    const FieldDescriptor& f = h.field();
    Subspace sol = Subspace::whole(f, n);
    for (size_t i = 0; i < n && sol.dim() > 0; ++i) {
        std::vector<Vec> cols;
        for (const auto& b : sol.basis()) {
            Vec xb = left ? h.alg().mul(h.alg().basis(i), b) : h.alg().mul(b, h.alg().basis(i));
            cols.push_back(sub(xb, scale(h.counit()[i], b)));
        }
        auto ker = kernel(Matrix::from_columns(f, cols, n));
        std::vector<Vec> next;
        for (const auto& c : ker) {
            Vec v = zero_vec(f, n);
            for (size_t k = 0; k < c.size(); ++k) axpy(v, c[k], sol.basis()[k]);
            next.push_back(v);
        }
        sol = Subspace::span(f, n, next);
    }
    if (sol.dim() != 1) throw CertificateFailure("integral space has dimension " + std::to_string(sol.dim()));
    // normalize: last nonzero coordinate 1 (e.g. Σ g for a group algebra)
    Vec t = sol.basis()[0];
    for (size_t k = n; k-- > 0;)
        if (!t[k].is_zero()) return scale(t[k].inverse(), t);
    return t;
}

}  // namespace

Vec left_integral(const FDHopf& h) {
    h.require_verified();
    return integral(h, true);
}

Vec right_integral(const FDHopf& h) {
    h.require_verified();
    return integral(h, false);
}

IntegralReport integrals_and_semisimplicity(const FDHopf& h) {
    IntegralReport r;
    r.left_integral = left_integral(h);
    r.right_integral = right_integral(h);
    r.semisimple = !h.epsilon(r.left_integral).is_zero();
    FDHopf hd = dual(h);
    r.cosemisimple = !hd.epsilon(integral(hd, true)).is_zero();
    return r;
}

Matrix antipode_squared(const FDHopf& h) { return h.antipode() * h.antipode(); }

// ---------------------------------------------------------------- grouplikes

std::vector<Vec> grouplikes(const FDHopf& h) {
    h.require_verified();
    const size_t n = h.dim();
    const FieldDescriptor& f = h.field();
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    PolyRing R(f, names);
    std::vector<Poly> eqs;
    Poly eps(R);
    for (size_t i = 0; i < n; ++i) eps += Poly::var(R, i).scaled(h.counit()[i]);
    eqs.push_back(eps - Poly::constant(R, 1));
    // Σ_i c_i Δ(e_i)_{jk} = c_j c_k
    std::vector<Poly> lin(n * n, Poly(R));
    for (size_t i = 0; i < n; ++i)
        for (const auto& [p, c] : h.comult(i)) lin[p] += Poly::var(R, i).scaled(c);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            Poly e = lin[j * n + k] - Poly::var(R, j) * Poly::var(R, k);
            if (!e.is_zero()) eqs.push_back(e);
        }
    SolveReport rep = solve_zero_dim_partial(Ideal(R, eqs));
    if (rep.unresolved_degree > 0) throw NonRationalGrouplike(rep.unresolved_degree);
    std::vector<Vec> out;
    for (const auto& p : rep.points) out.push_back(p.user_coords());
    return out;
}

}  // namespace hopforbit
