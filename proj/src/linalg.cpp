#include <algorithm>
#include "hopforbit/linalg.hpp"

#include "hopforbit/errors.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopforbit {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel_kernels(bool on) { g_parallel = on; }
bool parallel_kernels() { return g_parallel; }

Vec zero_vec(const FieldDescriptor& f, size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const FieldDescriptor& f, size_t n, size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (a.is_zero()) return;
    for (size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    if (!s.field().valid() && !a.empty()) return Scalar::zero(a[0].field());
    return s;
}

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(const FieldDescriptor& f, size_t rows, size_t cols)
    : f_(f), r_(rows), c_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldDescriptor& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& f, const std::vector<Vec>& rows, size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Matrix Matrix::from_columns(const FieldDescriptor& f, const std::vector<Vec>& cols, size_t rows) {
    Matrix m(f, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Vec Matrix::row(size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(size_t j) const {
    Vec v;
    v.reserve(r_);
    for (size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
}

void Matrix::set_row(size_t i, const Vec& v) {
    for (size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(size_t j, const Vec& v) {
    for (size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw BadParameters("matrix shape mismatch");
    Matrix m(f_, r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.c_; ++j)
                if (!o(k, j).is_zero()) m(i, j) += x * o(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    Vec out = zero_vec(f_, r_);
    for (size_t j = 0; j < c_; ++j) {
        if (v[j].is_zero()) continue;
        for (size_t i = 0; i < r_; ++i)
            if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix m(f_, c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Scalar Matrix::trace() const {
    Scalar s = Scalar::zero(f_);
    for (size_t i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j)
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
}

// -------------------------------------------------------------------- RREF

namespace {

// Shared driver; `eliminate` clears column `col` in all rows except `prow`.
template <class Eliminate>
std::vector<size_t> rref_impl(Matrix& m, Eliminate&& eliminate) {
    std::vector<size_t> pivots;
    size_t prow = 0;
    for (size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
        size_t sel = m.rows();
        for (size_t i = prow; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != prow)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(prow, j));
        Scalar inv = m(prow, col).inverse();
        for (size_t j = col; j < m.cols(); ++j)
            if (!m(prow, j).is_zero()) m(prow, j) *= inv;
        eliminate(m, prow, col);
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

void eliminate_row(Matrix& m, size_t i, size_t prow, size_t col) {
    if (i == prow || m(i, col).is_zero()) return;
    Scalar factor = m(i, col);
    for (size_t j = col; j < m.cols(); ++j)
        if (!m(prow, j).is_zero()) m(i, j) -= factor * m(prow, j);
}

}  // namespace

std::vector<size_t> rref_serial(Matrix& m) {
    return rref_impl(m, [](Matrix& a, size_t prow, size_t col) {
        for (size_t i = 0; i < a.rows(); ++i) eliminate_row(a, i, prow, col);
    });
}

std::vector<size_t> rref_parallel(Matrix& m) {
    return rref_impl(m, [](Matrix& a, size_t prow, size_t col) {
        const long rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 4) if (a.rows() * a.cols() >= kParallelMinWork)
        for (long i = 0; i < rows; ++i) eliminate_row(a, static_cast<size_t>(i), prow, col);
    });
}

std::vector<size_t> rref(Matrix& m) {
    return parallel_kernels() ? rref_parallel(m) : rref_serial(m);
}

size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vec> kernel(const Matrix& m) {
    Matrix r = m;
    auto piv = rref(r);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec> out;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        Vec v = unit_vec(m.field(), m.cols(), free);
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    Vec x = zero_vec(a.field(), a.cols());
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, a.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    const size_t n = m.rows();
    if (m.cols() != n) return std::nullopt;
    Matrix aug(m.field(), n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(const FieldDescriptor& f, size_t ambient) : f_(f), n_(ambient) {}

Subspace Subspace::span(const FieldDescriptor& f, size_t ambient, const std::vector<Vec>& vs) {
    Subspace s(f, ambient);
    s.basis_ = vs;
    s.canonicalize();
    return s;
}

Subspace Subspace::whole(const FieldDescriptor& f, size_t ambient) {
    Subspace s(f, ambient);
    for (size_t i = 0; i < ambient; ++i) s.basis_.push_back(unit_vec(f, ambient, i));
    for (size_t i = 0; i < ambient; ++i) s.piv_.push_back(i);
    return s;
}

void Subspace::canonicalize() {
    if (basis_.empty()) {
        piv_.clear();
        return;
    }
    Matrix m = Matrix::from_rows(f_, basis_, n_);
    piv_ = rref(m);
    basis_.clear();
    for (size_t k = 0; k < piv_.size(); ++k) basis_.push_back(m.row(k));
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (size_t k = 0; k < basis_.size(); ++k) {
        if (r[piv_[k]].is_zero()) continue;
        Scalar c = -r[piv_[k]];
        axpy(r, c, basis_[k]);
    }
    return r;
}

bool Subspace::insert(const Vec& v) {
    Vec r = reduce(v);
    size_t p = 0;
    while (p < r.size() && r[p].is_zero()) ++p;
    if (p == r.size()) return false;
    // keep the basis in reduced echelon form without a full re-elimination
    if (!r[p].is_one()) r = scale(r[p].inverse(), r);
    for (auto& b : basis_)
        if (!b[p].is_zero()) {
            Scalar c = -b[p];
            axpy(b, c, r);
        }
    size_t at = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    basis_.insert(basis_.begin() + at, std::move(r));
    piv_.insert(piv_.begin() + at, p);
    return true;
}

Vec Subspace::coordinates(const Vec& v) const {
    Vec c;
    c.reserve(basis_.size());
    for (size_t k = 0; k < basis_.size(); ++k) c.push_back(v[piv_[k]]);
    return c;
}

Subspace Subspace::sum(const Subspace& o) const {
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(f_, n_, all);
}

Subspace Subspace::annihilator() const {
    if (basis_.empty()) return whole(f_, n_);
    Matrix m = Matrix::from_rows(f_, basis_, n_);
    return span(f_, n_, kernel(m));
}

Subspace Subspace::intersect(const Subspace& o) const {
    // (U ∩ W)^⊥ = U^⊥ + W^⊥
    return annihilator().sum(o.annihilator()).annihilator();
}

bool Subspace::subset_of(const Subspace& o) const {
    for (const auto& b : basis_)
        if (!o.contains(b)) return false;
    return true;
}

Subspace preimage(const Matrix& m, const Subspace& w) {
    Subspace ann = w.annihilator();
    if (ann.dim() == 0) return Subspace::whole(m.field(), m.cols());
    Matrix a = Matrix::from_rows(m.field(), ann.basis(), m.rows()) * m;
    return Subspace::span(m.field(), m.cols(), kernel(a));
}

Subspace image(const Matrix& m, const Subspace& v) {
    std::vector<Vec> out;
    for (const auto& b : v.basis()) out.push_back(m.apply(b));
    return Subspace::span(m.field(), m.rows(), out);
}

}  // namespace hopforbit
