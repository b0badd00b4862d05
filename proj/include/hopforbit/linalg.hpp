#pragma once

#include "hopforbit/scalar.hpp"

#include <optional>
#include <vector>

namespace hopforbit {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldDescriptor& f, size_t n);
Vec unit_vec(const FieldDescriptor& f, size_t n, size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x
Scalar dot(const Vec& a, const Vec& b);

// Dense row-major matrix of Scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldDescriptor& f, size_t rows, size_t cols);
    static Matrix identity(const FieldDescriptor& f, size_t n);
    static Matrix from_rows(const FieldDescriptor& f, const std::vector<Vec>& rows, size_t cols);
    static Matrix from_columns(const FieldDescriptor& f, const std::vector<Vec>& cols, size_t rows);

    size_t rows() const noexcept { return r_; }
    size_t cols() const noexcept { return c_; }
    const FieldDescriptor& field() const noexcept { return f_; }

    Scalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    void set_row(size_t i, const Vec& v);
    void set_col(size_t j, const Vec& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Vec apply(const Vec& v) const;  // M v
    Matrix transpose() const;
    Scalar trace() const;
    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldDescriptor f_;
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns pivot columns. The serial and
// OpenMP versions produce identical results (row updates are independent).
std::vector<size_t> rref_serial(Matrix& m);
std::vector<size_t> rref_parallel(Matrix& m);
std::vector<size_t> rref(Matrix& m);

// Global switch used by rref() and the other parallel kernels.
void set_parallel_kernels(bool on);
bool parallel_kernels();
// Threshold on rows*cols below which parallel kernels fall back to serial.
constexpr size_t kParallelMinWork = 256;

size_t rank(Matrix m);
/// Basis of {x : m x = 0} in canonical form (one vector per free column).
std::vector<Vec> kernel(const Matrix& m);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Subspace of F^n with canonical RREF basis.
class Subspace {
public:
    Subspace() = default;
    Subspace(const FieldDescriptor& f, size_t ambient);
    static Subspace span(const FieldDescriptor& f, size_t ambient, const std::vector<Vec>& vs);
    static Subspace whole(const FieldDescriptor& f, size_t ambient);

    size_t dim() const noexcept { return basis_.size(); }
    size_t ambient() const noexcept { return n_; }
    const FieldDescriptor& field() const noexcept { return f_; }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const std::vector<size_t>& pivots() const noexcept { return piv_; }

    /// Remainder of v after eliminating pivot coordinates (zero iff v ∈ this).
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
    /// Adds v; returns true if the dimension grew.
    bool insert(const Vec& v);
    /// Coordinates of v w.r.t. basis() (v must lie in the subspace).
    Vec coordinates(const Vec& v) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// {y : y·x = 0 for all x in this}
    Subspace annihilator() const;
    bool subset_of(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    void canonicalize();
    FieldDescriptor f_;
    size_t n_ = 0;
    std::vector<Vec> basis_;
    std::vector<size_t> piv_;
};

/// {x : M x ∈ W}
Subspace preimage(const Matrix& m, const Subspace& w);
/// M(V)
Subspace image(const Matrix& m, const Subspace& v);

}  // namespace hopforbit
