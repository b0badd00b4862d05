#pragma once

#include "hopforbit/linalg.hpp"

namespace hopforbit {

// Dense univariate polynomial over a Scalar field, coefficients low -> high,
// always trimmed (zero polynomial = empty vector).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const FieldDescriptor& f) : f_(f) {}
    UPoly(const FieldDescriptor& f, Vec c);
    static UPoly x(const FieldDescriptor& f);
    static UPoly constant(const Scalar& c);
    static UPoly linear_root(const Scalar& r);  // x − r

    const FieldDescriptor& field() const { return f_; }
    const Vec& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Scalar& lead() const { return c_.back(); }
    Scalar operator[](size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(f_); }

    UPoly monic() const;
    UPoly derivative() const;
    Scalar eval(const Scalar& x) const;
    Matrix eval(const Matrix& m) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    /// quotient and remainder
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    FieldDescriptor f_;
    Vec c_;
};

UPoly gcd(UPoly a, UPoly b);  // monic
UPoly squarefree_part(const UPoly& f);

/// Minimal polynomial of a square matrix (monic).
UPoly minimal_polynomial(const Matrix& m);
/// Minimal polynomial of the vector v under m: smallest monic g with g(m)v = 0.
UPoly krylov_minimal_polynomial(const Matrix& m, const Vec& v);

}  // namespace hopforbit
