#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hopforbit {

/// Exact coefficient field: the prime field (ℚ or 𝔽_p) extended by a
/// primitive root of unity of order `cyclotomic_order`, realised as the
/// prime field modulo one irreducible factor of the cyclotomic polynomial.
///
/// Descriptors are interned: two descriptors built from the same
/// (characteristic, order) pair compare equal and share storage, so copying
/// one is a pointer copy.
class FieldDescriptor {
public:
    struct Impl;

    FieldDescriptor() = default;

    long characteristic() const;
    long cyclotomic_order() const;
    int degree() const;
    /// Monic reduction polynomial, coefficients low to high (size degree()+1).
    const std::vector<mpq_class>& modulus() const;
    std::string name() const;
    bool valid() const noexcept { return impl_ != nullptr; }

    // Prime-field helpers. In characteristic p every coefficient is kept as
    // the canonical integer representative in [0, p).
    mpq_class reduce(const mpq_class& x) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class inv(const mpq_class& a) const;
    mpq_class neg(const mpq_class& a) const;

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) noexcept {
        return a.impl_ == b.impl_;
    }
    friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) noexcept {
        return a.impl_ != b.impl_;
    }

private:
    explicit FieldDescriptor(const Impl* impl) : impl_(impl) {}
    friend FieldDescriptor make_field(long characteristic, long cyclotomic_order);
    const Impl* impl_ = nullptr;
};

/// Throws NonPrimeCharacteristic or CharacteristicDividesOrder.
FieldDescriptor make_field(long characteristic, long cyclotomic_order);

/// n-th cyclotomic polynomial over ℤ, coefficients low to high.
std::vector<mpz_class> cyclotomic_polynomial(long n);

bool is_prime(long n);

class Scalar {
public:
    Scalar() = default;
    Scalar(const FieldDescriptor& field, long value);
    Scalar(const FieldDescriptor& field, const mpq_class& value);
    static Scalar zero(const FieldDescriptor& field) { return Scalar(field, 0L); }
    static Scalar one(const FieldDescriptor& field) { return Scalar(field, 1L); }
    /// The chosen generator ζ (a primitive root of order cyclotomic_order).
    static Scalar zeta(const FieldDescriptor& field);
    /// Coefficients w.r.t. 1, ζ, ζ², ...; reduced on construction.
    static Scalar from_coeffs(const FieldDescriptor& field, std::vector<mpq_class> coeffs);

    const FieldDescriptor& field() const noexcept { return field_; }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in the prime field.
    bool in_prime_field() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    /// Total order on coefficient vectors, used only for canonical output.
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;
    FieldDescriptor field_;
    std::vector<mpq_class> coeffs_;
};

/// Element of multiplicative order exactly m; throws OrderNotAvailable
/// unless m divides the cyclotomic order.
Scalar primitive_root(const FieldDescriptor& field, long m);

/// Multiplicative order of a nonzero scalar if it divides the cyclotomic
/// order times the prime-field unit group bound; 0 if not a root of unity
/// of order at most `limit`.
long multiplicative_order(const Scalar& s, long limit);

/// All elements of a finite field (characteristic p > 0), in a fixed order.
std::vector<Scalar> enumerate_field(const FieldDescriptor& field, long limit = 1000000);

}  // namespace hopforbit
