#pragma once

#include <stdexcept>
#include <string>

namespace hopforbit {

// Error categories map onto CLI exit codes: precondition and schema
// violations (2), mathematical outcomes the caller may escalate (3), and
// failed certificates for properties that must always hold (4).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class MathError : public Error {
public:
    using Error::Error;
};

class CertificateFailure : public Error {
public:
    using Error::Error;
};

#define HOPFORBIT_DOMAIN_ERROR(Name)                                        \
    class Name : public DomainError {                                       \
    public:                                                                 \
        explicit Name(const std::string& what) : DomainError(#Name ": " + what) {} \
    };

HOPFORBIT_DOMAIN_ERROR(NonPrimeCharacteristic)
HOPFORBIT_DOMAIN_ERROR(CharacteristicDividesOrder)
HOPFORBIT_DOMAIN_ERROR(DescriptorMismatch)
HOPFORBIT_DOMAIN_ERROR(DivisionByZero)
HOPFORBIT_DOMAIN_ERROR(OrderNotAvailable)
HOPFORBIT_DOMAIN_ERROR(RingMismatch)
HOPFORBIT_DOMAIN_ERROR(NotAGroup)
HOPFORBIT_DOMAIN_ERROR(WrongOrder)
HOPFORBIT_DOMAIN_ERROR(AxiomsNotVerified)
HOPFORBIT_DOMAIN_ERROR(BadParameters)
HOPFORBIT_DOMAIN_ERROR(PresentationMismatch)
HOPFORBIT_DOMAIN_ERROR(BadCharacteristic)
HOPFORBIT_DOMAIN_ERROR(NotAbelianByFinite)
HOPFORBIT_DOMAIN_ERROR(InfiniteQuotient)

#undef HOPFORBIT_DOMAIN_ERROR

// A maximal ideal whose residue field is a proper extension of the
// coefficient field. `degree` is the degree of the unresolved factor.
class NonRationalPoint : public MathError {
public:
    explicit NonRationalPoint(int degree)
        : MathError("NonRationalPoint: unresolved residue degree " + std::to_string(degree)),
          degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

class DegreeBoundExhausted : public MathError {
public:
    explicit DegreeBoundExhausted(int bound)
        : MathError("DegreeBoundExhausted: no finite stable quotient up to degree " +
                    std::to_string(bound)),
          bound_(bound) {}
    int bound() const noexcept { return bound_; }

private:
    int bound_;
};

class NonSplitBlock : public MathError {
public:
    explicit NonSplitBlock(int center_degree)
        : MathError("NonSplitBlock: center degree " + std::to_string(center_degree)),
          center_degree_(center_degree) {}
    int center_degree() const noexcept { return center_degree_; }

private:
    int center_degree_;
};

class SmallCharacteristic : public MathError {
public:
    SmallCharacteristic(long p, int dim)
        : MathError("SmallCharacteristic: p = " + std::to_string(p) + " <= dim = " +
                    std::to_string(dim)) {}
};

class NonRationalGrouplike : public MathError {
public:
    explicit NonRationalGrouplike(int degree)
        : MathError("NonRationalGrouplike: residue degree " + std::to_string(degree)) {}
};

class FactorizationFailure : public CertificateFailure {
public:
    explicit FactorizationFailure(const std::string& what)
        : CertificateFailure("FactorizationFailure: " + what) {}
};

class NotStable : public DomainError {
public:
    NotStable(const std::string& side, const std::string& witness)
        : DomainError("NotStable(" + side + "): " + witness) {}
};

}  // namespace hopforbit
