#include "hopforbit/scalar.hpp"

#include "hopforbit/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace hopforbit {

struct FieldDescriptor::Impl {
    long p = 0;
    long n = 1;
    int deg = 1;
    std::vector<mpq_class> modulus;  // monic, low -> high
    mpz_class pz;
};

namespace {

std::mutex g_registry_mutex;
std::map<std::pair<long, long>, std::unique_ptr<FieldDescriptor::Impl>>& registry() {
    static std::map<std::pair<long, long>, std::unique_ptr<FieldDescriptor::Impl>> r;
    return r;
}

mpz_class mod_p(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DivisionByZero("non-invertible residue");
    return r;
}

// -- dense univariate helpers over the prime field of `f` ------------------
using Coeffs = std::vector<mpq_class>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic m, in place
void rem_monic(const FieldDescriptor& f, Coeffs& a, const Coeffs& m) {
    trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        mpq_class lead = a.back();
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i < dm; ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(lead, m[i]));
        a.pop_back();
        trim(a);
    }
}

// general division remainder (divisor need not be monic)
Coeffs poly_rem(const FieldDescriptor& f, Coeffs a, const Coeffs& b) {
    trim(a);
    const size_t db = b.size() - 1;
    mpq_class inv_lead = f.inv(b.back());
    while (a.size() > db && !a.empty()) {
        mpq_class c = f.mul(a.back(), inv_lead);
        size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        trim(a);
    }
    return a;
}

Coeffs poly_quo(const FieldDescriptor& f, Coeffs a, const Coeffs& b, Coeffs* rem) {
    trim(a);
    const size_t db = b.size() - 1;
    mpq_class inv_lead = f.inv(b.back());
    Coeffs q(a.size() > db ? a.size() - db : 0, mpq_class(0));
    while (a.size() > db && !a.empty()) {
        mpq_class c = f.mul(a.back(), inv_lead);
        size_t shift = a.size() - 1 - db;
        q[shift] = c;
        for (size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        a.pop_back();
        trim(a);
    }
    if (rem) *rem = a;
    return q;
}

Coeffs poly_mul(const FieldDescriptor& f, const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

Coeffs poly_sub(const FieldDescriptor& f, const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    trim(r);
    return r;
}

long order_mod(long p, long n) {
    if (n == 1) return 1;
    long e = 1;
    long x = p % n;
    while (x != 1 % n) {
        x = (x * p) % n;
        ++e;
    }
    return e;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<mpz_class> cyclotomic_polynomial(long n) {
    if (n < 1) throw BadParameters("cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d) continue;
        auto den = cyclotomic_polynomial(d);
        // exact monic division
        std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
        for (long i = static_cast<long>(num.size()) - 1; i >= static_cast<long>(den.size()) - 1; --i) {
            mpz_class c = num[i];
            if (c == 0) continue;
            long shift = i - (static_cast<long>(den.size()) - 1);
            q[shift] = c;
            for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        }
        num = q;
    }
    return num;
}

FieldDescriptor make_field(long characteristic, long cyclotomic_order) {
    if (characteristic < 0 || (characteristic != 0 && !is_prime(characteristic)))
        throw NonPrimeCharacteristic(std::to_string(characteristic));
    if (cyclotomic_order < 1) throw BadParameters("cyclotomic order must be >= 1");
    if (characteristic > 0 && cyclotomic_order % characteristic == 0)
        throw CharacteristicDividesOrder(std::to_string(characteristic) + " | " +
                                         std::to_string(cyclotomic_order));

    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto key = std::make_pair(characteristic, cyclotomic_order);
    auto it = registry().find(key);
    if (it != registry().end()) return FieldDescriptor(it->second.get());

    auto impl = std::make_unique<FieldDescriptor::Impl>();
    impl->p = characteristic;
    impl->n = cyclotomic_order;
    impl->pz = characteristic;
    FieldDescriptor f(impl.get());  // usable for prime-field helpers below

    auto phi = cyclotomic_polynomial(cyclotomic_order);
    if (characteristic == 0) {
        for (auto& c : phi) impl->modulus.emplace_back(c);
    } else {
        Coeffs phip;
        for (auto& c : phi) phip.emplace_back(mod_p(c, impl->pz));
        trim(phip);
        const long d = order_mod(characteristic, cyclotomic_order);
        // exhaustive search for a monic degree-d divisor; all irreducible
        // factors of Phi_n mod p have degree d, so any such divisor works
        std::vector<long> digits(d, 0);
        bool found = false;
        while (!found) {
            Coeffs cand;
            for (long v : digits) cand.emplace_back(v);
            cand.emplace_back(1);
            if (poly_rem(f, phip, cand).empty()) {
                impl->modulus = cand;
                found = true;
                break;
            }
            long i = 0;
            while (i < d && ++digits[i] == characteristic) digits[i++] = 0;
            if (i == d) break;
        }
        if (!found) throw FactorizationFailure("no irreducible factor of cyclotomic polynomial");
    }
    impl->deg = static_cast<int>(impl->modulus.size()) - 1;
    const auto* raw = impl.get();
    registry().emplace(key, std::move(impl));
    return FieldDescriptor(raw);
}

long FieldDescriptor::characteristic() const { return impl_ ? impl_->p : 0; }
long FieldDescriptor::cyclotomic_order() const { return impl_ ? impl_->n : 1; }
int FieldDescriptor::degree() const { return impl_ ? impl_->deg : 1; }
const std::vector<mpq_class>& FieldDescriptor::modulus() const { return impl_->modulus; }

std::string FieldDescriptor::name() const {
    if (!impl_) return "<none>";
    std::string base = impl_->p == 0 ? "Q" : "F" + std::to_string(impl_->p);
    if (impl_->n == 1) return base;
    return base + "(zeta" + std::to_string(impl_->n) + ")";
}

mpq_class FieldDescriptor::reduce(const mpq_class& x) const {
    if (!impl_ || impl_->p == 0) {
        mpq_class c = x;
        c.canonicalize();
        return c;
    }
    if (x.get_den() == 1) return mpq_class(mod_p(x.get_num(), impl_->pz));
    mpz_class den = mod_p(x.get_den(), impl_->pz);
    if (den == 0) throw DivisionByZero("denominator divisible by characteristic");
    return mpq_class(mod_p(mod_p(x.get_num(), impl_->pz) * inv_mod(den, impl_->pz), impl_->pz));
}

mpq_class FieldDescriptor::add(const mpq_class& a, const mpq_class& b) const {
    if (!impl_ || impl_->p == 0) return a + b;
    mpz_class s = a.get_num() + b.get_num();
    if (s >= impl_->pz) s -= impl_->pz;
    return mpq_class(s);
}

mpq_class FieldDescriptor::sub(const mpq_class& a, const mpq_class& b) const {
    if (!impl_ || impl_->p == 0) return a - b;
    mpz_class s = a.get_num() - b.get_num();
    if (s < 0) s += impl_->pz;
    return mpq_class(s);
}

mpq_class FieldDescriptor::mul(const mpq_class& a, const mpq_class& b) const {
    if (!impl_ || impl_->p == 0) return a * b;
    return mpq_class(mod_p(a.get_num() * b.get_num(), impl_->pz));
}

mpq_class FieldDescriptor::inv(const mpq_class& a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (!impl_ || impl_->p == 0) return 1 / a;
    return mpq_class(inv_mod(a.get_num(), impl_->pz));
}

mpq_class FieldDescriptor::neg(const mpq_class& a) const {
    if (!impl_ || impl_->p == 0) return -a;
    if (a == 0) return a;
    return mpq_class(impl_->pz - a.get_num());
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const FieldDescriptor& field, long value) : Scalar(field, mpq_class(value)) {}

Scalar::Scalar(const FieldDescriptor& field, const mpq_class& value) : field_(field) {
    if (!field.valid()) throw DescriptorMismatch("scalar without field");
    coeffs_.assign(field.degree(), mpq_class(0));
    coeffs_[0] = field.reduce(value);
}

Scalar Scalar::zeta(const FieldDescriptor& field) {
    Scalar s(field, 0L);
    if (field.degree() == 1)
        s.coeffs_[0] = field.neg(field.modulus()[0]);
    else
        s.coeffs_[1] = 1;
    return s;
}

Scalar Scalar::from_coeffs(const FieldDescriptor& field, std::vector<mpq_class> coeffs) {
    Scalar s(field, 0L);
    for (auto& c : coeffs) c = field.reduce(c);
    rem_monic(field, coeffs, field.modulus());
    for (size_t i = 0; i < coeffs.size(); ++i) s.coeffs_[i] = coeffs[i];
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Scalar::in_prime_field() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_) throw DescriptorMismatch(field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = field_.neg(c);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (!field_.valid()) return *this = o;
    if (!o.field_.valid()) return *this;
    check_same(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (!field_.valid()) return *this = -o;
    if (!o.field_.valid()) return *this;
    check_same(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    const size_t d = coeffs_.size();
    if (d == 1) {
        coeffs_[0] = field_.mul(coeffs_[0], o.coeffs_[0]);
        return *this;
    }
    Coeffs prod = poly_mul(field_, coeffs_, o.coeffs_);
    rem_monic(field_, prod, field_.modulus());
    for (size_t i = 0; i < d; ++i) coeffs_[i] = i < prod.size() ? prod[i] : mpq_class(0);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    if (coeffs_.size() == 1) {
        Scalar r = *this;
        r.coeffs_[0] = field_.inv(coeffs_[0]);
        return r;
    }
    // extended Euclid: find s with s*a = 1 mod m
    Coeffs r0 = field_.modulus(), r1 = coeffs_;
    trim(r1);
    Coeffs s0, s1{mpq_class(1)};
    while (!(r1.size() == 1)) {
        Coeffs rem;
        Coeffs q = poly_quo(field_, r0, r1, &rem);
        Coeffs s2 = poly_sub(field_, s0, poly_mul(field_, q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw FactorizationFailure("reduction polynomial not irreducible");
    }
    mpq_class c = field_.inv(r1[0]);
    for (auto& x : s1) x = field_.mul(x, c);
    return from_coeffs(field_, s1);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result = one(field_), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.field_.valid() || !b.field_.valid()) return a.is_zero() && b.is_zero();
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const Scalar& a, const Scalar& b) {
    return a.coeffs_ < b.coeffs_;
}

std::string Scalar::to_string() const {
    if (coeffs_.empty()) return "0";
    if (coeffs_.size() == 1) return coeffs_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        mpq_class a = neg ? mpq_class(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "zeta";
        if (i > 1) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

Scalar primitive_root(const FieldDescriptor& field, long m) {
    const long n = field.cyclotomic_order();
    if (m < 1 || n % m != 0)
        throw OrderNotAvailable(std::to_string(m) + " does not divide " + std::to_string(n));
    return Scalar::zeta(field).pow(n / m);
}

long multiplicative_order(const Scalar& s, long limit) {
    if (s.is_zero()) return 0;
    Scalar x = s;
    for (long k = 1; k <= limit; ++k) {
        if (x.is_one()) return k;
        x *= s;
    }
    return 0;
}

std::vector<Scalar> enumerate_field(const FieldDescriptor& field, long limit) {
    const long p = field.characteristic();
    if (p == 0) throw BadParameters("cannot enumerate an infinite field");
    const int d = field.degree();
    long total = 1;
    for (int i = 0; i < d; ++i) {
        total *= p;
        if (total > limit) throw BadParameters("field too large to enumerate");
    }
    std::vector<Scalar> out;
    out.reserve(total);
    std::vector<mpq_class> digits(d, mpq_class(0));
    for (long k = 0; k < total; ++k) {
        long r = k;
        for (int i = 0; i < d; ++i) {
            digits[i] = r % p;
            r /= p;
        }
        out.push_back(Scalar::from_coeffs(field, digits));
    }
    return out;
}

}  // namespace hopforbit
