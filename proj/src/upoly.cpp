#include "hopforbit/upoly.hpp"

#include "hopforbit/errors.hpp"

#include <sstream>

namespace hopforbit {

UPoly::UPoly(const FieldDescriptor& f, Vec c) : f_(f), c_(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::x(const FieldDescriptor& f) { return UPoly(f, {Scalar::zero(f), Scalar::one(f)}); }
UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }
UPoly UPoly::linear_root(const Scalar& r) { return UPoly(r.field(), {-r, Scalar::one(r.field())}); }

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return UPoly(f_, scale(lead().inverse(), c_));
}

UPoly UPoly::derivative() const {
    Vec d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(f_, static_cast<long>(i)));
    return UPoly(f_, d);
}

Scalar UPoly::eval(const Scalar& x) const {
    Scalar r = Scalar::zero(f_);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Matrix UPoly::eval(const Matrix& m) const {
    Matrix r(f_, m.rows(), m.cols());
    for (size_t i = c_.size(); i-- > 0;) r = r * m + Matrix::identity(f_, m.rows()).scaled(c_[i]);
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    const FieldDescriptor& f = a.f_.valid() ? a.f_ : b.f_;
    Vec r = zero_vec(f, std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(f, r);
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    const FieldDescriptor& f = a.f_.valid() ? a.f_ : b.f_;
    Vec r = zero_vec(f, std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UPoly(f, r);
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.f_.valid() ? a.f_ : b.f_);
    Vec r = zero_vec(a.f_, a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(a.f_, r);
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Vec rem = c_;
    const int dd = d.degree();
    Vec q = zero_vec(f_, c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
    Scalar inv = d.lead().inverse();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        if (rem[k].is_zero()) continue;
        Scalar c = rem[k] * inv;
        q[k - dd] = c;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= c * d.c_[i];
    }
    return {UPoly(f_, q), UPoly(f_, rem)};
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string c = c_[i].to_string();
        if (!c_[i].in_prime_field()) c = "(" + c + ")";
        if (i == 0)
            os << c;
        else {
            if (!c_[i].is_one()) os << c << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& f) {
    if (f.degree() <= 0) return f.monic();
    UPoly d = f.derivative();
    if (d.is_zero()) return f.monic();  // inseparable in char p; callers enumerate roots
    UPoly g = gcd(f, d);
    return f.divmod(g).first.monic();
}

UPoly krylov_minimal_polynomial(const Matrix& m, const Vec& v) {
    const FieldDescriptor& f = m.field();
    std::vector<Vec> chain;
    Subspace span(f, m.rows());
    Vec w = v;
    while (span.insert(w)) {
        chain.push_back(w);
        w = m.apply(w);
    }
    // w depends on chain: solve chain * c = w
    Matrix a = Matrix::from_columns(f, chain, m.rows());
    auto c = solve(a, w);
    if (!c) throw CertificateFailure("Krylov dependency not solvable");
    Vec coeffs;
    for (const auto& x : *c) coeffs.push_back(-x);
    coeffs.push_back(Scalar::one(f));
    return UPoly(f, coeffs);
}

UPoly minimal_polynomial(const Matrix& m) {
    const FieldDescriptor& f = m.field();
    UPoly g = UPoly::constant(Scalar::one(f));
    Matrix gm = Matrix::identity(f, m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        Vec w = gm.apply(unit_vec(f, m.rows(), i));
        if (is_zero_vec(w)) continue;
        UPoly h = krylov_minimal_polynomial(m, w);
        g = g * h;
        gm = g.eval(m);
    }
    return g;
}

}  // namespace hopforbit
