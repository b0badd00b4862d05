#pragma once

#include "hopforbit/linalg.hpp"
#include "hopforbit/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopforbit {

using Exp = std::vector<int>;

int total_degree(const Exp& e);
bool divides(const Exp& a, const Exp& b);  // a | b
Exp lcm(const Exp& a, const Exp& b);
Exp mul(const Exp& a, const Exp& b);
Exp quo(const Exp& b, const Exp& a);  // b / a, requires a | b
bool coprime(const Exp& a, const Exp& b);

/// Polynomial ring over a FieldDescriptor.
///
/// Variable layout: the user variables in the given order, then one hidden
/// partner per Laurent variable (x̂ standing for x⁻¹), then any extra
/// variables added for elimination. Every Ideal formed in the ring contains
/// the relations x·x̂ − 1.
///
/// Order: degrevlex, optionally preceded by the weight "total degree in the
/// eliminated variables", which makes it an elimination order for them.
class PolyRing {
public:
    PolyRing() = default;
    PolyRing(const FieldDescriptor& f, const std::vector<std::string>& names,
             const std::vector<bool>& laurent = {});

    /// Same ring plus `extra` trailing variables that the order eliminates.
    PolyRing with_eliminated(const std::vector<std::string>& extra) const;
    /// The ring without elimination variables (they must be trailing).
    PolyRing base() const;

    const FieldDescriptor& field() const { return d_->f; }
    size_t nvars() const { return d_->names.size(); }
    size_t nuser() const { return d_->nuser; }
    const std::string& name(size_t i) const { return d_->names[i]; }
    const std::vector<std::string>& user_names() const { return d_->user_names; }
    std::optional<size_t> index(const std::string& name) const;
    bool is_laurent(size_t i) const { return d_->partner[i] >= 0 && !d_->is_partner[i]; }
    bool is_partner(size_t i) const { return d_->is_partner[i]; }
    int partner(size_t i) const { return d_->partner[i]; }
    bool is_eliminated(size_t i) const { return d_->elim[i]; }
    bool has_elimination() const { return d_->nelim > 0; }
    std::vector<bool> laurent_flags() const;

    /// >0 if a > b, 0 if equal, <0 if a < b.
    int compare(const Exp& a, const Exp& b) const;

    bool valid() const { return d_ != nullptr; }
    friend bool operator==(const PolyRing& a, const PolyRing& b);
    friend bool operator!=(const PolyRing& a, const PolyRing& b) { return !(a == b); }

    std::string describe() const;

private:
    struct Data {
        FieldDescriptor f;
        std::vector<std::string> names;
        std::vector<std::string> user_names;
        std::vector<int> partner;
        std::vector<bool> is_partner;
        std::vector<bool> elim;
        size_t nuser = 0;
        size_t nelim = 0;
    };
    std::shared_ptr<const Data> d_;
};

class Poly {
public:
    struct Term {
        Exp e;
        Scalar c;
    };

    Poly() = default;
    explicit Poly(const PolyRing& ring) : ring_(ring) {}
    static Poly constant(const PolyRing& ring, const Scalar& c);
    static Poly constant(const PolyRing& ring, long c);
    static Poly var(const PolyRing& ring, size_t i);
    static Poly var(const PolyRing& ring, const std::string& name);
    static Poly monomial(const PolyRing& ring, const Exp& e, const Scalar& c);
    static Poly from_terms(const PolyRing& ring, std::vector<Term> terms);
    /// x^k for integer k; negative powers of a Laurent variable use its partner.
    static Poly laurent_power(const PolyRing& ring, size_t var, long k);

    const PolyRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    const Exp& lm() const { return terms_.front().e; }
    const Scalar& lc() const { return terms_.front().c; }
    int degree() const;  // total degree, -1 for zero
    Scalar coeff(const Exp& e) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Scalar& c) const;
    Poly times_monomial(const Exp& e, const Scalar& c) const;
    Poly pow(unsigned k) const;
    Poly monic() const;
    /// this − c·m·g, the reduction step (merge of sorted term lists)
    void sub_mul(const Scalar& c, const Exp& m, const Poly& g);

    Scalar evaluate(const Vec& values) const;  // one value per ring variable
    /// Same exponents in another ring with at least as many variables, or
    /// fewer if the dropped variables do not occur.
    Poly moved_to(const PolyRing& target) const;
    bool uses_variable(size_t i) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_ring(const Poly& o) const;
    PolyRing ring_;
    std::vector<Term> terms_;  // strictly decreasing in the ring order
};

/// Ring homomorphism sending variable i of f's ring to images[i].
Poly substitute(const Poly& f, const PolyRing& target, const std::vector<Poly>& images);

/// Parses "x^2*y - 3/2*zeta*x + 1"; x^-k allowed for Laurent x.
Poly parse_poly(const PolyRing& ring, const std::string& text);

/// Reduced Gröbner basis by Buchberger's algorithm with the sugar strategy
/// and the Gebauer–Möller criteria. Output is monic, sorted by increasing
/// leading monomial.
std::vector<Poly> groebner_basis(const PolyRing& ring, std::vector<Poly> gens);
/// Full normal form of f modulo a Gröbner basis.
Poly normal_form(const Poly& f, const std::vector<Poly>& gb);
/// True when every S-polynomial reduces to zero.
bool satisfies_buchberger(const std::vector<Poly>& gb);

class Ideal {
public:
    Ideal() = default;
    Ideal(const PolyRing& ring, std::vector<Poly> gens);
    static Ideal zero(const PolyRing& ring) { return Ideal(ring, {}); }
    static Ideal unit(const PolyRing& ring);
    /// Trusted constructor: `gb` must already be a reduced Gröbner basis.
    static Ideal from_groebner(const PolyRing& ring, std::vector<Poly> gb);

    const PolyRing& ring() const;
    const std::vector<Poly>& generators() const;
    /// Computed at most once, then immutable (publish-once).
    const std::vector<Poly>& groebner() const;

    Poly normal_form(const Poly& f) const;
    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
    bool contains(const Ideal& o) const;
    bool is_unit() const;

    Ideal operator+(const Ideal& o) const;
    Ideal operator*(const Ideal& o) const;
    Ideal power(unsigned k) const;
    Ideal intersect(const Ideal& o) const;
    Ideal with(const std::vector<Poly>& more) const;
    /// I ∩ (ring without eliminated variables); ring must carry eliminations.
    Ideal eliminate() const;

    friend bool operator==(const Ideal& a, const Ideal& b);
    friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

    /// Reduced basis without the bare Laurent relations x·x̂ − 1.
    std::vector<Poly> display_basis() const;
    std::string to_string() const;

private:
    struct Data;
    std::shared_ptr<Data> d_;
};

struct FiniteData {
    std::vector<Exp> basis;  // standard monomials, increasing order
    std::map<Exp, size_t> index;
    std::vector<Matrix> mult;  // one per ring variable; column j = x_i·b_j
};

/// A = k[X]/I. Finite data is computed lazily, at most once.
class AffineAlgebra {
public:
    AffineAlgebra() = default;
    AffineAlgebra(const PolyRing& ring, const Ideal& ideal);
    explicit AffineAlgebra(const Ideal& ideal) : AffineAlgebra(ideal.ring(), ideal) {}

    const PolyRing& ring() const { return ring_; }
    const Ideal& ideal() const { return ideal_; }
    const FieldDescriptor& field() const { return ring_.field(); }

    /// nullptr when the staircase is infinite.
    const FiniteData* finite_data() const;
    size_t dimension() const;  // throws InfiniteQuotient
    Vec coords(const Poly& f) const;
    Poly from_coords(const Vec& v) const;
    /// Multiplication matrix of an element on the finite basis.
    Matrix mult_matrix(const Poly& f) const;
    int krull_dim() const;

    Poly nf(const Poly& f) const { return ideal_.normal_form(f); }

private:
    PolyRing ring_;
    Ideal ideal_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Standard monomials of degree ≤ d modulo a Gröbner basis.
std::vector<Exp> standard_monomials_up_to(const PolyRing& ring, const std::vector<Poly>& gb, int d);
/// Finite staircase, or nullopt if infinite.
std::optional<std::vector<Exp>> finite_staircase(const PolyRing& ring, const std::vector<Poly>& gb);
int krull_dim(const PolyRing& ring, const std::vector<Poly>& gb);

}  // namespace hopforbit
