#include "hopforbit/polyring.hpp"

#include "hopforbit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

namespace hopforbit {

// ------------------------------------------------------------ monomials

int total_degree(const Exp& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

bool divides(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exp mul(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exp quo(const Exp& b, const Exp& a) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

bool coprime(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

// ------------------------------------------------------------- PolyRing

PolyRing::PolyRing(const FieldDescriptor& f, const std::vector<std::string>& names,
                   const std::vector<bool>& laurent) {
    auto d = std::make_shared<Data>();
    d->f = f;
    d->user_names = names;
    d->nuser = names.size();
    d->names = names;
    d->partner.assign(names.size(), -1);
    d->is_partner.assign(names.size(), false);
    for (size_t i = 0; i < names.size(); ++i) {
        if (i < laurent.size() && laurent[i]) {
            d->partner[i] = static_cast<int>(d->names.size());
            d->names.push_back("~" + names[i]);
            d->partner.push_back(static_cast<int>(i));
            d->is_partner.push_back(true);
        }
    }
    d->elim.assign(d->names.size(), false);
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (names[i] == names[j]) throw BadParameters("duplicate variable " + names[i]);
    d_ = d;
}

PolyRing PolyRing::with_eliminated(const std::vector<std::string>& extra) const {
    auto d = std::make_shared<Data>(*d_);
    for (const auto& n : extra) {
        d->names.push_back(n);
        d->partner.push_back(-1);
        d->is_partner.push_back(false);
        d->elim.push_back(true);
        ++d->nelim;
    }
    PolyRing r;
    r.d_ = d;
    return r;
}

PolyRing PolyRing::base() const {
    if (d_->nelim == 0) return *this;
    auto d = std::make_shared<Data>(*d_);
    const size_t keep = d->names.size() - d->nelim;
    d->names.resize(keep);
    d->partner.resize(keep);
    d->is_partner.resize(keep);
    d->elim.resize(keep);
    d->nelim = 0;
    PolyRing r;
    r.d_ = d;
    return r;
}

std::optional<size_t> PolyRing::index(const std::string& name) const {
    for (size_t i = 0; i < d_->names.size(); ++i)
        if (d_->names[i] == name) return i;
    return std::nullopt;
}

std::vector<bool> PolyRing::laurent_flags() const {
    std::vector<bool> out;
    for (size_t i = 0; i < d_->nuser; ++i) out.push_back(is_laurent(i));
    return out;
}

int PolyRing::compare(const Exp& a, const Exp& b) const {
    if (d_->nelim) {
        int wa = 0, wb = 0;
        for (size_t i = 0; i < a.size(); ++i)
            if (d_->elim[i]) {
                wa += a[i];
                wb += b[i];
            }
        if (wa != wb) return wa > wb ? 1 : -1;
    }
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

bool operator==(const PolyRing& a, const PolyRing& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->f == b.d_->f && a.d_->names == b.d_->names && a.d_->partner == b.d_->partner &&
           a.d_->elim == b.d_->elim;
}

std::string PolyRing::describe() const {
    std::string s = field().name() + "[";
    for (size_t i = 0; i < d_->nuser; ++i) {
        if (i) s += ",";
        s += d_->names[i];
        if (is_laurent(i)) s += "^±1";
    }
    return s + "]";
}

// ----------------------------------------------------------------- Poly

namespace {

struct TermGreater {
    const PolyRing* ring;
    bool operator()(const Poly::Term& a, const Poly::Term& b) const {
        return ring->compare(a.e, b.e) > 0;
    }
};

}  // namespace

void Poly::check_ring(const Poly& o) const {
    if (ring_ != o.ring_) throw RingMismatch(ring_.describe() + " vs " + o.ring_.describe());
}

Poly Poly::constant(const PolyRing& ring, const Scalar& c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({Exp(ring.nvars(), 0), c});
    return p;
}

Poly Poly::constant(const PolyRing& ring, long c) { return constant(ring, Scalar(ring.field(), c)); }

Poly Poly::var(const PolyRing& ring, size_t i) {
    Exp e(ring.nvars(), 0);
    e[i] = 1;
    return monomial(ring, e, Scalar::one(ring.field()));
}

Poly Poly::var(const PolyRing& ring, const std::string& name) {
    auto i = ring.index(name);
    if (!i) throw SchemaError("unknown variable " + name);
    return var(ring, *i);
}

Poly Poly::monomial(const PolyRing& ring, const Exp& e, const Scalar& c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({e, c});
    return p;
}

Poly Poly::from_terms(const PolyRing& ring, std::vector<Term> terms) {
    Poly p(ring);
    std::sort(terms.begin(), terms.end(), TermGreater{&ring});
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().e == t.e)
            p.terms_.back().c += t.c;
        else {
            if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
    return p;
}

Poly Poly::laurent_power(const PolyRing& ring, size_t v, long k) {
    Exp e(ring.nvars(), 0);
    if (k >= 0)
        e[v] = static_cast<int>(k);
    else {
        if (!ring.is_laurent(v)) throw DomainError("negative power of non-Laurent variable " + ring.name(v));
        e[ring.partner(v)] = static_cast<int>(-k);
    }
    return monomial(ring, e, Scalar::one(ring.field()));
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].e) == 0);
}

Scalar Poly::constant_term() const {
    if (!terms_.empty() && total_degree(terms_.back().e) == 0) return terms_.back().c;
    return Scalar::zero(ring_.field());
}

int Poly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.e));
    return d;
}

Scalar Poly::coeff(const Exp& e) const {
    for (const auto& t : terms_)
        if (t.e == e) return t.c;
    return Scalar::zero(ring_.field());
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

void Poly::sub_mul(const Scalar& c, const Exp& m, const Poly& g) {
    if (c.is_zero() || g.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    const bool shift = total_degree(m) != 0;
    Exp tmp;
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j < g.terms_.size()) {
            tmp = shift ? mul(g.terms_[j].e, m) : g.terms_[j].e;
        }
        int cmp;
        if (i >= terms_.size())
            cmp = -1;
        else if (j >= g.terms_.size())
            cmp = 1;
        else
            cmp = ring_.compare(terms_[i].e, tmp);
        if (cmp > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (cmp < 0) {
            out.push_back({tmp, -(c * g.terms_[j++].c)});
        } else {
            Scalar v = terms_[i].c - c * g.terms_[j].c;
            if (!v.is_zero()) out.push_back({std::move(terms_[i].e), std::move(v)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
    if (!ring_.valid()) return *this = o;
    if (o.is_zero()) return *this;
    check_ring(o);
    sub_mul(Scalar(ring_.field(), -1L), Exp(ring_.nvars(), 0), o);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!ring_.valid()) return *this = -o;
    if (o.is_zero()) return *this;
    check_ring(o);
    sub_mul(Scalar::one(ring_.field()), Exp(ring_.nvars(), 0), o);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    if (a.size() == 1) return b.times_monomial(a.terms_[0].e, a.terms_[0].c);
    if (b.size() == 1) return a.times_monomial(b.terms_[0].e, b.terms_[0].c);
    std::vector<Poly::Term> all;
    all.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) all.push_back({mul(s.e, t.e), s.c * t.c});
    return Poly::from_terms(a.ring_, std::move(all));
}

Poly Poly::scaled(const Scalar& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Poly Poly::times_monomial(const Exp& e, const Scalar& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) {
        t.e = mul(t.e, e);
        t.c *= c;
    }
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = constant(ring_, 1L), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inverse());
}

Scalar Poly::evaluate(const Vec& values) const {
    Scalar s = Scalar::zero(ring_.field());
    for (const auto& t : terms_) {
        Scalar m = t.c;
        for (size_t i = 0; i < t.e.size(); ++i)
            if (t.e[i]) m *= values[i].pow(t.e[i]);
        s += m;
    }
    return s;
}

Poly Poly::moved_to(const PolyRing& target) const {
    if (ring_ == target) return *this;
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        Exp e(target.nvars(), 0);
        for (size_t i = 0; i < t.e.size(); ++i) {
            if (i < e.size())
                e[i] = t.e[i];
            else if (t.e[i])
                throw RingMismatch("variable " + ring_.name(i) + " not in target ring");
        }
        ts.push_back({e, t.c});
    }
    return from_terms(target, std::move(ts));
}

bool Poly::uses_variable(size_t i) const {
    for (const auto& t : terms_)
        if (t.e[i]) return true;
    return false;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string mono;
        for (size_t i = 0; i < t.e.size(); ++i) {
            if (!t.e[i]) continue;
            if (!mono.empty()) mono += "*";
            if (ring_.is_partner(i)) {
                mono += ring_.name(ring_.partner(i)) + "^-" + std::to_string(t.e[i]);
            } else {
                mono += ring_.name(i);
                if (t.e[i] > 1) mono += "^" + std::to_string(t.e[i]);
            }
        }
        std::string c = t.c.to_string();
        const bool compound = !t.c.in_prime_field();
        bool neg = !compound && c[0] == '-';
        if (neg) c = c.substr(1);
        if (compound) c = "(" + c + ")";
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (mono.empty())
            os << c;
        else if (c == "1")
            os << mono;
        else
            os << c << "*" << mono;
    }
    return os.str();
}

Poly substitute(const Poly& f, const PolyRing& target, const std::vector<Poly>& images) {
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](size_t v, int k) -> const Poly& {
        auto& pv = powers[v];
        if (pv.empty()) pv.push_back(Poly::constant(target, 1L));
        while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * images[v]);
        return pv[k];
    };
    Poly out(target);
    for (const auto& t : f.terms()) {
        Poly m = Poly::constant(target, t.c);
        for (size_t i = 0; i < t.e.size(); ++i)
            if (t.e[i]) m = m * power(i, t.e[i]);
        out += m;
    }
    return out;
}

// --------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(const PolyRing& ring, const std::string& s) : ring_(ring), s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw SchemaError("cannot parse polynomial '" + s_ + "': " + why + " at " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Poly expr() {
        Poly p = term();
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }
    Poly term() {
        Poly p = unary();
        for (;;) {
            if (eat('*'))
                p = p * unary();
            else if (eat('/')) {
                Poly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by non-constant");
                p = p.scaled(d.constant_term().inverse());
            } else
                return p;
        }
    }
    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    long integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }
    Poly power() {
        std::optional<size_t> var;
        Poly base = atom(var);
        if (!eat('^')) return base;
        bool neg = eat('-');
        long k;
        if (eat('(')) {
            neg = eat('-') != neg;
            k = integer();
            if (!eat(')')) fail("expected )");
        } else
            k = integer();
        if (!neg) return base.pow(static_cast<unsigned>(k));
        if (var) return Poly::laurent_power(ring_, *var, -k);
        if (base.is_constant() && !base.is_zero())
            return Poly::constant(ring_, base.constant_term().pow(-k));
        fail("negative power of non-variable");
    }
    Poly atom(std::optional<size_t>& var) {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected )");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpq_class v(mpz_class(s_.substr(start, pos_ - start)));
            return Poly::constant(ring_, Scalar(ring_.field(), v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (auto i = ring_.index(name)) {
                var = *i;
                return Poly::var(ring_, *i);
            }
            if (name == "zeta") return Poly::constant(ring_, Scalar::zeta(ring_.field()));
            fail("unknown identifier " + name);
        }
        fail(std::string("unexpected character ") + c);
    }

    const PolyRing& ring_;
    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const PolyRing& ring, const std::string& text) { return Parser(ring, text).parse(); }

// ------------------------------------------------------------- Gröbner

namespace {

const Poly* find_reducer(const Exp& m, const std::vector<const Poly*>& gb) {
    for (const Poly* g : gb)
        if (divides(g->lm(), m)) return g;
    return nullptr;
}

Poly reduce_full(Poly p, const std::vector<const Poly*>& gb) {
    Poly rem(p.ring());
    std::vector<Poly::Term> kept;
    while (!p.is_zero()) {
        const Poly* g = find_reducer(p.lm(), gb);
        if (g) {
            Scalar c = p.lc() / g->lc();
            Exp m = quo(p.lm(), g->lm());
            p.sub_mul(c, m, *g);
        } else {
            Poly lead = Poly::monomial(p.ring(), p.lm(), p.lc());
            kept.push_back({p.lm(), p.lc()});
            p -= lead;
        }
    }
    return Poly::from_terms(rem.ring(), std::move(kept));
}

Poly spoly(const Poly& f, const Poly& g) {
    Exp l = lcm(f.lm(), g.lm());
    Poly a = f.times_monomial(quo(l, f.lm()), g.lc());
    a.sub_mul(f.lc(), quo(l, g.lm()), g);
    return a;
}

struct Pair {
    size_t i, j;
    Exp lcm;
    int sugar;
};

class Buchberger {
public:
    explicit Buchberger(const PolyRing& ring) : ring_(ring) {}

    void add(Poly h, int sugar) {
        h = reduce_full(std::move(h), active_ptrs());
        if (h.is_zero()) return;
        h = h.monic();
        polys_.push_back(std::move(h));
        sugar_.push_back(sugar);
        update(polys_.size() - 1);
    }

    void run() {
        while (!pairs_.empty()) {
            size_t best = 0;
            for (size_t k = 1; k < pairs_.size(); ++k) {
                const Pair& a = pairs_[k];
                const Pair& b = pairs_[best];
                if (a.sugar < b.sugar || (a.sugar == b.sugar && ring_.compare(a.lcm, b.lcm) < 0)) best = k;
            }
            Pair pr = pairs_[best];
            pairs_.erase(pairs_.begin() + best);
            Poly s = spoly(polys_[pr.i], polys_[pr.j]);
            add(std::move(s), pr.sugar);
        }
    }

    std::vector<Poly> reduced() const {
        std::vector<Poly> g;
        for (size_t k : active_) g.push_back(polys_[k]);
        // minimalize
        std::vector<Poly> minimal;
        for (size_t a = 0; a < g.size(); ++a) {
            bool drop = false;
            for (size_t b = 0; b < g.size() && !drop; ++b) {
                if (a == b) continue;
                if (divides(g[b].lm(), g[a].lm()) && (g[b].lm() != g[a].lm() || b < a)) drop = true;
            }
            if (!drop) minimal.push_back(g[a]);
        }
        std::vector<Poly> out;
        for (size_t a = 0; a < minimal.size(); ++a) {
            std::vector<const Poly*> others;
            for (size_t b = 0; b < minimal.size(); ++b)
                if (b != a) others.push_back(&minimal[b]);
            Poly lead = Poly::monomial(ring_, minimal[a].lm(), minimal[a].lc());
            Poly tail = reduce_full(minimal[a] - lead, others);
            out.push_back((lead + tail).monic());
        }
        std::sort(out.begin(), out.end(),
                  [&](const Poly& x, const Poly& y) { return ring_.compare(x.lm(), y.lm()) < 0; });
        return out;
    }

private:
    std::vector<const Poly*> active_ptrs() const {
        std::vector<const Poly*> v;
        for (size_t k : active_) v.push_back(&polys_[k]);
        return v;
    }

    int pair_sugar(size_t i, size_t j, const Exp& l) const {
        int dl = total_degree(l);
        return std::max(sugar_[i] + dl - total_degree(polys_[i].lm()),
                        sugar_[j] + dl - total_degree(polys_[j].lm()));
    }

    // Gebauer–Möller update
    void update(size_t h) {
        const Exp& lh = polys_[h].lm();
        std::vector<Pair> C, D;
        for (size_t g : active_) C.push_back({g, h, lcm(polys_[g].lm(), lh), 0});
        while (!C.empty()) {
            Pair p = C.front();
            C.erase(C.begin());
            bool keep = coprime(lh, polys_[p.i].lm());
            if (!keep) {
                keep = true;
                for (const auto& q : C)
                    if (divides(q.lcm, p.lcm)) {
                        keep = false;
                        break;
                    }
                if (keep)
                    for (const auto& q : D)
                        if (divides(q.lcm, p.lcm)) {
                            keep = false;
                            break;
                        }
            }
            if (keep) D.push_back(p);
        }
        std::vector<Pair> E;
        for (auto& p : D)
            if (!coprime(lh, polys_[p.i].lm())) {
                p.sugar = pair_sugar(p.i, p.j, p.lcm);
                E.push_back(p);
            }
        std::vector<Pair> B;
        for (const auto& p : pairs_) {
            if (!divides(lh, p.lcm) || lcm(polys_[p.i].lm(), lh) == p.lcm ||
                lcm(polys_[p.j].lm(), lh) == p.lcm)
                B.push_back(p);
        }
        B.insert(B.end(), E.begin(), E.end());
        pairs_ = std::move(B);
        std::vector<size_t> act;
        for (size_t g : active_)
            if (!divides(lh, polys_[g].lm())) act.push_back(g);
        act.push_back(h);
        active_ = std::move(act);
    }

    PolyRing ring_;
    std::deque<Poly> polys_;  // stable addresses
    std::vector<int> sugar_;
    std::vector<size_t> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Poly> groebner_basis(const PolyRing& ring, std::vector<Poly> gens) {
    Buchberger b(ring);
    std::sort(gens.begin(), gens.end(), [&](const Poly& x, const Poly& y) {
        if (x.is_zero() || y.is_zero()) return !x.is_zero() && y.is_zero();
        return ring.compare(x.lm(), y.lm()) < 0;
    });
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring) throw RingMismatch("generator ring");
        int s = g.degree();
        b.add(std::move(g), s);
    }
    b.run();
    return b.reduced();
}

Poly normal_form(const Poly& f, const std::vector<Poly>& gb) {
    std::vector<const Poly*> ptrs;
    for (const auto& g : gb) ptrs.push_back(&g);
    return reduce_full(f, ptrs);
}

bool satisfies_buchberger(const std::vector<Poly>& gb) {
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j)
            if (!normal_form(spoly(gb[i], gb[j]), gb).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------- Ideal

struct Ideal::Data {
    PolyRing ring;
    std::vector<Poly> gens;
    std::once_flag once;
    std::vector<Poly> gb;
};

const PolyRing& Ideal::ring() const { return d_->ring; }
const std::vector<Poly>& Ideal::generators() const { return d_->gens; }

namespace {
std::vector<Poly> laurent_relations(const PolyRing& ring) {
    std::vector<Poly> out;
    for (size_t i = 0; i < ring.nvars(); ++i)
        if (ring.is_laurent(i))
            out.push_back(Poly::var(ring, i) * Poly::var(ring, ring.partner(i)) - Poly::constant(ring, 1L));
    return out;
}
}  // namespace

Ideal::Ideal(const PolyRing& ring, std::vector<Poly> gens) : d_(std::make_shared<Data>()) {
    d_->ring = ring;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring) throw RingMismatch("ideal generator from " + g.ring().describe());
        d_->gens.push_back(std::move(g));
    }
    for (auto& r : laurent_relations(ring)) d_->gens.push_back(std::move(r));
}

Ideal Ideal::unit(const PolyRing& ring) { return Ideal(ring, {Poly::constant(ring, 1L)}); }

Ideal Ideal::from_groebner(const PolyRing& ring, std::vector<Poly> gb) {
    Ideal I;
    I.d_ = std::make_shared<Data>();
    I.d_->ring = ring;
    I.d_->gens = gb;
    I.d_->gb = std::move(gb);
    std::call_once(I.d_->once, [] {});
    return I;
}

const std::vector<Poly>& Ideal::groebner() const {
    std::call_once(d_->once, [this] { d_->gb = groebner_basis(d_->ring, d_->gens); });
    return d_->gb;
}

Poly Ideal::normal_form(const Poly& f) const {
    if (f.ring() != ring()) throw RingMismatch("normal form of foreign polynomial");
    return hopforbit::normal_form(f, groebner());
}

bool Ideal::contains(const Ideal& o) const {
    if (o.ring() != ring()) throw RingMismatch("containment");
    for (const auto& g : o.groebner())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::is_unit() const {
    const auto& g = groebner();
    return g.size() == 1 && g[0].is_constant();
}

Ideal Ideal::operator+(const Ideal& o) const {
    if (o.ring() != ring()) throw RingMismatch("sum");
    std::vector<Poly> g = groebner();
    g.insert(g.end(), o.groebner().begin(), o.groebner().end());
    return Ideal(ring(), g);
}

Ideal Ideal::with(const std::vector<Poly>& more) const {
    std::vector<Poly> g = groebner();
    g.insert(g.end(), more.begin(), more.end());
    return Ideal(ring(), g);
}

Ideal Ideal::operator*(const Ideal& o) const {
    if (o.ring() != ring()) throw RingMismatch("product");
    std::vector<Poly> g;
    for (const auto& a : groebner())
        for (const auto& b : o.groebner()) g.push_back(a * b);
    return Ideal(ring(), g);
}

Ideal Ideal::power(unsigned k) const {
    if (k == 0) return unit(ring());
    Ideal r = *this;
    for (unsigned i = 1; i < k; ++i) r = r * *this;
    return r;
}

Ideal Ideal::intersect(const Ideal& o) const {
    if (o.ring() != ring()) throw RingMismatch("intersection");
    PolyRing big = ring().with_eliminated({"_t"});
    Poly t = Poly::var(big, big.nvars() - 1);
    Poly one_minus_t = Poly::constant(big, 1L) - t;
    std::vector<Poly> g;
    for (const auto& a : groebner()) g.push_back(t * a.moved_to(big));
    for (const auto& b : o.groebner()) g.push_back(one_minus_t * b.moved_to(big));
    return Ideal(big, g).eliminate();
}

Ideal Ideal::eliminate() const {
    PolyRing small = ring().base();
    std::vector<Poly> keep;
    for (const auto& g : groebner()) {
        bool uses = false;
        for (size_t i = small.nvars(); i < ring().nvars(); ++i) uses = uses || g.uses_variable(i);
        if (!uses) keep.push_back(g.moved_to(small));
    }
    return from_groebner(small, keep);
}

bool operator==(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) return false;
    return a.groebner() == b.groebner();
}

std::vector<Poly> Ideal::display_basis() const {
    auto rel = laurent_relations(ring());
    std::vector<Poly> out;
    for (const auto& g : groebner())
        if (std::find(rel.begin(), rel.end(), g) == rel.end()) out.push_back(g);
    return out;
}

std::string Ideal::to_string() const {
    std::string s = "<";
    auto b = display_basis();
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) s += ", ";
        s += b[i].to_string();
    }
    return s + ">";
}

// ---------------------------------------------------------- staircases

std::vector<Exp> standard_monomials_up_to(const PolyRing& ring, const std::vector<Poly>& gb, int d) {
    std::set<Exp> seen;
    std::vector<Exp> out;
    std::deque<Exp> q;
    auto standard = [&](const Exp& e) {
        for (const auto& g : gb)
            if (divides(g.lm(), e)) return false;
        return true;
    };
    Exp one(ring.nvars(), 0);
    if (!standard(one)) return out;
    q.push_back(one);
    seen.insert(one);
    while (!q.empty()) {
        Exp e = q.front();
        q.pop_front();
        out.push_back(e);
        if (total_degree(e) >= d) continue;
        for (size_t i = 0; i < ring.nvars(); ++i) {
            Exp f = e;
            ++f[i];
            if (seen.count(f)) continue;
            seen.insert(f);
            if (standard(f)) q.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Exp& a, const Exp& b) { return ring.compare(a, b) < 0; });
    return out;
}

std::optional<std::vector<Exp>> finite_staircase(const PolyRing& ring, const std::vector<Poly>& gb) {
    if (gb.size() == 1 && gb[0].is_constant()) return std::vector<Exp>{};
    int bound = 0;
    for (size_t i = 0; i < ring.nvars(); ++i) {
        int best = -1;
        for (const auto& g : gb) {
            const Exp& e = g.lm();
            if (total_degree(e) == e[i] && e[i] > 0 && (best < 0 || e[i] < best)) best = e[i];
        }
        if (best < 0) return std::nullopt;
        bound += best;
    }
    return standard_monomials_up_to(ring, gb, bound);
}

int krull_dim(const PolyRing& ring, const std::vector<Poly>& gb) {
    if (gb.size() == 1 && gb[0].is_constant()) return -1;
    const size_t n = ring.nvars();
    if (n > 20) throw BadParameters("too many variables for Krull dimension");
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        int size = __builtin_popcountl(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& g : gb) {
            bool inside = true;
            for (size_t i = 0; i < n; ++i)
                if (g.lm()[i] && !(mask >> i & 1)) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

// -------------------------------------------------------- AffineAlgebra

struct AffineAlgebra::Cache {
    std::once_flag once;
    std::optional<FiniteData> data;
};

AffineAlgebra::AffineAlgebra(const PolyRing& ring, const Ideal& ideal)
    : ring_(ring), ideal_(ideal), cache_(std::make_shared<Cache>()) {
    if (ideal.ring() != ring) throw RingMismatch("affine algebra ideal");
}

const FiniteData* AffineAlgebra::finite_data() const {
    std::call_once(cache_->once, [this] {
        const auto& gb = ideal_.groebner();
        auto st = finite_staircase(ring_, gb);
        if (!st) return;
        FiniteData fd;
        fd.basis = *st;
        for (size_t k = 0; k < fd.basis.size(); ++k) fd.index[fd.basis[k]] = k;
        const size_t n = fd.basis.size();
        for (size_t v = 0; v < ring_.nvars(); ++v) {
            Matrix m(field(), n, n);
            for (size_t j = 0; j < n; ++j) {
                Exp e = fd.basis[j];
                ++e[v];
                Poly r = normal_form(Poly::monomial(ring_, e, Scalar::one(field())), gb);
                for (const auto& t : r.terms()) m(fd.index.at(t.e), j) = t.c;
            }
            fd.mult.push_back(std::move(m));
        }
        cache_->data = std::move(fd);
    });
    return cache_->data ? &*cache_->data : nullptr;
}

size_t AffineAlgebra::dimension() const {
    const FiniteData* fd = finite_data();
    if (!fd) throw InfiniteQuotient(ideal_.to_string());
    return fd->basis.size();
}

Vec AffineAlgebra::coords(const Poly& f) const {
    const FiniteData* fd = finite_data();
    if (!fd) throw InfiniteQuotient(ideal_.to_string());
    Vec v = zero_vec(field(), fd->basis.size());
    Poly r = nf(f);
    for (const auto& t : r.terms()) v[fd->index.at(t.e)] = t.c;
    return v;
}

Poly AffineAlgebra::from_coords(const Vec& v) const {
    const FiniteData* fd = finite_data();
    if (!fd) throw InfiniteQuotient(ideal_.to_string());
    std::vector<Poly::Term> ts;
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) ts.push_back({fd->basis[k], v[k]});
    return Poly::from_terms(ring_, std::move(ts));
}

Matrix AffineAlgebra::mult_matrix(const Poly& f) const {
    const size_t n = dimension();
    const FiniteData* fd = finite_data();
    Matrix m(field(), n, n);
    for (size_t j = 0; j < n; ++j) {
        Vec c = coords(f * Poly::monomial(ring_, fd->basis[j], Scalar::one(field())));
        m.set_col(j, c);
    }
    return m;
}

int AffineAlgebra::krull_dim() const { return hopforbit::krull_dim(ring_, ideal_.groebner()); }

}  // namespace hopforbit
