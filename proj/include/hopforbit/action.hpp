#pragma once

#include "hopforbit/fdhopf.hpp"
#include "hopforbit/solve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopforbit {

/// A left T-module-algebra structure on A = k[X]/I, given by the values t·x
/// for every T-basis element t and every ring variable x (Laurent partners
/// included). Values on partners may be omitted when every T-basis element
/// is grouplike: then t·x⁻¹ = (t·x)⁻¹, which must be a unit monomial.
class ActionSpec {
public:
    ActionSpec() = default;
    ActionSpec(FDHopf hopf, AffineAlgebra algebra, std::vector<std::vector<Poly>> table, int degree_bound = 0);

    const FDHopf& hopf() const { return hopf_; }
    const AffineAlgebra& algebra() const { return algebra_; }
    const PolyRing& ring() const { return algebra_.ring(); }
    const Poly& value(size_t t, size_t var) const { return table_[t][var]; }
    int degree_bound() const { return degree_bound_; }
    ActionSpec with_degree_bound(int d) const;
    /// 2·(max relation degree, at least 1)·dim T
    static int default_degree_bound(const FDHopf& hopf, const AffineAlgebra& algebra);

private:
    FDHopf hopf_;
    AffineAlgebra algebra_;
    std::vector<std::vector<Poly>> table_;
    int degree_bound_ = 0;
};

/// The trivial action t·f = ε(t) f.
ActionSpec trivial_action(const FDHopf& hopf, const AffineAlgebra& algebra);

/// Evaluates t·f by the measuring rule t·(xm) = Σ (t₁·x)(t₂·m), memoizing
/// basis-element/monomial pairs. Not thread-safe; use one per thread.
class Actor {
public:
    explicit Actor(const ActionSpec& spec) : spec_(&spec) {}
    Poly act_basis(size_t t, const Poly& f);
    Poly act(const Vec& t, const Poly& f);

private:
    const Poly& on_monomial(size_t t, const Exp& e);
    const ActionSpec* spec_;
    std::map<std::pair<size_t, Exp>, Poly> memo_;
};

Poly act(const ActionSpec& spec, const Vec& t, const Poly& f);

struct ModuleAlgebraReport {
    bool pass = true;
    std::string failure;
    std::string witness;
};
ModuleAlgebraReport verify_module_algebra(const ActionSpec& spec);

/// Basis of {f : deg f ≤ d, t·f = ε(t) f for all acting elements}.
std::vector<Poly> invariants_up_to_degree(const ActionSpec& spec, int d);
std::vector<Poly> invariants_up_to_degree(const ActionSpec& spec, int d, const std::vector<Vec>& acting);

/// The T-core {x ∈ I : t·x ∈ I ∀t}. Throws DegreeBoundExhausted.
Ideal core(const ActionSpec& spec, const Ideal& I);
/// The core under the grouplikes of T only: ⋂_g g⁻¹·I.
Ideal core_under_grouplikes(const ActionSpec& spec, const Ideal& I);
/// Core relative to an explicit list of acting elements spanning a Hopf subalgebra.
Ideal core_for(const ActionSpec& spec, const Ideal& I, const std::vector<Vec>& acting);

struct TSimpleCertificate {
    bool t_simple = false;
    std::vector<size_t> basis_closure_dims;   // stable ideal generated by each basis element
    std::vector<size_t> socle_closure_dims;   // ... by each minimal ideal (decisive)
    std::vector<Vec> proper_stable_ideal;     // diagnostic when not T-simple
};

struct OrbitRecord {
    Ideal core;
    FDAlgebra quotient;
    std::vector<Matrix> action_matrices;  // one per T-basis element on the quotient
    std::vector<Point> members;
    FrobeniusReport frobenius;
    TSimpleCertificate t_simple;
    bool semisimple = false;
    size_t dimension() const { return quotient.dim(); }
};

OrbitRecord orbit(const ActionSpec& spec, const Point& m);
/// Quotient A/core with induced action matrices (no point enumeration).
OrbitRecord orbit_quotient(const ActionSpec& spec, const Ideal& core_ideal);
TSimpleCertificate is_T_simple(const FDAlgebra& quotient, const std::vector<Matrix>& action_matrices);
TSimpleCertificate is_T_simple(const OrbitRecord& record);

/// Semisimplicity of A/core, cross-checked against core = ⋂ members.
bool orbital_semisimplicity_at(const ActionSpec& spec, const Point& m);

struct ContainmentReport {
    Ideal grouplike_core;
    Ideal core;
    int exponent = 0;  // coradical filtration length + 1
    bool contained = false;
};
ContainmentReport coradical_core_containment(const ActionSpec& spec, const Point& m);

/// Orbits of several points, optionally fanned out over threads; output in input order.
std::vector<OrbitRecord> orbits(const ActionSpec& spec, const std::vector<Point>& points);

}  // namespace hopforbit
