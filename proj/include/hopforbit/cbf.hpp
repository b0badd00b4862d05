#pragma once

#include "hopforbit/action.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopforbit {

// ------------------------------------------------------------ tensor rings

/// k copies of a ring's user variables (copy c > 0 gets c primes appended),
/// with the same Laurent flags. copy_var()[c][i] locates variable i of the
/// base ring (partners included) in copy c.
struct TensorRing {
    PolyRing base;
    PolyRing ring;
    int copies = 1;
    std::vector<std::vector<size_t>> copy_var;
    Ideal ideal;  // copies of the base ideal

    static TensorRing make(const AffineAlgebra& a, int copies);
    Poly copy(const Poly& f, int c) const;
    /// Exponent of copy c of a monomial of `ring`, as an exponent of `base`.
    Exp part(const Exp& e, int c) const;
};

// ------------------------------------------------------------ presentations

/// Σ a_h γ(h), coefficients in A.
using HCoords = std::map<size_t, Poly>;
/// Elements of H⊗H (or H⊗H⊗H): tuple index i₁ + n·i₂ (+ n²·i₃) → coefficient
/// in the tensor ring of A.
using HTensor = std::map<size_t, Poly>;

struct GroupPresentation {
    int free_rank = 0;
    std::vector<long> torsion;                       // orders d₁..dₛ
    std::vector<std::vector<size_t>> F_table;        // multiplication table of F
    std::vector<std::vector<std::vector<long>>> F_action;  // per F element, column j = image of generator j
    std::vector<std::string> N_names;                // defaults n0, n1, …
    std::vector<std::string> F_names;                // defaults f0, f1, …

    size_t rank() const { return static_cast<size_t>(free_rank) + torsion.size(); }
};

/// Everything a family supplies. The lifts γ(h) of the H̄-basis are elements
/// of H; products and coalgebra data are given on algebra generators of H̄
/// and extended along `words` (γ(h) is the product of γ over its word).
struct CleftData {
    std::string name;
    std::map<std::string, std::string> params;
    AffineAlgebra A;
    std::vector<Poly> delta_A;    // per ring variable, in TensorRing::make(A, 2).ring
    Vec eps_A;                    // per ring variable
    std::vector<Poly> antipode_A; // per ring variable

    size_t n = 0;
    std::vector<std::string> labels;
    size_t unit = 0;
    std::vector<size_t> generators;           // basis indices
    std::vector<std::vector<size_t>> words;   // per basis element, basis indices of generators
    std::vector<std::vector<HCoords>> rmul;   // rmul[h][g] = γ(h)·γ(generators[g])

    std::vector<HTensor> gen_comult;          // Δ(γ(s)) per generator
    std::vector<HCoords> gen_antipode;        // S(γ(s))
    std::vector<Scalar> gen_counit;           // ε(γ(s))

    std::vector<std::vector<Poly>> measuring; // h·x per basis element and ring variable

    int krull_dim_expected = 0;
    bool pointed = true;
    std::optional<int> coradical_length;

    std::optional<GroupPresentation> group;   // GroupAlg only
    std::vector<long> multipliers;            // A = k[M], M = ⊕ μ_j·(generator j)
};

class CleftPresentation;

struct HElement {
    std::shared_ptr<const void> owner;
    HCoords coords;
};
struct HTensorElement {
    std::shared_ptr<const void> owner;
    int copies = 2;
    HTensor coords;
};

/// H = A #_σ H̄ with exact arithmetic. Immutable after build().
class CleftPresentation {
public:
    CleftPresentation() = default;
    static CleftPresentation build(CleftData data);

    const CleftData& data() const;
    const std::string& name() const { return data().name; }
    const AffineAlgebra& A() const { return data().A; }
    const PolyRing& ring() const { return data().A.ring(); }
    const FieldDescriptor& field() const { return ring().field(); }
    const FDHopf& hbar() const;
    const ActionSpec& measuring() const;
    const TensorRing& tensor(int copies) const;  // 2 or 3
    size_t n() const { return data().n; }

    /// γ(h)γ(g) = Σ c_k γ(k): the cocycle in integrated form.
    const HCoords& lift_product(size_t h, size_t g) const;
    const HTensor& lift_comult(size_t h) const;
    const HCoords& lift_antipode(size_t h) const;
    const Scalar& lift_counit(size_t h) const;

    HElement element(const HCoords& c) const;
    HElement from_A(const Poly& a) const;  // a # 1
    HElement lift(size_t h) const;         // 1 # h
    HElement lift(const Vec& hbar_element) const;
    HElement one() const { return lift(data().unit); }

    const std::shared_ptr<const void>& identity() const { return id_; }

    struct Impl;  // opaque

private:
    std::shared_ptr<const Impl> impl_;
    std::shared_ptr<const void> id_;
    friend struct CleftAccess;
};

HElement multiply(const CleftPresentation& p, const HElement& u, const HElement& v);
HTensorElement comultiply(const CleftPresentation& p, const HElement& u);
HElement antipode(const CleftPresentation& p, const HElement& u);
Scalar counit(const CleftPresentation& p, const HElement& u);
HElement add(const CleftPresentation& p, const HElement& u, const HElement& v);
HElement scale(const CleftPresentation& p, const Scalar& c, const HElement& u);
bool equal(const CleftPresentation& p, const HElement& u, const HElement& v);
std::string to_string(const CleftPresentation& p, const HElement& u);
std::string to_string(const CleftPresentation& p, const HTensorElement& u);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};
struct PresentationReport {
    bool pass = true;
    std::vector<CheckResult> checks;
    const CheckResult* failure() const;
};

struct NormalityReport {
    bool pass = true;
    std::vector<std::vector<Poly>> left;   // ad_l(γ(h))(x) per basis element and ring variable
    std::vector<std::vector<Poly>> right;  // ad_r(γ(h))(x)
    std::string witness;
};
NormalityReport check_normality(const CleftPresentation& p);

/// ad_l(u)(a) = Σ u₁ a S(u₂) and ad_r(u)(a) = Σ S(u₁) a u₂ as elements of H.
HElement ad_left(const CleftPresentation& p, const HElement& u, const Poly& a);
HElement ad_right(const CleftPresentation& p, const HElement& u, const Poly& a);

/// Crossed-product associativity, Hopf axioms on generators, A⁺H = HA⁺,
/// normality, factorization of both adjoint actions, Krull dimension.
PresentationReport verify_presentation(const CleftPresentation& p);

enum class Side { left, right };
/// The adjoint action of H̄ on A. The right action a ◁ h is turned into a
/// left action of the co-opposite H̄ by h ▷ a = a ◁ S(h).
ActionSpec adjoint_action(const CleftPresentation& p, Side side);

/// H/JH on the basis (A/J standard monomial i, h) with index h·dim(A/J) + i.
FDAlgebra stable_quotient(const CleftPresentation& p, const Ideal& J);

struct SimpleDimsReport {
    Ideal core;
    size_t core_dim = 0;
    size_t quotient_dim = 0;
    std::vector<size_t> simple_dims;               // sorted
    std::vector<size_t> annihilator_matched_dims;  // sorted
    std::vector<size_t> annihilator_dims;          // dim Ann_{A/J}(V) per block, block order
    bool chain_holds = true;
};
SimpleDimsReport simple_dims_at(const CleftPresentation& p, const Point& m);

struct PIDegreeReport {
    size_t max_simple_dim = 0;
    std::optional<size_t> gamma_order;
    std::vector<SimpleDimsReport> per_point;
    bool matches_gamma = true;
};
PIDegreeReport pi_degree_scan(const CleftPresentation& p, const std::vector<Point>& sample);

struct DimensionReport {
    int krull_dim = 0;
    int expected = 0;
    bool krull_matches = false;
    int degree = 0;
    std::vector<Poly> invariants;  // A^{H̄} up to `degree`
    bool invariants_central = true;
    std::string witness;
};
DimensionReport dimension_invariants(const CleftPresentation& p, int degree_bound = 0);

/// Coinvariants A^{co A/J} = {a : (id⊗π)Δ(a) = a⊗1} among elements spanned by
/// standard monomials of degree ≤ d (Laurent partners count towards degree).
std::vector<Poly> coinvariants_up_to(const CleftPresentation& p, const Ideal& J, int d);

// ------------------------------------------------------------ families

struct FamilyParams {
    std::string family;           // taft, liu, quantum_plane, gz_b, dihedral, group, restricted_sl2
    long n = 0, t = 0, w = 0, l = 0;
    long q_power = 1;             // q = ζ^{q_power}
    long q_order = 0;             // order of q where the family lets it vary; cyclotomic order for group, restricted_sl2
    long p = 0;                   // characteristic (restricted_sl2, group)
    std::vector<long> gz_p;       // p₀, p₁, …, pₛ
    std::optional<GroupPresentation> group;
    std::vector<long> multipliers;
};

CleftData taft_data(long n, long t, long q_power = 1);
CleftData liu_data(long n, long w, long q_power = 1);
CleftData quantum_plane_data(long n, long l, long q_power = 1);
CleftData gz_b_data(long n, const std::vector<long>& p, long q_power = 1);
CleftData group_data(const FieldDescriptor& f, const GroupPresentation& g, const std::vector<long>& multipliers);
CleftData dihedral_data();
/// Over 𝔽_p(ζ_m) when cyclotomic_order = m > 1 (e.g. 𝔽₄ = 𝔽₂(ζ₃)).
CleftData restricted_sl2_data(long p, long cyclotomic_order = 1);
CleftData family_data(const FamilyParams& params);
/// Builds, verifies, throws CertificateFailure if any invariant fails.
CleftPresentation make_family(const FamilyParams& params);

/// The infinite dihedral group ⟨a, b : a² = 1, aba = b⁻¹⟩ as ℤ ⋊ C₂.
GroupPresentation dihedral_group();
/// (⟨x⟩ × S₃) ⋊ C₂ written as (ℤ × ℤ/3) ⋊ (⟨β⟩ × ⟨a⟩).
GroupPresentation z_times_s3_by_c2();

// ------------------------------------------------------------ group case

/// Subgroup L ⋊ F' of N ⋊ F: a lattice between the torsion relations and ℤ^{r+s},
/// stored in Hermite normal form, together with a subgroup of F.
struct SubgroupRep {
    std::vector<std::vector<long>> lattice;  // HNF rows (relations included)
    std::vector<size_t> f_part;              // sorted F elements
    std::string description;
};

struct StructureChain {
    Ideal NA;              // nilradical of A
    Ideal P;
    SubgroupRep B;         // torsion of M
    SubgroupRep A;         // M
    std::vector<size_t> gamma_kernel;  // F₀
    size_t gamma_order = 0;
    std::vector<std::vector<std::vector<long>>> gamma;  // distinct matrices on the free part of M
    SubgroupRep D;         // N ⋊ F₀
    SubgroupRep L;         // finite radical R of D's group; L = ω(R)D
    SubgroupRep E;         // normal closure of R in G
    SubgroupRep C;         // trivial group
    SubgroupRep H;         // G
    size_t D_mod_L_rank = 0;          // D/L ≅ k[ℤ^rank]
    bool D_mod_L_domain = false;
    bool A_mod_P_central = false;
    std::vector<std::pair<std::string, bool>> inclusions;  // "C⊆B" etc., strictness flags
    bool B_coinvariants_match = false;
    bool C_coinvariants_match = false;
};

SubgroupRep subgroup_generated(const GroupPresentation& g, const std::vector<std::vector<long>>& n_gens,
                               const std::vector<size_t>& f_gens);
bool subgroup_contains(const SubgroupRep& big, const SubgroupRep& small);
bool subgroup_equal(const SubgroupRep& a, const SubgroupRep& b);
/// Index of the lattice part modulo torsion-free comparison is not needed;
/// rank of the free part of the lattice quotient N/L.
size_t quotient_free_rank(const GroupPresentation& g, const SubgroupRep& s);

StructureChain structure_chain_group_case(const CleftPresentation& p);

/// Order of the stabilizer C_Γ(m) of a point of A in the Γ-action on the free
/// part of M (the torsion coordinates are ignored, i.e. m is read in V(P)).
size_t gamma_stabilizer_order(const CleftPresentation& p, const StructureChain& chain, const Point& m);

}  // namespace hopforbit
