#pragma once

#include "hopforbit/fdalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopforbit {

/// Elements of H⊗H as dense vectors indexed j·n + k.
using Tensor2 = Vec;

struct AxiomReport {
    bool pass = true;
    std::string axiom;            // first failing axiom
    std::vector<size_t> witness;  // basis indices exhibiting the failure
};

/// Finite-dimensional Hopf algebra by structure constants. Construction
/// stores the data unverified; verify() checks it (once, then cached).
class FDHopf {
public:
    FDHopf() = default;
    FDHopf(FDAlgebra alg, std::vector<SparseVec> comult, Vec counit, Matrix antipode,
           std::optional<int> coradical_length = std::nullopt, std::string name = "");

    const FDAlgebra& alg() const { return alg_; }
    const FieldDescriptor& field() const { return alg_.field(); }
    size_t dim() const { return alg_.dim(); }
    const std::string& name() const { return name_; }
    std::optional<int> coradical_length() const { return corad_; }

    const SparseVec& comult(size_t i) const { return comult_[i]; }  // indices j·n + k
    const Vec& counit() const { return counit_; }
    const Matrix& antipode() const { return antipode_; }

    Tensor2 comultiply(const Vec& x) const;
    Scalar epsilon(const Vec& x) const { return dot(counit_, x); }
    Vec S(const Vec& x) const { return antipode_.apply(x); }
    Tensor2 tensor_mul(const Tensor2& a, const Tensor2& b) const;

    /// Exhaustive axiom check; computed once, then cached.
    const AxiomReport& verify() const;
    /// Throws AxiomsNotVerified unless verify() passes.
    void require_verified() const;

    bool cocommutative() const;

private:
    FDAlgebra alg_;
    std::vector<SparseVec> comult_;
    Vec counit_;
    Matrix antipode_;
    std::optional<int> corad_;
    std::string name_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// The full exhaustive sweep (exposed for the serial/parallel comparison).
AxiomReport verify_hopf_axioms(const FDHopf& h);

/// Group algebra from a multiplication table (rows/cols indexed by elements).
FDHopf group_algebra(const FieldDescriptor& f, const std::vector<std::vector<size_t>>& table,
                     const std::string& name = "");
/// Taft algebra of dimension n² on basis g^i x^j (index i·n + j).
FDHopf taft_fd(size_t n, const Scalar& q);
/// k^G, the dual of kG (the function algebra on G).
FDHopf dual(const FDHopf& h);
FDHopf opposite(const FDHopf& h);     // multiplication reversed, antipode S⁻¹
FDHopf co_opposite(const FDHopf& h);  // comultiplication flipped, antipode S⁻¹
/// Replace the antipode (used to build corrupted fixtures).
FDHopf with_antipode(const FDHopf& h, const Matrix& s);

/// Validates a multiplication table as a group; returns the identity index.
size_t check_group_table(const std::vector<std::vector<size_t>>& table);
std::vector<std::vector<size_t>> cyclic_group_table(size_t n);
std::vector<std::vector<size_t>> symmetric_group_table(size_t n);

struct IntegralReport {
    Vec left_integral;
    Vec right_integral;
    bool semisimple = false;
    bool cosemisimple = false;
};
IntegralReport integrals_and_semisimplicity(const FDHopf& h);
Vec left_integral(const FDHopf& h);
Vec right_integral(const FDHopf& h);

/// All grouplike elements, via the Gröbner engine on Δg = g⊗g, ε(g) = 1.
/// Throws NonRationalGrouplike when some solution lies outside the field.
std::vector<Vec> grouplikes(const FDHopf& h);

/// S∘S as a matrix.
Matrix antipode_squared(const FDHopf& h);

}  // namespace hopforbit
