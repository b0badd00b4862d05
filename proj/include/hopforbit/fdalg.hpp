#pragma once

#include "hopforbit/linalg.hpp"
#include "hopforbit/polyring.hpp"
#include "hopforbit/upoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hopforbit {

using SparseVec = std::vector<std::pair<size_t, Scalar>>;

SparseVec sparsify(const Vec& v);
Vec densify(const FieldDescriptor& f, size_t n, const SparseVec& s);

/// Associative algebra by structure constants e_i·e_j = Σ_k c_ij^k e_k
/// (stored sparsely, row-major in (i, j)).
class FDAlgebra {
public:
    FDAlgebra() = default;
    FDAlgebra(const FieldDescriptor& f, size_t dim, std::vector<SparseVec> products, Vec unit,
              std::vector<std::string> labels = {});
    /// Builder from a callback giving e_i·e_j densely.
    template <class F>
    static FDAlgebra build(const FieldDescriptor& f, size_t dim, F&& product, Vec unit,
                           std::vector<std::string> labels = {}) {
        std::vector<SparseVec> p(dim * dim);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) p[i * dim + j] = sparsify(product(i, j));
        return FDAlgebra(f, dim, std::move(p), std::move(unit), std::move(labels));
    }

    const FieldDescriptor& field() const { return f_; }
    size_t dim() const { return n_; }
    const Vec& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool commutative() const { return commutative_; }

    const SparseVec& product(size_t i, size_t j) const { return mult_[i * n_ + j]; }
    Vec basis_product(size_t i, size_t j) const { return densify(f_, n_, product(i, j)); }
    Vec mul(const Vec& a, const Vec& b) const;
    Vec basis(size_t i) const { return unit_vec(f_, n_, i); }
    Vec power(const Vec& a, unsigned k) const;
    Matrix left_matrix(const Vec& a) const;   // x ↦ a x
    Matrix right_matrix(const Vec& a) const;  // x ↦ x a
    Scalar trace_of_left(size_t k) const;     // tr(L_{e_k})

private:
    FieldDescriptor f_;
    size_t n_ = 0;
    std::vector<SparseVec> mult_;
    Vec unit_;
    std::vector<std::string> labels_;
    bool commutative_ = false;
};

/// First failing basis triple (i, j, l) of (e_i e_j) e_l = e_i (e_j e_l); exhaustive
/// when dim ≤ 64, a fixed deterministic sample of triples above.
std::optional<std::array<size_t, 3>> associativity_failure(const FDAlgebra& a);
bool unit_is_identity(const FDAlgebra& a);

/// Jacobson radical: radical of the trace form when char = 0 or p > dim,
/// otherwise (prime fields only) the p-adic trace chain; throws
/// SmallCharacteristic over extensions of small characteristic.
Subspace radical(const FDAlgebra& a);
/// Nilradical of a commutative algebra in any characteristic (trace form,
/// or the kernel of a Frobenius power in small characteristic).
Subspace nilradical_commutative(const FDAlgebra& a);

bool is_two_sided_ideal(const FDAlgebra& a, const Subspace& s);
bool is_left_ideal(const FDAlgebra& a, const Subspace& s);
/// Smallest two-sided ideal containing the given vectors.
Subspace two_sided_ideal(const FDAlgebra& a, const std::vector<Vec>& gens);
/// Product of two subspaces (span of all x·y).
Subspace product_space(const FDAlgebra& a, const Subspace& x, const Subspace& y);

struct Quotient {
    FDAlgebra alg;
    Subspace ideal;
    std::vector<size_t> cols;  // original coordinates kept as quotient basis
    Vec project(const Vec& x) const;
    Vec lift(const Vec& y) const;
};
Quotient quotient(const FDAlgebra& a, const Subspace& ideal);

Subspace center(const FDAlgebra& a);
/// Minimal polynomial of w inside the subalgebra with identity e (e w = w e = w).
UPoly element_minpoly(const FDAlgebra& a, const Vec& e, const Vec& w);

struct Block {
    size_t block_dim = 0;
    int center_degree = 1;
    std::optional<size_t> simple_dim;  // empty = "nonsplit"
    Vec idempotent;                    // central idempotent in the semisimple quotient
    std::vector<Vec> simple_module;    // minimal left ideal (quotient coordinates)
};

struct Wedderburn {
    Subspace radical;
    Quotient semisimple;
    std::vector<Block> blocks;
};

Wedderburn wedderburn(const FDAlgebra& a);
Wedderburn wedderburn_with_radical(const FDAlgebra& a, const Subspace& rad);

/// Maximal ideals as subspaces; throws NonSplitBlock for a non-split factor.
std::vector<Subspace> maximal_ideals_commutative(const FDAlgebra& a);

struct FrobeniusReport {
    bool frobenius = false;
    Vec witness;              // λ as coefficients on the dual basis
    std::vector<Vec> socle;   // proof when not Frobenius
    size_t socle_dim = 0;
    size_t semisimple_dim = 0;
};
FrobeniusReport is_frobenius_commutative(const FDAlgebra& a);
/// Nondegeneracy of (x, y) ↦ λ(xy).
bool frobenius_form_nondegenerate(const FDAlgebra& a, const Vec& lambda);

/// The finite-dimensional quotient k[X]/I on its standard-monomial basis.
FDAlgebra fdalgebra_of(const AffineAlgebra& a);

// Small builders used by fixtures and tests.
FDAlgebra truncated_polynomial(const FieldDescriptor& f, size_t n);  // k[v]/vⁿ
FDAlgebra product_of_fields(const FieldDescriptor& f, size_t copies);  // k × … × k
FDAlgebra group_algebra_of_table(const FieldDescriptor& f, const std::vector<std::vector<size_t>>& table);

}  // namespace hopforbit
