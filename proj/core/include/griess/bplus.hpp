#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "griess/qmatrix.hpp"
#include "griess/root_algebra.hpp"
#include "griess/structure_algebra.hpp"

namespace griess {

/// B^+ = S^2(H) + sum of Q x_alpha. S^2(H) uses the products s_a s_b (a <= b)
/// of the simple roots, whose Gram matrix is the Cartan matrix; x_alpha follow
/// in positive-root order.
class BPlusAlgebra {
public:
    const RootSystem& system() const { return *rs_; }
    const std::shared_ptr<const RootSystem>& system_ptr() const { return rs_; }
    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return alg_->dim(); }

    std::size_t sym_dim() const { return sym_dim_; }
    /// Index of s_a s_b (either order).
    std::size_t sym_index(std::size_t a, std::size_t b) const;
    std::size_t x_index(std::size_t root) const { return sym_dim_ + root; }

    /// sum over components of l_c(l_c+1)/2 + N_c: the dimension of the
    /// subalgebra without the products s_a s_b across components. Equals
    /// dim() for a simple system.
    std::size_t component_sum_dim() const;
    /// True for s_a s_b with a, b in different components.
    bool is_cross_term(std::size_t index) const;

    /// alpha^2 expanded in the s_a s_b basis.
    SparseVector root_square(std::size_t root) const;
    AlgebraElement x(std::size_t root) const { return AlgebraElement::basis(alg_, x_index(root)); }

    friend BPlusAlgebra build_bplus(std::shared_ptr<const RootSystem> rs);

private:
    std::shared_ptr<const RootSystem> rs_;
    AlgebraPtr alg_;
    std::size_t sym_dim_ = 0;
};

BPlusAlgebra build_bplus(std::shared_ptr<const RootSystem> rs);
inline BPlusAlgebra build_bplus(const RootSystem& rs) { return build_bplus(std::make_shared<const RootSystem>(rs)); }

/// t(alpha) -> alpha^2/2 - x_alpha, u(alpha) -> alpha^2/2 + x_alpha.
class PhiMap {
public:
    const RootAlgebra& domain() const { return domain_; }
    const BPlusAlgebra& codomain() const { return codomain_; }
    /// dim B^+ x dim A; column j is the image of basis vector j.
    const QMatrix& matrix() const { return matrix_; }
    const SparseVector& image_of_basis(std::size_t j) const { return images_.at(j); }
    AlgebraElement apply(const AlgebraElement& a) const;

    friend PhiMap build_phi(const RootAlgebra& ra, const BPlusAlgebra& bp);

private:
    PhiMap(RootAlgebra ra, BPlusAlgebra bp) : domain_(std::move(ra)), codomain_(std::move(bp)) {}

    RootAlgebra domain_;
    BPlusAlgebra codomain_;
    std::vector<SparseVector> images_;
    QMatrix matrix_;
};

/// Throws InvalidArgument unless ra is A(Phi) over the same root system as bp.
PhiMap build_phi(const RootAlgebra& ra, const BPlusAlgebra& bp);

struct ClauseResult {
    std::string description;
    bool pass = false;
    std::string counterexample;
};

struct PhiReport {
    ClauseResult homomorphism;
    ClauseResult isometry;
    ClauseResult surjective;
    std::size_t map_rank = 0;
    std::size_t target_dimension = 0;  // dim of the component sum of B+
    std::size_t kernel_dimension = 0;
    std::size_t radical_dimension = 0;
    bool kernel_is_radical = false;
    bool bijective = false;

    bool ok() const { return homomorphism.pass && isometry.pass && surjective.pass; }
};

/// Homomorphism and isometry over every pair of basis vectors of A(Phi),
/// surjectivity onto the component sum of B+ by exact rank (all of B+ for a
/// simple system), and the kernel compared with the radical of the form on
/// A(Phi). `threads` = 0 picks the hardware concurrency.
PhiReport verify_theorem_3_1(const PhiMap& phi, unsigned threads = 0);

}  // namespace griess
