#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "griess/root_system.hpp"
#include "griess/structure_algebra.hpp"

namespace griess {

/// A(Phi) with basis t(alpha) for all positive roots followed by u(alpha), or
/// its subalgebra T(Phi) spanned by the t(alpha) alone.
class RootAlgebra {
public:
    const RootSystem& system() const { return *rs_; }
    const std::shared_ptr<const RootSystem>& system_ptr() const { return rs_; }
    const AlgebraPtr& algebra() const { return alg_; }
    bool t_only() const { return t_only_; }
    std::size_t dim() const { return alg_->dim(); }

    std::size_t t_index(std::size_t root) const { return root; }
    /// Throws InvalidArgument for T(Phi).
    std::size_t u_index(std::size_t root) const;

    AlgebraElement t(std::size_t root) const { return AlgebraElement::basis(alg_, t_index(root)); }
    AlgebraElement u(std::size_t root) const { return AlgebraElement::basis(alg_, u_index(root)); }

    friend RootAlgebra build_A(std::shared_ptr<const RootSystem> rs);
    friend RootAlgebra build_T(std::shared_ptr<const RootSystem> rs);

private:
    std::shared_ptr<const RootSystem> rs_;
    AlgebraPtr alg_;
    bool t_only_ = false;
};

RootAlgebra build_A(std::shared_ptr<const RootSystem> rs);
RootAlgebra build_T(std::shared_ptr<const RootSystem> rs);
inline RootAlgebra build_A(const RootSystem& rs) { return build_A(std::make_shared<const RootSystem>(rs)); }
inline RootAlgebra build_T(const RootSystem& rs) { return build_T(std::make_shared<const RootSystem>(rs)); }

/// sum over components of (1/4h) sum (t + u), each component with its own h.
/// Throws InvalidArgument on T(Phi).
AlgebraElement delta(const RootAlgebra& ra);
/// Same, restricted to one component.
AlgebraElement component_delta(const RootAlgebra& ra, std::size_t component);
/// sum over components of (1/(2h+4)) sum t.
AlgebraElement epsilon(const RootAlgebra& ra);
/// The epsilon of the sub-system generated by some simple roots, written in
/// ra's basis.
AlgebraElement subsystem_epsilon(const RootAlgebra& ra, const std::vector<std::size_t>& simple_subset);

struct DecompositionChecks {
    bool sum_to_identity = false;
    bool idempotent = false;
    bool orthogonal = false;       // e_i e_j = 0 for i != j
    bool form_orthogonal = false;  // <e_i, e_j> = 0 for i != j
    std::optional<bool> charges_match;  // only when a formula is known
    std::optional<bool> associative;    // span test, when requested
    std::string first_failure;

    bool ok() const {
        return sum_to_identity && idempotent && orthogonal && form_orthogonal &&
               charges_match.value_or(true) && associative.value_or(true);
    }
};

struct DecompositionReport {
    std::vector<AlgebraElement> idempotents;
    std::vector<Rational> charges;
    std::vector<std::optional<Rational>> expected_charges;
    std::vector<std::string> labels;  // e.g. "0:e1" (component 0, first step)
    std::string chain_description;
    DecompositionChecks checks;

    bool ok() const { return checks.ok(); }
};

/// 1 - 6/((i+2)(i+3)).
Rational discrete_series_charge(long i);
/// 2l/(l+3).
Rational parafermion_charge(long l);

/// Coset chain on every component: e_i = eps_i - eps_{i-1} along the
/// sub-systems generated by the first i simple roots, then delta_c - eps_l.
/// Every component must be of type A. Requires A(Phi).
DecompositionReport coset_chain_decompose(const RootAlgebra& ra, bool check_associativity = true);

/// The same construction along a user-supplied nested chain of simple-root
/// subsets (global indices). Empty subsets are ignored; an empty chain gives
/// the single idempotent delta. Charges are reported, not compared.
DecompositionReport generalized_chain_decompose(const RootAlgebra& ra,
                                                const std::vector<std::vector<std::size_t>>& chain,
                                                bool check_associativity = true);

/// The prefix chain {1}, {1,2}, ..., {1..l} of one component, as global simple
/// indices.
std::vector<std::vector<std::size_t>> prefix_chain(const RootSystem& rs, std::size_t component);

/// Per-component prefix chains, each closed by its component delta. For type A
/// this is coset_chain_decompose; other families get charges unasserted.
DecompositionReport componentwise_chain_decompose(const RootAlgebra& ra, bool check_associativity = true);

}  // namespace griess
