#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "griess/qmatrix.hpp"
#include "griess/rational.hpp"

namespace griess {

enum class Family { A, D, E };

/// An irreducible simply-laced Cartan type: A_l (l >= 1), D_l (l >= 4) or
/// E_6, E_7, E_8.
struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    /// Throws InvalidArgument for an impossible rank.
    void validate() const;
    std::string name() const;  // "A2", "D4", "E8"
    int coxeter_number() const;
    int positive_root_count() const;

    friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Parses "A2", "D4", "A1^24", "A2*12+E6", "A5^4D4" into an ordered component
/// list. Throws InvalidArgument on malformed text or invalid ranks.
std::vector<SimpleType> parse_system_spec(std::string_view text);

/// Inverse of parse_system_spec: runs of equal types collapse to "X^k",
/// different types are joined with '+'.
std::string format_system_spec(const std::vector<SimpleType>& components);

/// A positive root. `coefficients` expresses it in the simple roots of its
/// own component; `coordinates` is its position in that component's ambient
/// coordinate block.
struct Root {
    std::size_t component = 0;
    std::vector<int> coefficients;
    QVector coordinates;

    int height() const;
    friend bool operator==(const Root&, const Root&) = default;
};

/// Indices (into RootSystem::positive_roots()) of the three cells of the
/// partition determined by a positive root alpha.
struct DeltaPartition {
    std::size_t delta0 = 0;             // alpha itself
    std::vector<std::size_t> delta1;    // (alpha, beta) != 0, beta != alpha
    std::vector<std::size_t> delta2;    // (alpha, beta) == 0
};

struct SubsystemEmbedding;

/// A simply-laced root system, possibly a direct sum of simple components.
/// Immutable once built; positive roots are stored component-major and, inside
/// a component, in lexicographic order of their simple-root coefficients.
class RootSystem {
public:
    /// Builds the system from explicit coordinate models: A_l as e_i - e_j,
    /// D_l as +-e_i +- e_j, E_8 in the even coordinate model and E_7, E_6 as
    /// the subsystems of E_8 spanned by Bourbaki simple roots 1..7 and 1..6.
    /// Throws InvalidArgument for invalid ranks or an empty list.
    static RootSystem build(const std::vector<SimpleType>& components);
    static RootSystem build(std::string_view spec) { return build(parse_system_spec(spec)); }

    const std::vector<SimpleType>& components() const { return components_; }
    std::size_t component_count() const { return components_.size(); }
    std::string spec() const { return format_system_spec(components_); }

    /// Total rank l.
    std::size_t rank() const { return simple_.size(); }
    /// Number of positive roots N.
    std::size_t positive_root_count() const { return roots_.size(); }
    int coxeter_number(std::size_t component) const { return components_.at(component).coxeter_number(); }

    const std::vector<Root>& positive_roots() const { return roots_; }
    const Root& root(std::size_t i) const { return roots_.at(i); }
    std::size_t component_of(std::size_t i) const { return roots_[i].component; }
    /// Half-open index range of component c's positive roots.
    std::pair<std::size_t, std::size_t> component_range(std::size_t c) const;

    /// Indices of the simple roots, component-major, each component in its
    /// Bourbaki order.
    const std::vector<std::size_t>& simple_roots() const { return simple_; }
    /// Half-open range of component c's simple roots inside simple_roots().
    std::pair<std::size_t, std::size_t> simple_range(std::size_t c) const;

    /// (alpha_i, alpha_j) for positive roots i, j.
    int inner(std::size_t i, std::size_t j) const {
        return inner_[i * roots_.size() + j];
    }
    /// Exact inner product of two roots given by value (0 across components).
    static Rational inner(const Root& a, const Root& b);

    /// alpha ~ beta: (alpha, beta) != 0 and alpha != beta.
    bool related(std::size_t i, std::size_t j) const { return i != j && inner(i, j) != 0; }

    std::optional<std::size_t> find(const Root& r) const;
    /// Throws InvalidArgument if r is not a positive root of this system.
    std::size_t index_of(const Root& r) const;
    /// Index of the positive root with the given component-local coefficients.
    std::optional<std::size_t> find(std::size_t component, const std::vector<int>& coefficients) const;

    /// Coefficient vector of root i in all l simple roots.
    std::vector<int> global_coefficients(std::size_t i) const;
    /// Gram matrix of the simple roots (block-diagonal Cartan matrix).
    QMatrix cartan_matrix() const;

    DeltaPartition delta_partition(std::size_t alpha) const;
    /// Throws InvalidArgument if alpha is not a positive root.
    DeltaPartition delta_partition(const Root& alpha) const { return delta_partition(index_of(alpha)); }

    /// The unique positive gamma with alpha ~ gamma ~ beta; it is one of
    /// alpha + beta, alpha - beta, beta - alpha. Throws InvalidArgument unless
    /// alpha ~ beta inside one component.
    std::size_t triple(std::size_t alpha, std::size_t beta) const;
    Root triple(const Root& alpha, const Root& beta) const {
        return roots_[triple(index_of(alpha), index_of(beta))];
    }

    /// Sub-system generated by a set of simple roots (indices into
    /// simple_roots()). Components are the connected pieces of the induced
    /// Dynkin diagram, ordered by their smallest simple index.
    SubsystemEmbedding subsystem(std::vector<std::size_t> simple_subset) const;

    /// Short human label, e.g. "2|1,1" for the root alpha_1 + alpha_2 of component 2.
    std::string root_label(std::size_t i) const;

private:
    RootSystem() = default;
    // Finishes construction from components_ and roots_ (coefficients, coordinates,
    // component indices filled in, simple roots included): sorts, indexes and
    // verifies the invariants.
    void finalize();
    static std::string key(std::size_t component, const std::vector<int>& coefficients);

    std::vector<SimpleType> components_;
    std::vector<Root> roots_;
    std::vector<std::size_t> component_begin_;  // size = components + 1
    std::vector<std::size_t> simple_;
    std::vector<std::size_t> simple_begin_;     // size = components + 1
    std::vector<std::int8_t> inner_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

struct SubsystemEmbedding {
    RootSystem system;
    std::vector<std::size_t> simple_subset;  // parent simple indices generating it
    std::vector<std::size_t> parent_index;   // positive root i of system -> parent index
};

/// Phi_1 subset Phi_2 subset ... subset Phi_l where Phi_i is generated by the
/// first i simple roots. Throws InvalidArgument unless rs is simple of type A.
std::vector<SubsystemEmbedding> subsystem_chain(const RootSystem& rs);

}  // namespace griess
