#pragma once

#include <cstddef>
#include <vector>

#include "griess/f2matrix.hpp"
#include "griess/rational.hpp"

namespace griess {

/// F_2^{2m} with the plus-type form q(x) = sum x_{2i} x_{2i+1}.
class F2QuadSpace {
public:
    static constexpr std::size_t max_dim = 64;

    /// Throws InvalidArgument for odd or oversized dimension.
    explicit F2QuadSpace(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t witt_index() const { return dim_ / 2; }

    int q(F2Vector x) const;
    /// b(x, y) = q(x + y) - q(x) - q(y).
    int polar(F2Vector x, F2Vector y) const;
    /// q vanishes on every vector of the span of `rows`.
    bool totally_singular(const std::vector<F2Vector>& rows) const;

private:
    std::size_t dim_;
    F2Vector even_mask_ = 0;
};

/// prod_{i=0}^{n-1} (2^i + 1), 1 for n = 0: how many Lagrangians contain a
/// totally singular subspace of codimension n in a Lagrangian.
Integer lagrangian_extension_count(std::size_t n);

/// Number of totally singular subspaces of each dimension 0..m, found by
/// extending subspaces one singular vector at a time and deduplicating by
/// reduced echelon form. Throws InvalidArgument when dim > 10.
std::vector<Integer> totally_singular_subspace_counts(const F2QuadSpace& space);

/// Maximal totally singular subspaces (dimension m) by the same enumeration.
Integer brute_force_lagrangians(const F2QuadSpace& space);

}  // namespace griess
