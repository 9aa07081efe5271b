#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace griess {

/// A vector over the two-element field with at most 64 coordinates; bit i is
/// coordinate i.
using F2Vector = std::uint64_t;

/// Matrix over the two-element field, one F2Vector per row.
class F2Matrix {
public:
    static constexpr std::size_t max_cols = 64;
    /// Guard on row_space_members(): 2^24 vectors at most.
    static constexpr std::size_t max_enumeration_rows = 24;

    F2Matrix() = default;
    F2Matrix(std::size_t cols, std::vector<F2Vector> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<F2Vector>& row_vectors() const { return rows_; }
    bool get(std::size_t i, std::size_t j) const { return ((rows_[i] >> j) & 1u) != 0; }

    /// Reduced row echelon form with zero rows removed. Pivots are taken at
    /// the lowest set bit, rows ordered by pivot.
    F2Matrix reduced() const;
    std::size_t rank() const;

    /// Every vector of the row space, sorted ascending; exactly 2^rank entries.
    /// Throws InvalidArgument when rows() > max_enumeration_rows.
    std::vector<F2Vector> row_space_members() const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<F2Vector> rows_;
};

inline int f2_dot(F2Vector a, F2Vector b) { return __builtin_parityll(a & b); }

}  // namespace griess
