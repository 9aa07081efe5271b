#include "griess/f2matrix.hpp"

#include <algorithm>
#include <string>

#include "griess/error.hpp"

namespace griess {

F2Matrix::F2Matrix(std::size_t cols, std::vector<F2Vector> rows) : cols_(cols), rows_(std::move(rows)) {
    if (cols_ > max_cols) {
        throw InvalidArgument("F2Matrix: at most 64 columns");
    }
    const F2Vector mask = cols_ == 64 ? ~F2Vector{0} : ((F2Vector{1} << cols_) - 1);
    for (auto r : rows_) {
        if ((r & ~mask) != 0) {
            throw InvalidArgument("F2Matrix: row has bits beyond column count");
        }
    }
}

F2Matrix F2Matrix::reduced() const {
    std::vector<F2Vector> basis;
    for (F2Vector v : rows_) {
        for (F2Vector b : basis) {
            const F2Vector pivot = b & (~b + 1);
            if ((v & pivot) != 0) {
                v ^= b;
            }
        }
        if (v == 0) {
            continue;
        }
        const F2Vector pivot = v & (~v + 1);
        for (F2Vector& b : basis) {
            if ((b & pivot) != 0) {
                b ^= v;
            }
        }
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(), [](F2Vector a, F2Vector b) {
        return __builtin_ctzll(a) < __builtin_ctzll(b);
    });
    return F2Matrix(cols_, std::move(basis));
}

std::size_t F2Matrix::rank() const { return reduced().rows(); }

std::vector<F2Vector> F2Matrix::row_space_members() const {
    if (rows_.size() > max_enumeration_rows) {
        throw InvalidArgument("F2Matrix::row_space_members: more than " +
                              std::to_string(max_enumeration_rows) + " rows");
    }
    const auto basis = reduced().rows_;
    std::vector<F2Vector> members(std::size_t{1} << basis.size());
    // Gray-code walk: each step toggles one basis vector.
    F2Vector current = 0;
    members[0] = 0;
    for (std::size_t k = 1; k < members.size(); ++k) {
        current ^= basis[static_cast<std::size_t>(__builtin_ctzll(k))];
        members[k] = current;
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace griess
