#include "griess/f2quad.hpp"

#include <algorithm>
#include <set>

#include "griess/error.hpp"

namespace griess {

F2QuadSpace::F2QuadSpace(std::size_t dim) : dim_(dim) {
    if (dim == 0 || dim % 2 != 0 || dim > max_dim) {
        throw InvalidArgument("quadratic space needs an even dimension in 2..64");
    }
    for (std::size_t i = 0; i < dim; i += 2) even_mask_ |= F2Vector{1} << i;
}

int F2QuadSpace::q(F2Vector x) const {
    return __builtin_parityll(x & (x >> 1) & even_mask_);
}

int F2QuadSpace::polar(F2Vector x, F2Vector y) const {
    return q(x ^ y) ^ q(x) ^ q(y);
}

bool F2QuadSpace::totally_singular(const std::vector<F2Vector>& rows) const {
    for (auto v : F2Matrix(dim_, rows).row_space_members()) {
        if (q(v) != 0) return false;
    }
    return true;
}

Integer lagrangian_extension_count(std::size_t n) {
    Integer out = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, i);
        out *= p + 1;
    }
    return out;
}

std::vector<Integer> totally_singular_subspace_counts(const F2QuadSpace& space) {
    if (space.dim() > 10) throw InvalidArgument("brute-force enumeration is limited to dimension 10");
    const std::size_t n = space.dim();
    std::vector<F2Vector> singular;
    for (F2Vector v = 1; v < (F2Vector{1} << n); ++v) {
        if (space.q(v) == 0) singular.push_back(v);
    }

    std::vector<Integer> counts{1};
    std::set<std::vector<F2Vector>> level{{}};
    for (std::size_t k = 1; k <= space.witt_index(); ++k) {
        std::set<std::vector<F2Vector>> next;
        for (const auto& basis : level) {
            const auto members = F2Matrix(n, basis).row_space_members();
            for (auto v : singular) {
                bool perp = true;
                for (auto b : basis) perp = perp && space.polar(v, b) == 0;
                if (!perp || std::binary_search(members.begin(), members.end(), v)) continue;
                std::vector<F2Vector> rows = basis;
                rows.push_back(v);
                auto canonical = F2Matrix(n, rows).reduced().row_vectors();
                if (next.count(canonical)) continue;
                if (!space.totally_singular(canonical)) throw Error("enumeration produced a non-singular subspace");
                next.insert(std::move(canonical));
            }
        }
        counts.emplace_back(static_cast<unsigned long>(next.size()));
        level = std::move(next);
    }
    return counts;
}

Integer brute_force_lagrangians(const F2QuadSpace& space) {
    return totally_singular_subspace_counts(space).back();
}

}  // namespace griess
