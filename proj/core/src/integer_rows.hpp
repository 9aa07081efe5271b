#pragma once

// Structure constants as machine integers, for algebras whose constants are
// all integral and small. Sums are accumulated in __int128 so the kernels are
// exact whenever the inputs are bounded by `limit`.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "griess/rational.hpp"

namespace griess::detail {

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

inline constexpr std::int64_t limit = std::int64_t{1} << 31;

struct IntegerRows {
    struct Entry {
        std::uint32_t other;
        std::vector<std::pair<std::uint32_t, std::int64_t>> value;
    };
    std::vector<std::vector<Entry>> rows;
};

using IntSparse = std::vector<std::pair<std::uint32_t, std::int64_t>>;

inline std::optional<std::int64_t> small_integer(const Rational& x) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return std::nullopt;
    const long v = x.get_num().get_si();
    if (v >= limit || v <= -limit) return std::nullopt;
    return v;
}

inline Integer to_integer(Wide v) {
    const bool neg = v < 0;
    const UWide u = neg ? static_cast<UWide>(-(v + 1)) + 1 : static_cast<UWide>(v);
    Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    Integer out = (hi << 64) + lo;
    return neg ? Integer(-out) : out;
}

// Scales a rational vector by its common denominator; nullopt if the scaled
// entries are not small.
inline std::optional<std::pair<IntSparse, Integer>> scale_to_integers(const std::vector<std::pair<std::size_t, Rational>>& v) {
    Integer den = 1;
    for (const auto& [i, x] : v) den = lcm(den, Integer(x.get_den()));
    IntSparse out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) {
        const Rational scaled = x * Rational(den);
        auto s = small_integer(scaled);
        if (!s) return std::nullopt;
        out.emplace_back(static_cast<std::uint32_t>(i), *s);
    }
    return std::make_pair(std::move(out), den);
}

// Dense scratch space for accumulating one product.
struct Accumulator {
    std::vector<Wide> acc;
    std::vector<std::uint32_t> touched;
    std::vector<char> mark;

    explicit Accumulator(std::size_t n) : acc(n, 0), mark(n, 0) {}

    void add(std::uint32_t k, Wide v) {
        if (!mark[k]) {
            mark[k] = 1;
            touched.push_back(k);
        }
        acc[k] += v;
    }
    void clear() {
        for (auto k : touched) {
            acc[k] = 0;
            mark[k] = 0;
        }
        touched.clear();
    }
};

}  // namespace griess::detail
