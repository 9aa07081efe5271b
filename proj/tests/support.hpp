#pragma once

#include <random>
#include <vector>

#include "griess/structure_algebra.hpp"

namespace griess::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234u);
    return g;
}

inline Rational small_rational(std::mt19937_64& g, long range = 9, long max_den = 5) {
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(g), den(g));
}

// a few nonzero coordinates, the rest zero
inline AlgebraElement random_element(const AlgebraPtr& alg, std::mt19937_64& g, std::size_t terms = 4) {
    QVector v(alg->dim());
    std::uniform_int_distribution<std::size_t> pick(0, alg->dim() - 1);
    for (std::size_t i = 0; i < terms; ++i) v[pick(g)] += small_rational(g);
    return AlgebraElement(alg, std::move(v));
}

inline QMatrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, long range = 4) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(g, range, 3);
    return m;
}

// random matrix of rank at most r: product of rows x r and r x cols factors
inline QMatrix random_low_rank(std::mt19937_64& g, std::size_t rows, std::size_t cols, std::size_t r) {
    return random_matrix(g, rows, r, 3) * random_matrix(g, r, cols, 3);
}

}  // namespace griess::testing
