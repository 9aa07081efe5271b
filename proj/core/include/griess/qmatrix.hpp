#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "griess/rational.hpp"

namespace griess {

/// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);
    /// Every row must have the same length.
    static QMatrix from_rows(const std::vector<QVector>& rows);
    /// The vectors become the columns; each must have length `rows`.
    static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    QVector column(std::size_t j) const;

    QVector operator*(const QVector& v) const;
    QMatrix operator*(const QMatrix& other) const;
    QMatrix transposed() const;

    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelonForm {
    QMatrix reduced;                         // reduced row echelon form
    std::vector<std::size_t> pivot_columns;  // one per nonzero row, increasing
};

/// Gauss-Jordan elimination over the rationals.
RowEchelonForm reduced_row_echelon(QMatrix m);

/// Exact rank. Full rank is certified by a nonzero minor modulo a prime;
/// anything else falls through to rational elimination.
std::size_t rank(const QMatrix& m);

/// Plain rational Gaussian elimination.
std::size_t rank_rational_gauss(const QMatrix& m);

/// Bareiss fraction-free elimination on the integer matrix obtained by
/// clearing each row's denominators.
std::size_t rank_fraction_free(const QMatrix& m);

/// Basis of the right null space; every vector v satisfies m * v == 0.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Some x with a * x == b, or nullopt when the system is inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

/// Rank of the span of a list of vectors of equal length.
std::size_t span_rank(const std::vector<QVector>& vectors);

/// True iff the two lists span the same subspace.
bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b);

/// Coordinates of target in the (independent) basis `basis`, or nullopt when
/// target is outside the span.
class SpanCoordinates {
public:
    /// Throws InvalidArgument if the basis vectors are linearly dependent.
    explicit SpanCoordinates(std::vector<QVector> basis);

    std::size_t dimension() const { return basis_.size(); }
    std::optional<QVector> coordinates(const QVector& target) const;

private:
    std::vector<QVector> basis_;
    std::vector<std::size_t> pivot_rows_;  // ambient coordinates that determine a combination
    QMatrix pivot_inverse_;                // inverse of basis restricted to pivot_rows_
};

}  // namespace griess
