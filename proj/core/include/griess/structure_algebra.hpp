#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "griess/error.hpp"
#include "griess/qmatrix.hpp"
#include "griess/rational.hpp"

namespace griess {

namespace detail {
struct IntegerRows;
}

struct Term {
    std::size_t index = 0;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

SparseVector to_sparse(const QVector& dense);
QVector to_dense(const SparseVector& sparse, std::size_t dim);

/// A finite-dimensional commutative algebra over Q given by structure
/// constants on a labelled basis, together with a symmetric bilinear form.
/// Immutable; shared between elements through AlgebraPtr.
class StructureAlgebra {
public:
    /// One nonzero product b_i * b_j seen from row i.
    struct Entry {
        std::size_t other = 0;
        SparseVector value;
    };

    class Builder {
    public:
        explicit Builder(std::vector<std::string> labels);

        std::size_t dim() const { return labels_.size(); }
        /// b_i * b_j += coeff * b_k (and symmetrically b_j * b_i).
        void add_product(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff);
        /// <b_i, b_j> = <b_j, b_i> = value.
        void set_form(std::size_t i, std::size_t j, const Rational& value);

        std::shared_ptr<const StructureAlgebra> build() &&;

    private:
        std::vector<std::string> labels_;
        std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> products_;
        std::map<std::pair<std::size_t, std::size_t>, Rational> form_;
    };

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    /// All nonzero products b_i * b_j, sorted by j.
    std::span<const Entry> row(std::size_t i) const { return rows_.at(i); }
    /// b_i * b_j in the basis (empty when zero).
    const SparseVector& product(std::size_t i, std::size_t j) const;

    const QMatrix& gram() const { return gram_; }
    /// Nonzero entries of row i of the Gram matrix.
    std::span<const Term> gram_row(std::size_t i) const { return gram_rows_.at(i); }

    std::size_t nonzero_products() const;

    /// The structure constants as machine integers when they all are small
    /// integers, else null.
    const detail::IntegerRows* integer_rows() const { return integer_rows_.get(); }

private:
    StructureAlgebra() = default;

    std::vector<std::string> labels_;
    std::vector<std::vector<Entry>> rows_;
    QMatrix gram_;
    std::vector<SparseVector> gram_rows_;
    std::shared_ptr<const detail::IntegerRows> integer_rows_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

/// Raised when two elements of different algebras are combined.
class AlgebraMismatch : public InvalidArgument {
public:
    AlgebraMismatch() : InvalidArgument("elements belong to different algebras") {}
};

/// A value-type element of a StructureAlgebra: dense rational coordinates in
/// the algebra's basis.
class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraPtr algebra);
    AlgebraElement(AlgebraPtr algebra, QVector coefficients);
    AlgebraElement(AlgebraPtr algebra, const SparseVector& coefficients);

    static AlgebraElement basis(AlgebraPtr algebra, std::size_t i);

    const StructureAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    std::size_t dim() const { return coefficients_.size(); }

    const QVector& coefficients() const { return coefficients_; }
    const Rational& operator[](std::size_t i) const { return coefficients_.at(i); }
    SparseVector sparse() const { return to_sparse(coefficients_); }
    bool is_zero() const { return griess::is_zero(coefficients_); }

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& scalar);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
    AlgebraElement operator-() const { return *this * Rational(-1); }

    /// Same algebra and equal coefficients.
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.algebra_ == b.algebra_ && a.coefficients_ == b.coefficients_;
    }

private:
    void require_same(const AlgebraElement& other) const;

    AlgebraPtr algebra_;
    QVector coefficients_;
};

/// Bilinear extension of the structure constants.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
Rational form(const AlgebraElement& a, const AlgebraElement& b);
/// c(a) = 8 <a, a>.
Rational central_charge(const AlgebraElement& a);

bool is_idempotent(const AlgebraElement& a);
/// a * b == 0 and <a, b> == 0.
bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b);
/// <a b, c> == <a, b c>.
bool form_is_invariant_on(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c);

/// Solves x * b_i = b_i for every basis vector exactly; returns the unique
/// solution, or nullopt if the algebra has no identity.
std::optional<AlgebraElement> find_identity(const AlgebraPtr& algebra);

/// dim - rank(gram).
std::size_t radical_dimension(const StructureAlgebra& algebra);

/// Outcome of testing whether a list of elements spans an associative
/// subalgebra.
struct SpanReport {
    std::size_t dimension = 0;
    bool independent = false;
    std::optional<QVector> dependency;  // nonzero relation sum c_i x_i = 0
    bool closed = false;
    std::optional<std::pair<std::size_t, std::size_t>> escaping_product;
    bool associative = false;
    std::optional<std::array<std::size_t, 3>> failing_triple;

    bool ok() const { return independent && closed && associative; }
};

/// Checks independence, closure under multiplication and (xy)z = x(yz) for
/// every ordered triple of spanning elements.
SpanReport check_associative_span(std::span<const AlgebraElement> elements);

/// Raised by is_associative_span() when the spanning elements are dependent.
class DependentElements : public InvalidArgument {
public:
    explicit DependentElements(QVector relation);
    const QVector& relation() const { return relation_; }

private:
    QVector relation_;
};

/// True iff the (independent) elements span an associative subalgebra.
/// Throws DependentElements carrying the linear relation otherwise.
bool is_associative_span(std::span<const AlgebraElement> elements);

}  // namespace griess
