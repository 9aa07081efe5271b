#include "griess/qmatrix.hpp"

#include <algorithm>
#include <utility>

#include "griess/error.hpp"
#include "griess/modular.hpp"

namespace griess {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw InvalidArgument("QMatrix::from_rows: ragged rows");
        }
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns, std::size_t rows) {
    QMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) {
            throw InvalidArgument("QMatrix::from_columns: column length mismatch");
        }
        for (std::size_t i = 0; i < rows; ++i) {
            m(i, j) = columns[j][i];
        }
    }
    return m;
}

QVector QMatrix::column(std::size_t j) const {
    QVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        c[i] = (*this)(i, j);
    }
    return c;
}

QVector QMatrix::operator*(const QVector& v) const {
    if (v.size() != cols_) {
        throw InvalidArgument("QMatrix * vector: dimension mismatch");
    }
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& a = (*this)(i, j);
            if (!griess::is_zero(a) && !griess::is_zero(v[j])) {
                acc += a * v[j];
            }
        }
        out[i] = std::move(acc);
    }
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) {
        throw InvalidArgument("QMatrix * QMatrix: dimension mismatch");
    }
    QMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (griess::is_zero(a)) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                if (!griess::is_zero(other(k, j))) {
                    out(i, j) += a * other(k, j);
                }
            }
        }
    }
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

bool QMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return griess::is_zero(x); });
}

namespace {

// row[i] -= factor * row[r], starting at column `from`.
void subtract_multiple(QMatrix& m, std::size_t i, std::size_t r, const Rational& factor,
                       std::size_t from) {
    auto target = m.row(i);
    auto source = m.row(r);
    Rational tmp;
    for (std::size_t j = from; j < m.cols(); ++j) {
        if (!is_zero(source[j])) {
            tmp = factor * source[j];
            target[j] -= tmp;
        }
    }
}

void swap_rows(QMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    auto ra = m.row(a);
    auto rb = m.row(b);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(ra[j], rb[j]);
    }
}

}  // namespace

RowEchelonForm reduced_row_echelon(QMatrix m) {
    RowEchelonForm out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        swap_rows(m, r, p);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            if (!is_zero(m(r, j))) {
                m(r, j) *= inv;
            }
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && !is_zero(m(i, c))) {
                const Rational factor = m(i, c);
                subtract_multiple(m, i, r, factor, c);
            }
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank_rational_gauss(const QMatrix& input) {
    QMatrix m = input;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        swap_rows(m, r, p);
        const Rational inv = 1 / m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (!is_zero(m(i, c))) {
                const Rational factor = m(i, c) * inv;
                subtract_multiple(m, i, r, factor, c);
            }
        }
        ++r;
    }
    return r;
}

std::size_t rank_fraction_free(const QMatrix& input) {
    const std::size_t rows = input.rows();
    const std::size_t cols = input.cols();
    std::vector<Integer> m(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Integer den = 1;
        for (const auto& x : input.row(i)) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& x = input(i, j);
            m[i * cols + j] = x.get_num() * (den / x.get_den());
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * cols + j]; };

    Integer previous = 1;
    Integer t1;
    Integer t2;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(at(p, c)) == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(at(p, j), at(r, j));
            }
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                t1 = at(r, c) * at(i, j);
                t2 = at(i, c) * at(r, j);
                t1 -= t2;
                mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), previous.get_mpz_t());
            }
            at(i, c) = 0;
        }
        previous = at(r, c);
        ++r;
    }
    return r;
}

std::size_t rank(const QMatrix& m) {
    const std::size_t full = std::min(m.rows(), m.cols());
    if (full == 0) {
        return 0;
    }
    for (const auto p : modular::primes) {
        if (auto rp = modular::rank_mod(m, p)) {
            if (*rp == full) {
                return full;
            }
            break;
        }
    }
    return rank_rational_gauss(m);
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    const RowEchelonForm ref = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ref.pivot_columns) {
        is_pivot[c] = true;
    }
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        QVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < ref.pivot_columns.size(); ++i) {
            v[ref.pivot_columns[i]] = -ref.reduced(i, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (b.size() != a.rows()) {
        throw InvalidArgument("solve: right-hand side has wrong length");
    }
    QMatrix augmented(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::copy(a.row(i).begin(), a.row(i).end(), augmented.row(i).begin());
        augmented(i, a.cols()) = b[i];
    }
    const RowEchelonForm ref = reduced_row_echelon(std::move(augmented));
    QVector x(a.cols());
    for (std::size_t i = 0; i < ref.pivot_columns.size(); ++i) {
        const std::size_t c = ref.pivot_columns[i];
        if (c == a.cols()) {
            return std::nullopt;
        }
        x[c] = ref.reduced(i, a.cols());
    }
    return x;
}

std::size_t span_rank(const std::vector<QVector>& vectors) {
    if (vectors.empty()) {
        return 0;
    }
    return rank(QMatrix::from_rows(vectors));
}

bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b) {
    const std::size_t ra = span_rank(a);
    if (ra != span_rank(b)) {
        return false;
    }
    std::vector<QVector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_rank(both) == ra;
}

SpanCoordinates::SpanCoordinates(std::vector<QVector> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) {
        return;
    }
    const std::size_t k = basis_.size();
    const RowEchelonForm ref = reduced_row_echelon(QMatrix::from_rows(basis_));
    if (ref.pivot_columns.size() != k) {
        throw InvalidArgument("SpanCoordinates: basis vectors are linearly dependent");
    }
    pivot_rows_ = ref.pivot_columns;

    // Invert the k x k block of the column matrix on the pivot coordinates.
    QMatrix block(k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            block(i, j) = basis_[j][pivot_rows_[i]];
        }
        block(i, k + i) = 1;
    }
    const RowEchelonForm inv = reduced_row_echelon(std::move(block));
    pivot_inverse_ = QMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            pivot_inverse_(i, j) = inv.reduced(i, k + j);
        }
    }
}

std::optional<QVector> SpanCoordinates::coordinates(const QVector& target) const {
    const std::size_t k = basis_.size();
    if (k == 0) {
        return griess::is_zero(target) ? std::optional<QVector>(QVector{}) : std::nullopt;
    }
    if (target.size() != basis_.front().size()) {
        throw InvalidArgument("SpanCoordinates: target has wrong length");
    }
    QVector restricted(k);
    for (std::size_t i = 0; i < k; ++i) {
        restricted[i] = target[pivot_rows_[i]];
    }
    QVector coords = pivot_inverse_ * restricted;

    QVector rebuilt(target.size());
    for (std::size_t j = 0; j < k; ++j) {
        if (griess::is_zero(coords[j])) {
            continue;
        }
        for (std::size_t i = 0; i < target.size(); ++i) {
            if (!griess::is_zero(basis_[j][i])) {
                rebuilt[i] += coords[j] * basis_[j][i];
            }
        }
    }
    if (rebuilt != target) {
        return std::nullopt;
    }
    return coords;
}

}  // namespace griess
