#include "griess/structure_algebra.hpp"

#include <algorithm>
#include <random>

#include "griess/modular.hpp"
#include "integer_rows.hpp"

namespace griess {

SparseVector to_sparse(const QVector& dense) {
    SparseVector out;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (!is_zero(dense[i])) {
            out.push_back({i, dense[i]});
        }
    }
    return out;
}

QVector to_dense(const SparseVector& sparse, std::size_t dim) {
    QVector out(dim);
    for (const auto& t : sparse) {
        out.at(t.index) += t.coeff;
    }
    return out;
}

// ---------------------------------------------------------------- Builder

StructureAlgebra::Builder::Builder(std::vector<std::string> labels) : labels_(std::move(labels)) {}

void StructureAlgebra::Builder::add_product(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) {
    if (i >= dim() || j >= dim() || k >= dim()) {
        throw InvalidArgument("structure constant index out of range");
    }
    if (is_zero(coeff)) {
        return;
    }
    products_[{std::min(i, j), std::max(i, j)}][k] += coeff;
}

void StructureAlgebra::Builder::set_form(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= dim() || j >= dim()) {
        throw InvalidArgument("form index out of range");
    }
    form_[{std::min(i, j), std::max(i, j)}] = value;
}

std::shared_ptr<const StructureAlgebra> StructureAlgebra::Builder::build() && {
    std::shared_ptr<StructureAlgebra> alg(new StructureAlgebra());
    const std::size_t n = dim();
    alg->labels_ = std::move(labels_);
    alg->rows_.resize(n);
    for (auto& [ij, terms] : products_) {
        SparseVector value;
        for (auto& [k, c] : terms) {
            if (!is_zero(c)) {
                value.push_back({k, c});
            }
        }
        if (value.empty()) {
            continue;
        }
        const auto [i, j] = ij;
        if (i != j) {
            alg->rows_[j].push_back({i, value});
        }
        alg->rows_[i].push_back({j, std::move(value)});
    }
    for (auto& row : alg->rows_) {
        std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.other < b.other; });
    }
    alg->gram_ = QMatrix(n, n);
    alg->gram_rows_.resize(n);
    for (auto& [ij, value] : form_) {
        if (is_zero(value)) {
            continue;
        }
        const auto [i, j] = ij;
        alg->gram_(i, j) = value;
        alg->gram_(j, i) = value;
    }
    for (std::size_t i = 0; i < n; ++i) {
        alg->gram_rows_[i] = to_sparse(QVector(alg->gram_.row(i).begin(), alg->gram_.row(i).end()));
    }
    products_.clear();
    form_.clear();

    auto ints = std::make_shared<detail::IntegerRows>();
    ints->rows.resize(n);
    bool integral = n < (std::size_t{1} << 31);
    for (std::size_t i = 0; i < n && integral; ++i) {
        for (const auto& e : alg->rows_[i]) {
            detail::IntegerRows::Entry ie{static_cast<std::uint32_t>(e.other), {}};
            for (const auto& t : e.value) {
                auto v = detail::small_integer(t.coeff);
                if (!v) {
                    integral = false;
                    break;
                }
                ie.value.emplace_back(static_cast<std::uint32_t>(t.index), *v);
            }
            ints->rows[i].push_back(std::move(ie));
        }
    }
    if (integral) alg->integer_rows_ = std::move(ints);
    return alg;
}

const SparseVector& StructureAlgebra::product(std::size_t i, std::size_t j) const {
    static const SparseVector zero;
    const auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t v) { return e.other < v; });
    if (it == r.end() || it->other != j) {
        return zero;
    }
    return it->value;
}

std::size_t StructureAlgebra::nonzero_products() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& e : rows_[i]) {
            if (e.other >= i) {
                ++count;
            }
        }
    }
    return count;
}

// ---------------------------------------------------------------- elements

AlgebraElement::AlgebraElement(AlgebraPtr algebra)
    : algebra_(std::move(algebra)), coefficients_(algebra_->dim()) {}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, QVector coefficients)
    : algebra_(std::move(algebra)), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != algebra_->dim()) {
        throw InvalidArgument("element has wrong number of coefficients");
    }
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, const SparseVector& coefficients)
    : algebra_(std::move(algebra)), coefficients_(algebra_->dim()) {
    for (const auto& t : coefficients) {
        if (t.index >= coefficients_.size()) {
            throw InvalidArgument("coefficient index out of range");
        }
        coefficients_[t.index] += t.coeff;
    }
}

AlgebraElement AlgebraElement::basis(AlgebraPtr algebra, std::size_t i) {
    AlgebraElement e(std::move(algebra));
    e.coefficients_.at(i) = 1;
    return e;
}

void AlgebraElement::require_same(const AlgebraElement& other) const {
    if (algebra_ != other.algebra_) {
        throw AlgebraMismatch();
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    require_same(other);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (!griess::is_zero(other.coefficients_[i])) {
            coefficients_[i] += other.coefficients_[i];
        }
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    require_same(other);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (!griess::is_zero(other.coefficients_[i])) {
            coefficients_[i] -= other.coefficients_[i];
        }
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
    for (auto& c : coefficients_) {
        if (!griess::is_zero(c)) {
            c *= scalar;
        }
    }
    return *this;
}

namespace {

std::vector<std::pair<std::size_t, Rational>> nonzero(const QVector& v) {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_zero(v[i])) out.emplace_back(i, v[i]);
    }
    return out;
}

std::optional<QVector> multiply_integral(const StructureAlgebra& alg, const QVector& x, const QVector& y) {
    const detail::IntegerRows* rows = alg.integer_rows();
    if (!rows) return std::nullopt;
    auto xs = detail::scale_to_integers(nonzero(x));
    auto ys = detail::scale_to_integers(nonzero(y));
    if (!xs || !ys) return std::nullopt;

    const std::size_t n = alg.dim();
    std::vector<std::int64_t> yv(n, 0);
    for (const auto& [j, v] : ys->first) yv[j] = v;
    detail::Accumulator acc(n);
    for (const auto& [i, xi] : xs->first) {
        for (const auto& e : rows->rows[i]) {
            const std::int64_t yj = yv[e.other];
            if (yj == 0) continue;
            const detail::Wide s = static_cast<detail::Wide>(xi) * yj;
            for (const auto& [k, c] : e.value) acc.add(k, s * c);
        }
    }
    const Integer den = xs->second * ys->second;
    QVector out(n);
    for (auto k : acc.touched) {
        if (acc.acc[k] == 0) continue;
        out[k] = Rational(detail::to_integer(acc.acc[k]), den);
        out[k].canonicalize();
    }
    return out;
}

}  // namespace

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra_ptr() != b.algebra_ptr()) {
        throw AlgebraMismatch();
    }
    const StructureAlgebra& alg = a.algebra();
    const QVector& x = a.coefficients();
    const QVector& y = b.coefficients();
    if (auto fast = multiply_integral(alg, x, y)) {
        return AlgebraElement(a.algebra_ptr(), std::move(*fast));
    }
    QVector out(alg.dim());
    Rational scale;
    Rational tmp;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i])) {
            continue;
        }
        for (const auto& entry : alg.row(i)) {
            const Rational& yj = y[entry.other];
            if (is_zero(yj)) {
                continue;
            }
            scale = x[i] * yj;
            for (const auto& t : entry.value) {
                tmp = scale * t.coeff;
                out[t.index] += tmp;
            }
        }
    }
    return AlgebraElement(a.algebra_ptr(), std::move(out));
}

Rational form(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra_ptr() != b.algebra_ptr()) {
        throw AlgebraMismatch();
    }
    const StructureAlgebra& alg = a.algebra();
    const QVector& x = a.coefficients();
    const QVector& y = b.coefficients();
    Rational acc;
    Rational tmp;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i])) {
            continue;
        }
        for (const auto& t : alg.gram_row(i)) {
            if (!is_zero(y[t.index])) {
                tmp = t.coeff * y[t.index];
                tmp *= x[i];
                acc += tmp;
            }
        }
    }
    return acc;
}

Rational central_charge(const AlgebraElement& a) { return 8 * form(a, a); }

bool is_idempotent(const AlgebraElement& a) { return multiply(a, a) == a; }

bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b).is_zero() && is_zero(form(a, b));
}

bool form_is_invariant_on(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
    return form(multiply(a, b), c) == form(a, multiply(b, c));
}

// ---------------------------------------------------------------- identity

namespace {

// z * b_i for every i, compared against b_i.
bool acts_as_identity(const StructureAlgebra& alg, const QVector& z) {
    const std::size_t n = alg.dim();
    QVector image(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(image.begin(), image.end(), Rational(0));
        for (const auto& entry : alg.row(i)) {
            const Rational& zj = z[entry.other];
            if (is_zero(zj)) {
                continue;
            }
            for (const auto& t : entry.value) {
                image[t.index] += zj * t.coeff;
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (image[k] != (k == i ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

// Incremental exact elimination over every equation (z b_i)_k = delta_ik.
std::optional<QVector> solve_all_equations(const StructureAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<QVector> basis;             // reduced rows, length n + 1
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
        std::map<std::size_t, QVector> equations;  // keyed by output coordinate k
        equations[i] = QVector(n + 1);
        for (const auto& entry : alg.row(i)) {
            for (const auto& t : entry.value) {
                auto& eq = equations[t.index];
                if (eq.empty()) eq.resize(n + 1);
                eq[entry.other] += t.coeff;
            }
        }
        for (auto& [k, eq] : equations) {
            eq[n] = (k == i) ? 1 : 0;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (is_zero(eq[pivots[b]])) continue;
                const Rational f = eq[pivots[b]];
                for (std::size_t c = 0; c <= n; ++c) {
                    if (!is_zero(basis[b][c])) eq[c] -= f * basis[b][c];
                }
            }
            std::size_t p = 0;
            while (p < n && is_zero(eq[p])) ++p;
            if (p == n) {
                if (!is_zero(eq[n])) return std::nullopt;  // 0 = nonzero
                continue;
            }
            const Rational inv = 1 / eq[p];
            for (auto& c : eq) {
                if (!is_zero(c)) c *= inv;
            }
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (is_zero(basis[b][p])) continue;
                const Rational f = basis[b][p];
                for (std::size_t c = 0; c <= n; ++c) {
                    if (!is_zero(eq[c])) basis[b][c] -= f * eq[c];
                }
            }
            basis.push_back(std::move(eq));
            pivots.push_back(p);
            if (basis.size() == n) break;
        }
    }
    QVector z(n);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        z[pivots[b]] = basis[b][n];
    }
    return z;
}

}  // namespace

std::optional<AlgebraElement> find_identity(const AlgebraPtr& algebra) {
    const StructureAlgebra& alg = *algebra;
    const std::size_t n = alg.dim();

    // Collapse the n^2 equations (z b_i)_k = [i == k] to n by a fixed random
    // functional w: w(z b_i) = w(b_i). Any identity solves this square system,
    // so when it is nonsingular its solution is the only candidate.
    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<int> pick(1, 97);
    QVector w(n);
    for (auto& x : w) x = pick(rng);
    QMatrix system(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& entry : alg.row(i)) {
            for (const auto& t : entry.value) system(i, entry.other) += w[t.index] * t.coeff;
        }
    }
    std::optional<QVector> candidate = modular::solve_nonsingular(system, w);
    if (!candidate) {
        candidate = solve_all_equations(alg);
    }
    if (!candidate || !acts_as_identity(alg, *candidate)) {
        return std::nullopt;
    }
    return AlgebraElement(algebra, std::move(*candidate));
}

std::size_t radical_dimension(const StructureAlgebra& algebra) {
    return algebra.dim() - rank(algebra.gram());
}

// ---------------------------------------------------------------- spans

DependentElements::DependentElements(QVector relation)
    : InvalidArgument("spanning elements are linearly dependent"), relation_(std::move(relation)) {}

SpanReport check_associative_span(std::span<const AlgebraElement> elements) {
    SpanReport report;
    const std::size_t k = elements.size();
    if (k == 0) {
        report.independent = report.closed = report.associative = true;
        return report;
    }
    for (const auto& e : elements) {
        if (e.algebra_ptr() != elements.front().algebra_ptr()) {
            throw AlgebraMismatch();
        }
    }
    std::vector<QVector> vectors;
    vectors.reserve(k);
    for (const auto& e : elements) {
        vectors.push_back(e.coefficients());
    }
    const QMatrix columns = QMatrix::from_columns(vectors, elements.front().dim());
    if (rank(columns) != k) {
        report.dimension = rank(columns);
        report.dependency = kernel_basis(columns).front();
        return report;
    }
    report.independent = true;
    report.dimension = k;

    const SpanCoordinates span(vectors);
    // Structure constants of the span: x_i x_j = sum_m c[i][j][m] x_m.
    std::vector<std::vector<SparseVector>> c(k, std::vector<SparseVector>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            const AlgebraElement p = multiply(elements[i], elements[j]);
            auto coords = span.coordinates(p.coefficients());
            if (!coords) {
                report.escaping_product = std::make_pair(i, j);
                return report;
            }
            c[i][j] = to_sparse(*coords);
            c[j][i] = c[i][j];
        }
    }
    report.closed = true;

    QVector left(k);
    QVector right(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t l = 0; l < k; ++l) {
                std::fill(left.begin(), left.end(), Rational(0));
                std::fill(right.begin(), right.end(), Rational(0));
                for (const auto& t : c[i][j]) {        // (x_i x_j) x_l
                    for (const auto& u : c[t.index][l]) left[u.index] += t.coeff * u.coeff;
                }
                for (const auto& t : c[j][l]) {        // x_i (x_j x_l)
                    for (const auto& u : c[i][t.index]) right[u.index] += t.coeff * u.coeff;
                }
                if (left != right) {
                    report.failing_triple = std::array<std::size_t, 3>{i, j, l};
                    return report;
                }
            }
        }
    }
    report.associative = true;
    return report;
}

bool is_associative_span(std::span<const AlgebraElement> elements) {
    const SpanReport r = check_associative_span(elements);
    if (!r.independent) {
        throw DependentElements(*r.dependency);
    }
    return r.ok();
}

}  // namespace griess
