#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "griess/error.hpp"
#include "griess/f2matrix.hpp"
#include "griess/modular.hpp"
#include "griess/qmatrix.hpp"
#include "griess/rational.hpp"
#include "griess/root_algebra.hpp"
#include "support.hpp"

using namespace griess;
using griess::testing::rng;

namespace {

// textbook elimination kept apart from the library
std::size_t naive_rank(std::vector<std::vector<mpq_class>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<mpq_class>> rows_of(const QMatrix& m) {
    std::vector<std::vector<mpq_class>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
    return out;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(make_rational(3, -6)) == "-1/2");
    CHECK(to_string(make_rational(6, 3)) == "2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(make_rational(1, 3) + make_rational(1, 6) == make_rational(1, 2));
    CHECK_THROWS_AS(make_rational(1, 0), InvalidArgument);
}

TEST_CASE("rational text parses back") {
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK(parse_rational("-5") == make_rational(-5));
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK_THROWS_AS(parse_rational("10/-4"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
    CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));

    auto& g = rng();
    for (int i = 0; i < 1000; ++i) {
        const Rational a = testing::small_rational(g, 1000000, 1000000);
        const Rational b = testing::small_rational(g, 1000, 1000);
        CHECK(parse_rational(to_string(a)) == a);
        CHECK((a + b) - b == a);
        if (!is_zero(b)) CHECK((a * b) / b == a);
    }
}

TEST_CASE("common denominator") {
    CHECK(common_denominator({make_rational(1, 4), make_rational(5, 6), make_rational(3)}) == 12);
    CHECK(common_denominator({}) == 1);
}

TEST_CASE("rank of small matrices") {
    CHECK(rank(QMatrix::identity(3)) == 3);
    CHECK(rank(QMatrix(2, 5)) == 0);
    CHECK(kernel_basis(QMatrix::identity(2)).empty());

    QMatrix ones = QMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}});
    CHECK(rank(ones) == 1);
    auto k = kernel_basis(ones);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(!is_zero(k[0]));
}

TEST_CASE("rank methods agree with a naive elimination") {
    auto& g = rng();
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + g() % 9, cols = 1 + g() % 9, r = g() % 6;
        const QMatrix m = r == 0 ? testing::random_matrix(g, rows, cols) : testing::random_low_rank(g, rows, cols, r);
        const std::size_t expect = naive_rank(rows_of(m));
        CHECK(rank(m) == expect);
        CHECK(rank_rational_gauss(m) == expect);
        CHECK(rank_fraction_free(m) == expect);
    }
}

TEST_CASE("rank plus nullity is the column count") {
    auto& g = rng();
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t rows = 1 + g() % 8, cols = 1 + g() % 10;
        const QMatrix m = testing::random_low_rank(g, rows, cols, 1 + g() % 5);
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == cols);
        for (const auto& v : k) CHECK(is_zero(m * v));
        CHECK(span_rank(k) == k.size());
    }
}

TEST_CASE("rank is invariant under row permutation and scaling") {
    auto& g = rng();
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 2 + g() % 7, cols = 2 + g() % 7;
        const QMatrix m = testing::random_low_rank(g, rows, cols, 1 + g() % 4);
        std::vector<std::size_t> perm(rows);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), g);
        QMatrix p(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            Rational s = testing::small_rational(g);
            if (is_zero(s)) s = 3;
            for (std::size_t j = 0; j < cols; ++j) p(i, j) = s * m(perm[i], j);
        }
        CHECK(rank(p) == rank(m));
    }
}

TEST_CASE("reduced row echelon form") {
    QMatrix m = QMatrix::from_rows({{Rational(2), Rational(4), Rational(2)}, {Rational(1), Rational(2), Rational(3)}});
    const auto e = reduced_row_echelon(m);
    CHECK(e.pivot_columns == std::vector<std::size_t>{0, 2});
    CHECK(e.reduced(0, 0) == 1);
    CHECK(e.reduced(0, 1) == 2);
    CHECK(e.reduced(0, 2) == 0);
    CHECK(e.reduced(1, 2) == 1);
}

TEST_CASE("solve and span coordinates") {
    auto& g = rng();
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + g() % 6;
        const QMatrix a = testing::random_matrix(g, n, n);
        QVector x(n);
        for (auto& v : x) v = testing::small_rational(g);
        const QVector b = a * x;
        auto s = solve(a, b);
        REQUIRE(s);
        CHECK(a * *s == b);
        if (rank(a) == n) {
            auto d = modular::solve_nonsingular(a, b);
            REQUIRE(d);
            CHECK(*d == x);
        }
    }
    const QMatrix singular = QMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
    CHECK_FALSE(solve(singular, {Rational(1), Rational(0)}));

    SpanCoordinates sc({{Rational(1), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(1)}});
    auto c = sc.coordinates({Rational(2), make_rational(1, 2), make_rational(5, 2)});
    REQUIRE(c);
    CHECK(*c == QVector{Rational(2), make_rational(1, 2)});
    CHECK_FALSE(sc.coordinates({Rational(1), Rational(0), Rational(0)}));
    CHECK_THROWS_AS(SpanCoordinates({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}), InvalidArgument);
    CHECK(same_span({{Rational(1), Rational(1)}}, {{Rational(-3), Rational(-3)}}));
}

TEST_CASE("rational reconstruction") {
    const Integer m("1000000007");
    // 3/7 mod m
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(7).get_mpz_t(), m.get_mpz_t());
    const Integer residue = (3 * inv) % m;
    auto r = modular::reconstruct(residue, m);
    REQUIRE(r);
    CHECK(*r == make_rational(3, 7));
    CHECK(modular::reduce(make_rational(1, 2), 7) == std::optional<std::uint32_t>(4));
}

TEST_CASE("Gram matrix of A(D4) has rank 22") {
    const RootAlgebra ra = build_A(RootSystem::build("D4"));
    const QMatrix& gram = ra.algebra()->gram();
    REQUIRE(gram.rows() == 24);
    CHECK(naive_rank(rows_of(gram)) == 22);
    CHECK(rank(gram) == 22);
    CHECK(rank_fraction_free(gram) == 22);
    CHECK(rank_rational_gauss(gram) == 22);
    const auto k = kernel_basis(gram);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(is_zero(gram * v));
}

TEST_CASE("F2 row spaces") {
    CHECK(F2Matrix(4, {}).row_space_members() == std::vector<F2Vector>{0});
    CHECK(F2Matrix(4, {0b0110}).row_space_members() == std::vector<F2Vector>{0, 0b0110});
    const F2Matrix two(4, {0b0011, 0b0110});
    CHECK(two.rank() == 2);
    CHECK(two.row_space_members() == std::vector<F2Vector>{0, 0b0011, 0b0101, 0b0110});
    const F2Matrix dep(4, {0b0011, 0b0110, 0b0101});
    CHECK(dep.rank() == 2);
    CHECK(dep.row_space_members().size() == 4);
    CHECK_THROWS_AS(F2Matrix(30, std::vector<F2Vector>(25, 1)).row_space_members(), InvalidArgument);

    auto& g = rng();
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<F2Vector> rows(1 + g() % 8);
        for (auto& r : rows) r = g() & 0xfff;
        const F2Matrix m(12, rows);
        const F2Matrix red = m.reduced();
        CHECK(red.reduced() == red);
        CHECK(red.rows() == m.rank());
        CHECK(m.row_space_members().size() == (std::size_t{1} << m.rank()));
        CHECK(red.row_space_members() == m.row_space_members());
    }
}
