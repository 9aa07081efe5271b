#include <doctest.h>

#include "griess/bplus.hpp"
#include "griess/error.hpp"
#include "support.hpp"

using namespace griess;
using griess::testing::rng;

TEST_CASE("dimensions") {
    CHECK(build_bplus(RootSystem::build("A1")).dim() == 2);
    CHECK(build_bplus(RootSystem::build("A2")).dim() == 6);
    const auto d4 = build_bplus(RootSystem::build("D4"));
    CHECK(d4.dim() == 22);
    CHECK(d4.sym_dim() == 10);
    CHECK(build_bplus(RootSystem::build("E8")).dim() == 156);

    const auto mixed = build_bplus(RootSystem::build("A1^2"));
    CHECK(mixed.dim() == 5);
    CHECK(mixed.component_sum_dim() == 4);
    CHECK(mixed.is_cross_term(mixed.sym_index(0, 1)));
    CHECK(mixed.is_cross_term(mixed.sym_index(1, 0)));
    CHECK_FALSE(mixed.is_cross_term(mixed.sym_index(1, 1)));
    CHECK_FALSE(mixed.is_cross_term(mixed.x_index(0)));
}

TEST_CASE("B+ of A1") {
    const auto bp = build_bplus(RootSystem::build("A1"));
    const auto sq = AlgebraElement(bp.algebra(), bp.root_square(0));
    const auto x = bp.x(0);
    CHECK(multiply(x, x) == sq * Rational(2));
    CHECK(multiply(sq, sq) == sq * Rational(8));
    CHECK(multiply(sq, x) == x * Rational(8));
    CHECK(form(x, x) == 2);
    CHECK(form(sq, sq) == 8);
    CHECK(form(sq, x) == 0);
}

TEST_CASE("root squares in the symmetric basis") {
    const auto bp = build_bplus(RootSystem::build("A2"));
    const auto& rs = bp.system();
    const std::size_t top = *rs.find(0, {1, 1});
    // (s1 + s2)^2 = s1s1 + 2 s1s2 + s2s2
    const auto sq = bp.root_square(top);
    QVector dense = to_dense(sq, bp.dim());
    CHECK(dense[bp.sym_index(0, 0)] == 1);
    CHECK(dense[bp.sym_index(0, 1)] == 2);
    CHECK(dense[bp.sym_index(1, 1)] == 1);
}

TEST_CASE("images of t and u") {
    const auto rs = std::make_shared<const RootSystem>(RootSystem::build("A2"));
    const RootAlgebra ra = build_A(rs);
    const BPlusAlgebra bp = build_bplus(rs);
    const PhiMap phi = build_phi(ra, bp);
    CHECK(phi.matrix().rows() == 6);
    CHECK(phi.matrix().cols() == 6);
    for (std::size_t r = 0; r < rs->positive_root_count(); ++r) {
        const auto sq = AlgebraElement(bp.algebra(), bp.root_square(r));
        const auto pt = phi.apply(ra.t(r));
        const auto pu = phi.apply(ra.u(r));
        CHECK(pt == sq * make_rational(1, 2) - bp.x(r));
        CHECK(pu == sq * make_rational(1, 2) + bp.x(r));
        CHECK(is_idempotent(pt * make_rational(1, 8)));
    }
    const std::size_t a = rs->simple_roots()[0], b = rs->simple_roots()[1];
    CHECK(phi.apply(multiply(ra.u(a), ra.t(b))) == multiply(phi.apply(ra.u(a)), phi.apply(ra.t(b))));
    CHECK(form(phi.apply(ra.u(a)), phi.apply(ra.t(b))) == form(ra.u(a), ra.t(b)));
    CHECK(phi.apply(delta(ra)) == *find_identity(bp.algebra()));
}

TEST_CASE("phi is an isomorphism for small type A") {
    for (const char* spec : {"A1", "A2", "A3", "A4", "A5", "A6"}) {
        CAPTURE(spec);
        const auto rs = std::make_shared<const RootSystem>(RootSystem::build(spec));
        const PhiMap phi = build_phi(build_A(rs), build_bplus(rs));
        const PhiReport rep = verify_theorem_3_1(phi);
        CHECK(rep.ok());
        CHECK(rep.bijective);
        CHECK(rep.kernel_dimension == 0);
        CHECK(rep.map_rank == phi.codomain().dim());
    }
}

TEST_CASE("kernel equals the radical") {
    struct Case {
        const char* spec;
        std::size_t kernel;
    };
    for (const Case c : {Case{"D4", 2}, Case{"D5", 5}, Case{"E6", 15}}) {
        CAPTURE(c.spec);
        const auto rs = std::make_shared<const RootSystem>(RootSystem::build(c.spec));
        const RootAlgebra ra = build_A(rs);
        const PhiReport rep = verify_theorem_3_1(build_phi(ra, build_bplus(rs)));
        CHECK(rep.ok());
        CHECK(rep.kernel_dimension == c.kernel);
        CHECK(rep.radical_dimension == c.kernel);
        CHECK(radical_dimension(*ra.algebra()) == c.kernel);
        CHECK(rep.kernel_is_radical);
        CHECK_FALSE(rep.bijective);
    }
}

TEST_CASE("semisimple systems map onto the component sum") {
    const auto rs = std::make_shared<const RootSystem>(RootSystem::build("A1^3+A2"));
    const auto bp = build_bplus(rs);
    const PhiReport rep = verify_theorem_3_1(build_phi(build_A(rs), bp));
    CHECK(rep.ok());
    CHECK(rep.target_dimension == bp.component_sum_dim());
    CHECK(rep.map_rank == bp.component_sum_dim());
    CHECK(rep.bijective);
}

TEST_CASE("phi needs A over the same system") {
    const auto rs = std::make_shared<const RootSystem>(RootSystem::build("A2"));
    const auto other = std::make_shared<const RootSystem>(RootSystem::build("A3"));
    CHECK_THROWS_AS(build_phi(build_T(rs), build_bplus(rs)), InvalidArgument);
    CHECK_THROWS_AS(build_phi(build_A(rs), build_bplus(other)), InvalidArgument);
}

TEST_CASE("form on B+ is non-degenerate and invariant") {
    auto& g = rng();
    for (const char* spec : {"A3", "D4", "E6", "A1+A2"}) {
        CAPTURE(spec);
        const auto bp = build_bplus(RootSystem::build(spec));
        CHECK(radical_dimension(*bp.algebra()) == 0);
        for (int i = 0; i < 100; ++i) {
            const auto a = testing::random_element(bp.algebra(), g);
            const auto b = testing::random_element(bp.algebra(), g);
            const auto c = testing::random_element(bp.algebra(), g);
            CHECK(form_is_invariant_on(a, b, c));
        }
    }
}
