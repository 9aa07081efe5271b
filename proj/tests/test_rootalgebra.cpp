#include <doctest.h>

#include "griess/error.hpp"
#include "griess/root_algebra.hpp"
#include "support.hpp"

using namespace griess;
using griess::testing::rng;

namespace {

Rational sum(const std::vector<Rational>& v) {
    Rational s;
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace

TEST_CASE("A(A1) multiplication table") {
    const RootAlgebra ra = build_A(RootSystem::build("A1"));
    REQUIRE(ra.dim() == 2);
    const auto t = ra.t(0), u = ra.u(0);
    CHECK(multiply(t, t) == t * Rational(8));
    CHECK(multiply(u, u) == u * Rational(8));
    CHECK(multiply(t, u).is_zero());
    CHECK(form(t, t) == 4);
    CHECK(form(u, u) == 4);
    CHECK(form(t, u) == 0);
    CHECK(delta(ra) == (t + u) * make_rational(1, 8));
    CHECK(central_charge(delta(ra)) == 1);
}

TEST_CASE("A(A2) products of related roots") {
    const auto rs = std::make_shared<const RootSystem>(RootSystem::build("A2"));
    const RootAlgebra ra = build_A(rs);
    const std::size_t a = rs->simple_roots()[0], b = rs->simple_roots()[1];
    const std::size_t g = rs->triple(a, b);
    CHECK(multiply(ra.t(a), ra.t(b)) == ra.t(a) + ra.t(b) - ra.t(g));
    CHECK(multiply(ra.u(a), ra.u(b)) == ra.u(a) + ra.u(b) - ra.t(g));
    CHECK(multiply(ra.u(a), ra.t(b)) == ra.u(a) + ra.t(b) - ra.u(g));
    CHECK(multiply(ra.t(a), ra.u(b)) == ra.t(a) + ra.u(b) - ra.u(g));
    CHECK(form(ra.t(a), ra.t(b)) == make_rational(1, 2));
    CHECK(form(ra.u(a), ra.t(b)) == make_rational(1, 2));
    CHECK(form(ra.t(a), ra.u(a)) == 0);

    const RootAlgebra a1a1 = build_A(RootSystem::build("A1^2"));
    CHECK(multiply(a1a1.t(0), a1a1.t(1)).is_zero());
    CHECK(multiply(a1a1.u(0), a1a1.t(1)).is_zero());
    CHECK(form(a1a1.t(0), a1a1.u(1)) == 0);
}

TEST_CASE("identity of A(A2) and A(D4)") {
    const RootAlgebra a2 = build_A(RootSystem::build("A2"));
    const auto d = delta(a2);
    for (std::size_t i = 0; i < a2.dim(); ++i) CHECK(d[i] == make_rational(1, 12));
    auto z = find_identity(a2.algebra());
    REQUIRE(z);
    CHECK(*z == d);
    CHECK(central_charge(d) == 2);

    const RootAlgebra d4 = build_A(RootSystem::build("D4"));
    const auto dd = delta(d4);
    for (std::size_t i = 0; i < d4.dim(); ++i) CHECK(dd[i] == make_rational(1, 24));
    auto zd = find_identity(d4.algebra());
    REQUIRE(zd);
    CHECK(*zd == dd);
    CHECK(central_charge(dd) == 4);
}

TEST_CASE("identity of a sum uses each component's Coxeter number") {
    const RootAlgebra ra = build_A(RootSystem::build("A1+A2"));
    const auto d = delta(ra);
    const auto& rs = ra.system();
    for (std::size_t r = 0; r < rs.positive_root_count(); ++r) {
        const Rational expect = rs.component_of(r) == 0 ? make_rational(1, 8) : make_rational(1, 12);
        CHECK(d[ra.t_index(r)] == expect);
        CHECK(d[ra.u_index(r)] == expect);
    }
    auto z = find_identity(ra.algebra());
    REQUIRE(z);
    CHECK(*z == d);
    CHECK(component_delta(ra, 0) + component_delta(ra, 1) == d);
    CHECK(central_charge(d) == 3);
}

TEST_CASE("identity of T") {
    const RootAlgebra t1 = build_T(RootSystem::build("A1"));
    CHECK(epsilon(t1) == t1.t(0) * make_rational(1, 8));
    CHECK(central_charge(epsilon(t1)) == make_rational(1, 2));

    const RootAlgebra t2 = build_T(RootSystem::build("A2"));
    const auto e = epsilon(t2);
    for (std::size_t i = 0; i < t2.dim(); ++i) CHECK(e[i] == make_rational(1, 10));
    auto z = find_identity(t2.algebra());
    REQUIRE(z);
    CHECK(*z == e);
    CHECK(central_charge(e) == make_rational(6, 5));

    CHECK_THROWS_AS(t2.u_index(0), InvalidArgument);
    CHECK_THROWS_AS(delta(t2), InvalidArgument);
}

TEST_CASE("identities agree with the solver") {
    for (const char* spec : {"A1", "A3", "A4", "D5", "E6", "A2+A3", "A1^3"}) {
        CAPTURE(spec);
        const auto rs = std::make_shared<const RootSystem>(RootSystem::build(spec));
        const RootAlgebra a = build_A(rs);
        const RootAlgebra t = build_T(rs);
        auto za = find_identity(a.algebra());
        auto zt = find_identity(t.algebra());
        REQUIRE(za);
        REQUIRE(zt);
        CHECK(*za == delta(a));
        CHECK(*zt == epsilon(t));
    }
}

TEST_CASE("epsilon inside A") {
    for (const char* spec : {"A2", "A5", "D4", "E6"}) {
        CAPTURE(spec);
        const RootAlgebra ra = build_A(RootSystem::build(spec));
        const auto e = epsilon(ra);
        const auto rest = delta(ra) - e;
        const auto& t = ra.system().components()[0];
        const long l = t.rank, h = t.coxeter_number();
        CHECK(is_idempotent(e));
        CHECK(is_idempotent(rest));
        CHECK(are_orthogonal(e, rest));
        CHECK(central_charge(e) == make_rational(l * h, h + 2));
        CHECK(central_charge(rest) == make_rational(2 * l, h + 2));
        CHECK(central_charge(delta(ra)) == l);
    }
}

TEST_CASE("charge formulas") {
    CHECK(discrete_series_charge(1) == make_rational(1, 2));
    CHECK(discrete_series_charge(2) == make_rational(7, 10));
    CHECK(discrete_series_charge(3) == make_rational(4, 5));
    CHECK(parafermion_charge(1) == make_rational(1, 2));
    CHECK(parafermion_charge(2) == make_rational(4, 5));
}

TEST_CASE("coset chains of type A") {
    const RootAlgebra a1 = build_A(RootSystem::build("A1"));
    const auto r1 = coset_chain_decompose(a1);
    CHECK(r1.ok());
    CHECK(r1.charges == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)});

    const RootAlgebra a2 = build_A(RootSystem::build("A2"));
    const auto r2 = coset_chain_decompose(a2);
    CHECK(r2.ok());
    CHECK(r2.charges == std::vector<Rational>{make_rational(1, 2), make_rational(7, 10), make_rational(4, 5)});
    CHECK(r2.checks.associative == std::optional<bool>(true));
    CHECK(r2.checks.charges_match == std::optional<bool>(true));

    const RootAlgebra a5 = build_A(RootSystem::build("A5"));
    const auto r5 = coset_chain_decompose(a5);
    CHECK(r5.ok());
    REQUIRE(r5.charges.size() == 6);
    for (long i = 1; i <= 5; ++i) CHECK(r5.charges[i - 1] == discrete_series_charge(i));
    CHECK(r5.charges[5] == parafermion_charge(5));
    CHECK(sum(r5.charges) == 5);

    const RootAlgebra a2a1 = build_A(RootSystem::build("A2+A1"));
    const auto rm = coset_chain_decompose(a2a1);
    CHECK(rm.ok());
    CHECK(rm.idempotents.size() == 5);
    CHECK(sum(rm.charges) == 3);

    CHECK_THROWS_AS(coset_chain_decompose(build_A(RootSystem::build("D4"))), InvalidArgument);
    CHECK_THROWS_AS(coset_chain_decompose(build_T(RootSystem::build("A2"))), InvalidArgument);
}

TEST_CASE("user-supplied chains") {
    const RootAlgebra a2 = build_A(RootSystem::build("A2"));
    const auto empty = generalized_chain_decompose(a2, {});
    REQUIRE(empty.idempotents.size() == 1);
    CHECK(empty.idempotents[0] == delta(a2));
    CHECK(empty.charges[0] == 2);
    CHECK(empty.ok());

    const auto prefix = generalized_chain_decompose(a2, {{0}, {0, 1}});
    CHECK(prefix.ok());
    CHECK(prefix.charges == coset_chain_decompose(a2).charges);

    const RootAlgebra d4 = build_A(RootSystem::build("D4"));
    const auto a1 = generalized_chain_decompose(d4, {{0}});
    CHECK(a1.ok());
    REQUIRE(a1.charges.size() == 2);
    CHECK(a1.charges[0] == make_rational(1, 2));
    CHECK(sum(a1.charges) == 4);

    const auto full = generalized_chain_decompose(d4, {{1}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}});
    CHECK(full.ok());
    CHECK(sum(full.charges) == 4);

    CHECK_THROWS_AS(generalized_chain_decompose(a2, {{0}, {1}}), InvalidArgument);
    CHECK_THROWS_AS(generalized_chain_decompose(a2, {{0, 1}, {0}}), InvalidArgument);
    CHECK_THROWS_AS(generalized_chain_decompose(a2, {{5}}), InvalidArgument);
}

TEST_CASE("componentwise chains") {
    const RootAlgebra ra = build_A(RootSystem::build("D4+A2"));
    const auto rep = componentwise_chain_decompose(ra);
    CHECK(rep.ok());
    CHECK(rep.idempotents.size() == 5 + 3);
    CHECK(sum(rep.charges) == 6);
    CHECK(prefix_chain(ra.system(), 1) == std::vector<std::vector<std::size_t>>{{4}, {4, 5}});
}

TEST_CASE("subsystem epsilon") {
    const RootAlgebra a3 = build_A(RootSystem::build("A3"));
    const auto e = subsystem_epsilon(a3, {0});
    CHECK(e == a3.t(a3.system().simple_roots()[0]) * make_rational(1, 8));
    const auto e12 = subsystem_epsilon(a3, {0, 1});
    CHECK(is_idempotent(e12));
    CHECK(central_charge(e12) == make_rational(6, 5));
    CHECK(subsystem_epsilon(a3, {0, 1, 2}) == epsilon(a3));
}

TEST_CASE("invariance of the form on A is measured") {
    auto& g = rng();
    for (const char* spec : {"A2", "D4"}) {
        const RootAlgebra ra = build_A(RootSystem::build(spec));
        int held = 0;
        const int trials = 200;
        for (int i = 0; i < trials; ++i) {
            const auto a = testing::random_element(ra.algebra(), g, 2);
            const auto b = testing::random_element(ra.algebra(), g, 2);
            const auto c = testing::random_element(ra.algebra(), g, 2);
            held += form_is_invariant_on(a, b, c) ? 1 : 0;
        }
        MESSAGE(std::string(spec) << ": <ab,c> = <a,bc> on " << held << " of " << trials << " random triples");
    }
}
