#pragma once

#include <sstream>
#include <string>

#include "griess/bplus.hpp"
#include "griess/qmatrix.hpp"
#include "griess/root_algebra.hpp"
#include "support.hpp"

namespace griess::testing {

struct PropertyResult {
    std::string name;
    int checked = 0;
    int failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0 && checked > 0; }
    void record(bool pass, const std::string& what) {
        ++checked;
        if (pass) return;
        if (failed++ == 0) first_failure = what;
    }
};

inline PropertyResult commutativity(const std::string& name, const AlgebraPtr& alg, std::mt19937_64& g,
                                    int trials = 500) {
    PropertyResult r;
    r.name = "ab = ba in " + name;
    for (int i = 0; i < trials; ++i) {
        const auto a = random_element(alg, g), b = random_element(alg, g);
        r.record(multiply(a, b) == multiply(b, a), "trial " + std::to_string(i));
    }
    return r;
}

inline PropertyResult identity_acts(const std::string& name, const AlgebraPtr& alg, std::mt19937_64& g,
                                    int trials = 100) {
    PropertyResult r;
    r.name = "z a = a in " + name;
    const auto z = find_identity(alg);
    if (!z) {
        r.record(false, "no identity");
        return r;
    }
    for (int i = 0; i < trials; ++i) {
        const auto a = random_element(alg, g, 6);
        r.record(multiply(*z, a) == a, "trial " + std::to_string(i));
    }
    return r;
}

inline PropertyResult form_invariance(const std::string& name, const AlgebraPtr& alg, std::mt19937_64& g,
                                      int trials = 200) {
    PropertyResult r;
    r.name = "<ab, c> = <a, bc> in " + name;
    for (int i = 0; i < trials; ++i) {
        const auto a = random_element(alg, g), b = random_element(alg, g), c = random_element(alg, g);
        r.record(form_is_invariant_on(a, b, c), "trial " + std::to_string(i));
    }
    return r;
}

// c(e + f) = c(e) + c(f) for orthogonal idempotents, over random sub-sums
inline PropertyResult charge_additivity(const std::string& name, const DecompositionReport& d, std::mt19937_64& g,
                                        int trials = 50) {
    PropertyResult r;
    r.name = "charges add over " + name;
    const std::size_t n = d.idempotents.size();
    for (int i = 0; i < trials; ++i) {
        AlgebraElement s(d.idempotents[0].algebra_ptr());
        Rational expect;
        for (std::size_t k = 0; k < n; ++k) {
            if (g() % 2 == 0) continue;
            s += d.idempotents[k];
            expect += d.charges[k];
        }
        r.record(central_charge(s) == expect && (s.is_zero() || is_idempotent(s)), "trial " + std::to_string(i));
    }
    return r;
}

inline PropertyResult rank_nullity(std::mt19937_64& g, int trials = 100) {
    PropertyResult r;
    r.name = "rank + nullity = columns";
    for (int i = 0; i < trials; ++i) {
        const std::size_t rows = 1 + g() % 8, cols = 1 + g() % 10;
        const QMatrix m = random_low_rank(g, rows, cols, 1 + g() % 5);
        const auto k = kernel_basis(m);
        bool pass = rank(m) + k.size() == cols && rank(m) == rank_fraction_free(m);
        for (const auto& v : k) pass = pass && is_zero(m * v);
        r.record(pass, "trial " + std::to_string(i));
    }
    return r;
}

inline PropertyResult rational_round_trip(std::mt19937_64& g, int trials = 1000) {
    PropertyResult r;
    r.name = "rational text round trip";
    for (int i = 0; i < trials; ++i) {
        const Rational a = small_rational(g, 1000000000, 1000000);
        r.record(parse_rational(to_string(a)) == a, to_string(a));
    }
    return r;
}

inline std::vector<PropertyResult> property_suite() {
    std::mt19937_64 g(20240611);
    std::vector<PropertyResult> out;
    out.push_back(rational_round_trip(g));
    out.push_back(rank_nullity(g));
    for (const char* spec : {"A2", "A4", "D4", "E6", "A1^2+A3"}) {
        const auto rs = std::make_shared<const RootSystem>(RootSystem::build(spec));
        const RootAlgebra a = build_A(rs), t = build_T(rs);
        const BPlusAlgebra b = build_bplus(rs);
        const std::string s(spec);
        out.push_back(commutativity("A(" + s + ")", a.algebra(), g));
        out.push_back(commutativity("T(" + s + ")", t.algebra(), g));
        out.push_back(commutativity("B+(" + s + ")", b.algebra(), g));
        out.push_back(identity_acts("A(" + s + ")", a.algebra(), g));
        out.push_back(identity_acts("T(" + s + ")", t.algebra(), g));
        out.push_back(form_invariance("B+(" + s + ")", b.algebra(), g));
        out.push_back(charge_additivity("the chain of " + s, componentwise_chain_decompose(a, false), g));
    }
    return out;
}

}  // namespace griess::testing
