#include "griess/root_algebra.hpp"

#include <algorithm>

namespace griess {

std::size_t RootAlgebra::u_index(std::size_t root) const {
    if (t_only_) throw InvalidArgument("T(Phi) has no u(alpha)");
    return rs_->positive_root_count() + root;
}

namespace {

AlgebraPtr build_table(const std::shared_ptr<const RootSystem>& rs, bool t_only) {
    if (!rs) throw InvalidArgument("null root system");
    const RootSystem& R = *rs;
    const std::size_t n = R.positive_root_count();

    std::vector<std::string> labels;
    labels.reserve(t_only ? n : 2 * n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("t(" + R.root_label(i) + ")");
    if (!t_only) {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("u(" + R.root_label(i) + ")");
    }
    StructureAlgebra::Builder b(std::move(labels));
    const auto T = [](std::size_t i) { return i; };
    const auto U = [n](std::size_t i) { return n + i; };
    const Rational half(1, 2);

    for (std::size_t a = 0; a < n; ++a) {
        b.add_product(T(a), T(a), T(a), 8);
        b.set_form(T(a), T(a), 4);
        if (!t_only) {
            b.add_product(U(a), U(a), U(a), 8);
            b.set_form(U(a), U(a), 4);
        }
        const auto [begin, end] = R.component_range(R.component_of(a));
        for (std::size_t c = begin; c < end; ++c) {
            if (!R.related(a, c)) continue;
            const std::size_t g = R.triple(a, c);
            if (a < c) {
                // t t and u u
                b.add_product(T(a), T(c), T(a), 1);
                b.add_product(T(a), T(c), T(c), 1);
                b.add_product(T(a), T(c), T(g), -1);
                b.set_form(T(a), T(c), half);
                if (!t_only) {
                    b.add_product(U(a), U(c), U(a), 1);
                    b.add_product(U(a), U(c), U(c), 1);
                    b.add_product(U(a), U(c), T(g), -1);
                    b.set_form(U(a), U(c), half);
                }
            }
            if (!t_only) {
                // u(a) t(c) = u(a) + t(c) - u(g)
                b.add_product(U(a), T(c), U(a), 1);
                b.add_product(U(a), T(c), T(c), 1);
                b.add_product(U(a), T(c), U(g), -1);
                b.set_form(U(a), T(c), half);
            }
        }
    }
    return std::move(b).build();
}

}  // namespace

RootAlgebra build_A(std::shared_ptr<const RootSystem> rs) {
    RootAlgebra ra;
    ra.alg_ = build_table(rs, false);
    ra.rs_ = std::move(rs);
    return ra;
}

RootAlgebra build_T(std::shared_ptr<const RootSystem> rs) {
    RootAlgebra ra;
    ra.alg_ = build_table(rs, true);
    ra.rs_ = std::move(rs);
    ra.t_only_ = true;
    return ra;
}

AlgebraElement component_delta(const RootAlgebra& ra, std::size_t component) {
    if (ra.t_only()) throw InvalidArgument("delta lives in A(Phi), not T(Phi)");
    const RootSystem& R = ra.system();
    QVector z(ra.dim());
    const Rational c = make_rational(1, 4 * R.coxeter_number(component));
    const auto [b, e] = R.component_range(component);
    for (std::size_t i = b; i < e; ++i) {
        z[ra.t_index(i)] = c;
        z[ra.u_index(i)] = c;
    }
    return AlgebraElement(ra.algebra(), std::move(z));
}

AlgebraElement delta(const RootAlgebra& ra) {
    AlgebraElement z(ra.algebra());
    for (std::size_t c = 0; c < ra.system().component_count(); ++c) z += component_delta(ra, c);
    return z;
}

AlgebraElement epsilon(const RootAlgebra& ra) {
    const RootSystem& R = ra.system();
    QVector z(ra.dim());
    for (std::size_t i = 0; i < R.positive_root_count(); ++i) {
        z[ra.t_index(i)] = make_rational(1, 2 * R.coxeter_number(R.component_of(i)) + 4);
    }
    return AlgebraElement(ra.algebra(), std::move(z));
}

AlgebraElement subsystem_epsilon(const RootAlgebra& ra, const std::vector<std::size_t>& simple_subset) {
    QVector z(ra.dim());
    if (!simple_subset.empty()) {
        const SubsystemEmbedding sub = ra.system().subsystem(simple_subset);
        for (std::size_t i = 0; i < sub.system.positive_root_count(); ++i) {
            const int h = sub.system.coxeter_number(sub.system.component_of(i));
            z[ra.t_index(sub.parent_index[i])] = make_rational(1, 2 * h + 4);
        }
    }
    return AlgebraElement(ra.algebra(), std::move(z));
}

Rational discrete_series_charge(long i) { return 1 - make_rational(6, (i + 2) * (i + 3)); }

Rational parafermion_charge(long l) { return make_rational(2 * l, l + 3); }

std::vector<std::vector<std::size_t>> prefix_chain(const RootSystem& rs, std::size_t component) {
    const auto [b, e] = rs.simple_range(component);
    std::vector<std::vector<std::size_t>> chain;
    std::vector<std::size_t> subset;
    for (std::size_t s = b; s < e; ++s) {
        subset.push_back(s);
        chain.push_back(subset);
    }
    return chain;
}

namespace {

struct Segment {
    std::string prefix;
    std::vector<std::vector<std::size_t>> chain;  // strictly nested, non-empty
    AlgebraElement top;
    std::optional<long> type_a_rank;  // set when the charge formulas apply
};

std::string describe(const std::vector<std::size_t>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(subset[i] + 1);
    }
    return s + "}";
}

DecompositionReport run_segments(const RootAlgebra& ra, const std::vector<Segment>& segments, bool check_associativity) {
    DecompositionReport rep;
    std::string desc;
    for (const auto& seg : segments) {
        AlgebraElement previous(ra.algebra());
        std::size_t step = 0;
        if (!desc.empty()) desc += "; ";
        desc += seg.prefix;
        for (const auto& subset : seg.chain) {
            AlgebraElement eps = subsystem_epsilon(ra, subset);
            rep.idempotents.push_back(eps - previous);
            ++step;
            rep.labels.push_back(seg.prefix + ":e" + std::to_string(step));
            rep.expected_charges.push_back(seg.type_a_rank ? std::optional<Rational>(discrete_series_charge(static_cast<long>(step)))
                                                           : std::nullopt);
            desc += " " + describe(subset);
            previous = std::move(eps);
        }
        rep.idempotents.push_back(seg.top - previous);
        ++step;
        rep.labels.push_back(seg.prefix + ":e" + std::to_string(step));
        rep.expected_charges.push_back(seg.type_a_rank ? std::optional<Rational>(parafermion_charge(*seg.type_a_rank))
                                                       : std::nullopt);
        desc += " delta";
    }
    rep.chain_description = desc;

    auto& ck = rep.checks;
    const auto fail = [&ck](const std::string& what) {
        if (ck.first_failure.empty()) ck.first_failure = what;
    };

    AlgebraElement sum(ra.algebra());
    for (const auto& e : rep.idempotents) sum += e;
    ck.sum_to_identity = sum == delta(ra);
    if (!ck.sum_to_identity) fail("sum of idempotents differs from delta");

    ck.idempotent = true;
    for (std::size_t i = 0; i < rep.idempotents.size(); ++i) {
        const auto& e = rep.idempotents[i];
        rep.charges.push_back(central_charge(e));
        if (!is_idempotent(e)) {
            ck.idempotent = false;
            fail(rep.labels[i] + " is not idempotent");
        }
    }

    ck.orthogonal = ck.form_orthogonal = true;
    for (std::size_t i = 0; i < rep.idempotents.size(); ++i) {
        for (std::size_t j = i + 1; j < rep.idempotents.size(); ++j) {
            if (!multiply(rep.idempotents[i], rep.idempotents[j]).is_zero()) {
                ck.orthogonal = false;
                fail(rep.labels[i] + " * " + rep.labels[j] + " != 0");
            }
            if (!is_zero(form(rep.idempotents[i], rep.idempotents[j]))) {
                ck.form_orthogonal = false;
                fail("<" + rep.labels[i] + ", " + rep.labels[j] + "> != 0");
            }
        }
    }

    bool any_expected = false;
    bool match = true;
    for (std::size_t i = 0; i < rep.charges.size(); ++i) {
        if (!rep.expected_charges[i]) continue;
        any_expected = true;
        if (*rep.expected_charges[i] != rep.charges[i]) {
            match = false;
            fail("charge of " + rep.labels[i] + " is " + to_string(rep.charges[i]) + ", expected " +
                 to_string(*rep.expected_charges[i]));
        }
    }
    if (any_expected) ck.charges_match = match;

    if (check_associativity) {
        const SpanReport span = check_associative_span(rep.idempotents);
        ck.associative = span.ok();
        if (!span.ok()) fail("idempotent span is not an associative subalgebra");
    }
    return rep;
}

}  // namespace

DecompositionReport componentwise_chain_decompose(const RootAlgebra& ra, bool check_associativity) {
    if (ra.t_only()) throw InvalidArgument("decomposition needs A(Phi)");
    const RootSystem& R = ra.system();
    std::vector<Segment> segments;
    for (std::size_t c = 0; c < R.component_count(); ++c) {
        const SimpleType& type = R.components()[c];
        segments.push_back({std::to_string(c) + "/" + type.name(), prefix_chain(R, c), component_delta(ra, c),
                            type.family == Family::A ? std::optional<long>(type.rank) : std::nullopt});
    }
    return run_segments(ra, segments, check_associativity);
}

DecompositionReport coset_chain_decompose(const RootAlgebra& ra, bool check_associativity) {
    for (const auto& type : ra.system().components()) {
        if (type.family != Family::A) {
            throw InvalidArgument("coset chain needs type A components, got " + type.name());
        }
    }
    return componentwise_chain_decompose(ra, check_associativity);
}

DecompositionReport generalized_chain_decompose(const RootAlgebra& ra,
                                                const std::vector<std::vector<std::size_t>>& chain,
                                                bool check_associativity) {
    if (ra.t_only()) throw InvalidArgument("decomposition needs A(Phi)");
    std::vector<std::vector<std::size_t>> nested;
    for (auto subset : chain) {
        std::sort(subset.begin(), subset.end());
        if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
            throw InvalidArgument("chain subset repeats a simple root");
        }
        for (auto s : subset) {
            if (s >= ra.system().rank()) throw InvalidArgument("chain uses a simple root index out of range");
        }
        if (subset.empty()) continue;
        if (!nested.empty()) {
            const auto& prev = nested.back();
            if (subset.size() <= prev.size() || !std::includes(subset.begin(), subset.end(), prev.begin(), prev.end())) {
                throw InvalidArgument("chain is not strictly nested at " + describe(subset));
            }
        }
        nested.push_back(std::move(subset));
    }
    std::vector<Segment> segments;
    segments.push_back({ra.system().spec(), std::move(nested), delta(ra), std::nullopt});
    return run_segments(ra, segments, check_associativity);
}

}  // namespace griess
