#include "griess/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "griess/bplus.hpp"
#include "griess/catalog.hpp"
#include "griess/f2quad.hpp"
#include "griess/root_algebra.hpp"
#include "griess/tables.hpp"

namespace griess {

bool VerifyReport::ok() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.pass; });
}

nlohmann::json VerifyReport::to_json(bool with_timing) const {
    nlohmann::json cl = nlohmann::json::array();
    for (const auto& c : clauses) {
        nlohmann::json j{{"description", c.description}, {"pass", c.pass}};
        if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
        cl.push_back(std::move(j));
    }
    nlohmann::json out{{"target", target}, {"pass", ok()}, {"clauses", std::move(cl)}, {"notes", notes}};
    if (!spec.empty()) out["spec"] = spec;
    if (with_timing) out["elapsed_seconds"] = elapsed.count();
    return out;
}

const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> t{"lemma2.1", "prop2.2", "lemma2.3", "lemma2.4", "eq2.5",
                                            "lemma2.5", "lemma2.6", "thm2.7",   "thm3.1",   "cor3.2",
                                            "lemma4.2", "formula4.1", "table1", "table2",   "all"};
    return t;
}

const std::vector<std::string>& default_verify_specs() {
    static const std::vector<std::string> s{"A1", "A2", "A3", "D4", "E6", "A1^24", "A2^12", "A24"};
    return s;
}

namespace {

constexpr std::size_t basis_guard = 1600;

// Lazily built objects shared by the targets that run on one spec.
class Context {
public:
    explicit Context(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {}

    const RootSystem& rs() const { return *rs_; }
    const RootAlgebra& A() {
        if (!a_) a_ = build_A(rs_);
        return *a_;
    }
    const RootAlgebra& T() {
        if (!t_) t_ = build_T(rs_);
        return *t_;
    }
    const PhiMap& phi() {
        if (!phi_) phi_ = std::make_unique<PhiMap>(build_phi(A(), build_bplus(rs_)));
        return *phi_;
    }
    const PhiReport& phi_report() {
        if (!phi_report_) phi_report_ = verify_theorem_3_1(phi());
        return *phi_report_;
    }
    bool type_a() const {
        return std::all_of(rs().components().begin(), rs().components().end(),
                           [](const SimpleType& t) { return t.family == Family::A; });
    }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::optional<RootAlgebra> a_;
    std::optional<RootAlgebra> t_;
    std::unique_ptr<PhiMap> phi_;
    std::optional<PhiReport> phi_report_;
};

void add(VerifyReport& r, std::string description, bool pass, std::string counterexample = {}) {
    r.clauses.push_back({std::move(description), pass, pass ? std::string{} : std::move(counterexample)});
}

std::string join_charges(const std::vector<Rational>& charges) {
    std::string s;
    for (std::size_t i = 0; i < charges.size(); ++i) {
        if (i) s += ", ";
        s += to_string(charges[i]);
    }
    return s;
}

std::string component_name(const RootSystem& rs, std::size_t c) {
    return std::to_string(c) + "/" + rs.components()[c].name();
}

void lemma_2_1(Context& ctx, VerifyReport& r) {
    const RootSystem& rs = ctx.rs();
    long sum_lh = 0;
    for (std::size_t c = 0; c < rs.component_count(); ++c) {
        const auto& type = rs.components()[c];
        sum_lh += static_cast<long>(type.rank) * type.coxeter_number();
        const std::size_t want = static_cast<std::size_t>(2 * type.coxeter_number() - 4);
        const auto [b, e] = rs.component_range(c);
        std::string bad;
        for (std::size_t i = b; i < e && bad.empty(); ++i) {
            const DeltaPartition p = rs.delta_partition(i);
            if (p.delta1.size() != want) {
                bad = "alpha = " + rs.root_label(i) + " has |Delta_1| = " + std::to_string(p.delta1.size());
            } else if (p.delta0 != i || 1 + p.delta1.size() + p.delta2.size() != rs.positive_root_count()) {
                bad = "Delta cells do not partition the positive roots at " + rs.root_label(i);
            }
        }
        add(r, component_name(rs, c) + ": |Delta_1(alpha)| = 2h-4 = " + std::to_string(want) + " for all " +
                   std::to_string(e - b) + " positive roots",
            bad.empty(), bad);
    }
    add(r, "2N = sum l_i h_i (" + std::to_string(2 * rs.positive_root_count()) + ")",
        static_cast<long>(2 * rs.positive_root_count()) == sum_lh);
}

void prop_2_2(Context& ctx, VerifyReport& r) {
    const auto id = find_identity(ctx.A().algebra());
    add(r, "the linear solve finds an identity of A(Phi)", id.has_value());
    if (id) add(r, "closed-form delta equals the solved identity", *id == delta(ctx.A()));
}

void lemma_2_3(Context& ctx, VerifyReport& r) {
    const auto id = find_identity(ctx.T().algebra());
    add(r, "the linear solve finds an identity of T(Phi)", id.has_value());
    if (id) add(r, "closed-form epsilon (coefficients 1/(2h+4)) equals the solved identity", *id == epsilon(ctx.T()));
}

void lemma_2_4(Context& ctx, VerifyReport& r) {
    const RootSystem& rs = ctx.rs();
    const Rational cd = central_charge(delta(ctx.A()));
    add(r, "c(delta) = l = " + std::to_string(rs.rank()), cd == Rational(static_cast<long>(rs.rank())),
        "got " + to_string(cd));
    Rational want = 0;
    for (const auto& t : rs.components()) want += make_rational(t.rank * t.coxeter_number(), t.coxeter_number() + 2);
    const Rational ce = central_charge(epsilon(ctx.A()));
    add(r, "c(epsilon) = sum lh/(h+2) = " + to_string(want), ce == want, "got " + to_string(ce));
}

void eq_2_5(Context& ctx, VerifyReport& r) {
    const RootSystem& rs = ctx.rs();
    for (std::size_t c = 0; c < rs.component_count(); ++c) {
        const auto& t = rs.components()[c];
        const AlgebraElement d = component_delta(ctx.A(), c);
        const auto [sb, se] = rs.simple_range(c);
        std::vector<std::size_t> all(se - sb);
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = sb + i;
        const AlgebraElement eps = subsystem_epsilon(ctx.A(), all);
        add(r, component_name(rs, c) + ": <epsilon, delta - epsilon> = 0", is_zero(form(eps, d - eps)));
        const Rational got = central_charge(d - eps);
        const Rational general = make_rational(2 * t.rank, t.coxeter_number() + 2);
        add(r, component_name(rs, c) + ": c(delta - epsilon) = 2l/(h+2) = " + to_string(general), got == general,
            "got " + to_string(got));
        if (t.family == Family::A) {
            add(r, component_name(rs, c) + ": c(delta - epsilon) = 2l/(l+3)", got == parafermion_charge(t.rank));
        }
    }
}

// Walks each component's prefix chain; `step` sees eps_{i-1}, eps_i and i.
void along_chains(Context& ctx, bool type_a_only, VerifyReport& r,
                  const std::function<void(std::size_t, const AlgebraElement&, const AlgebraElement&, long)>& step) {
    const RootSystem& rs = ctx.rs();
    for (std::size_t c = 0; c < rs.component_count(); ++c) {
        if (type_a_only && rs.components()[c].family != Family::A) {
            r.notes.push_back(component_name(rs, c) + " skipped: the formula is stated for type A");
            continue;
        }
        AlgebraElement prev(ctx.A().algebra());
        long i = 0;
        for (const auto& subset : prefix_chain(rs, c)) {
            AlgebraElement cur = subsystem_epsilon(ctx.A(), subset);
            step(c, prev, cur, ++i);
            prev = std::move(cur);
        }
    }
}

void lemma_2_5(Context& ctx, VerifyReport& r) {
    along_chains(ctx, false, r, [&](std::size_t c, const AlgebraElement& prev, const AlgebraElement& cur, long i) {
        const Rational v = form(cur - prev, prev);
        add(r, component_name(ctx.rs(), c) + ": <eps_" + std::to_string(i) + " - eps_" + std::to_string(i - 1) +
                   ", eps_" + std::to_string(i - 1) + "> = 0",
            is_zero(v), "got " + to_string(v));
    });
}

void lemma_2_6(Context& ctx, VerifyReport& r) {
    along_chains(ctx, true, r, [&](std::size_t c, const AlgebraElement& prev, const AlgebraElement& cur, long i) {
        const Rational got = central_charge(cur - prev);
        const Rational want = discrete_series_charge(i);
        add(r, component_name(ctx.rs(), c) + ": c(eps_" + std::to_string(i) + " - eps_" + std::to_string(i - 1) +
                   ") = " + to_string(want),
            got == want, "got " + to_string(got));
    });
}

void thm_2_7(Context& ctx, VerifyReport& r) {
    const DecompositionReport d = componentwise_chain_decompose(ctx.A(), true);
    const auto& ck = d.checks;
    add(r, "(i) delta = e_1 + ... + e_k", ck.sum_to_identity, ck.first_failure);
    add(r, "(ii) e_i e_j = delta_ij e_i", ck.idempotent && ck.orthogonal, ck.first_failure);
    add(r, "(iii) <e_i, e_j> = 0 for i != j", ck.form_orthogonal, ck.first_failure);
    if (ck.charges_match) {
        add(r, "(iv), (v) charges 1 - 6/((i+2)(i+3)) and 2l/(l+3) on type A components", *ck.charges_match,
            ck.first_failure);
    }
    if (!ctx.type_a()) r.notes.push_back("(iv), (v) not asserted on D/E components");
    add(r, "the idempotents span an associative subalgebra of dimension " + std::to_string(d.idempotents.size()),
        ck.associative.value_or(false), ck.first_failure);
    r.notes.push_back("charges: " + join_charges(d.charges));
}

void thm_3_1(Context& ctx, VerifyReport& r) {
    const PhiReport& p = ctx.phi_report();
    for (const ClauseResult* c : {&p.homomorphism, &p.isometry, &p.surjective}) {
        add(r, c->description, c->pass, c->counterexample);
    }
    r.notes.push_back("dim A = " + std::to_string(ctx.A().dim()) + ", dim B+ = " +
                      std::to_string(ctx.phi().codomain().dim()) + ", kernel dimension " +
                      std::to_string(p.kernel_dimension));
}

void cor_3_2(Context& ctx, VerifyReport& r) {
    const PhiReport& p = ctx.phi_report();
    add(r, "phi is a homomorphism and an isometry", p.homomorphism.pass && p.isometry.pass);
    if (ctx.type_a()) {
        add(r, "phi is bijective onto its target (rank " + std::to_string(p.map_rank) + " = 2N = " +
                   std::to_string(p.target_dimension) + ")",
            p.bijective);
    }
    add(r, "kernel of phi equals the radical of the form on A(Phi) (dimension " +
               std::to_string(p.radical_dimension) + ")",
        p.kernel_is_radical,
        "kernel dimension " + std::to_string(p.kernel_dimension) + ", radical " + std::to_string(p.radical_dimension));
}

using SpecTarget = void (*)(Context&, VerifyReport&);

const std::map<std::string, SpecTarget>& spec_targets() {
    static const std::map<std::string, SpecTarget> m{
        {"lemma2.1", lemma_2_1}, {"prop2.2", prop_2_2}, {"lemma2.3", lemma_2_3}, {"lemma2.4", lemma_2_4},
        {"eq2.5", eq_2_5},       {"lemma2.5", lemma_2_5}, {"lemma2.6", lemma_2_6}, {"thm2.7", thm_2_7},
        {"thm3.1", thm_3_1},     {"cor3.2", cor_3_2}};
    return m;
}

const std::vector<std::string> spec_target_order{"lemma2.1", "prop2.2",  "lemma2.3", "lemma2.4", "eq2.5",
                                                 "lemma2.5", "lemma2.6", "thm2.7",   "thm3.1",   "cor3.2"};

template <class F>
VerifyReport timed(std::string target, std::string spec, F&& body) {
    VerifyReport r;
    r.target = std::move(target);
    r.spec = std::move(spec);
    const auto start = std::chrono::steady_clock::now();
    body(r);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

std::vector<VerifyReport> lemma_4_2(const VerifyOptions& options) {
    std::vector<const NiemeierEntry*> entries;
    if (options.specs.empty()) {
        for (const auto& e : catalog()) {
            if (!e.is_leech()) entries.push_back(&e);
        }
    } else {
        for (const auto& s : options.specs) {
            const std::string canonical = format_system_spec(parse_system_spec(s));
            for (const auto& e : catalog()) {
                if (!e.is_leech() && format_system_spec(e.expanded()) == canonical) entries.push_back(&e);
            }
        }
    }
    std::vector<VerifyReport> out;
    if (entries.empty()) {
        out.push_back(timed("lemma4.2", "", [](VerifyReport& r) {
            r.notes.push_back("skipped: no requested spec is a Niemeier root system");
        }));
    }
    for (const auto* e : entries) {
        out.push_back(timed("lemma4.2", e->name, [e](VerifyReport& r) {
            const FrameReport f = lemma_4_2_subalgebra(*e);
            add(r, "idempotents in A(Phi) pass (i)-(iii)", f.decomposition.ok(), f.decomposition.checks.first_failure);
            add(r, "no idempotent maps to zero in B+", f.images_nonzero, f.failure);
            add(r, "images are linearly independent, closed and associative",
                f.independent && f.closed && f.associative, f.failure);
            add(r, "dimension = 24 + k = " + std::to_string(f.expected_dimension),
                f.dimension == f.expected_dimension, "got " + std::to_string(f.dimension));
            if (!e->type_a_only()) r.notes.push_back("D/E components use their prefix chains");
            r.notes.push_back("charges: " + join_charges(f.charges));
        }));
    }
    return out;
}

VerifyReport formula_4_1(const VerifyOptions& options) {
    return timed("formula4.1", "", [&](VerifyReport& r) {
        if (options.max_dim < 2 || options.max_dim > 10) {
            throw InvalidArgument("--max-dim must be between 2 and 10");
        }
        for (std::size_t d = 2; d <= options.max_dim; d += 2) {
            const Integer got = brute_force_lagrangians(F2QuadSpace(d));
            const Integer want = lagrangian_extension_count(d / 2);
            add(r, "dimension " + std::to_string(d) + ": " + want.get_str() + " Lagrangians", got == want,
                "enumerated " + got.get_str());
        }
    });
}

VerifyReport table_1() {
    return timed("table1", "", [](VerifyReport& r) {
        const Table1Report t = table1_consistency();
        std::string bad;
        for (const auto& row : t.rows) {
            if (!row.integral && bad.empty()) bad = row.name + ": " + to_string(row.count);
        }
        add(r, "mass * |Co_1| is a positive integer for all 24 rows", t.all_integral, bad);
        add(r, "the counts sum to prod_{i<12} (2^i + 1) = " + t.expected.get_str(), t.sum_matches,
            "sum " + t.total.get_str());
    });
}

VerifyReport table_2() {
    return timed("table2", "", [](VerifyReport& r) {
        const Table2Data data = load_table2();
        add(r, "group order in the data equals 2^21 3^9 5^4 7^2 11 13 23", data.group_order == conway_group_order());
        const Table2Report t = table2_consistency(data);
        for (const auto& e : t.edges) {
            if (e.parent == "A_1" && e.child == "0") {
                add(r, "N(A_1) = 98280 matches 98280:1(0)", e.pass && e.lhs == 98280,
                    "N(A_1) * 1 = " + e.lhs.get_str());
            }
        }
        add(r, "every edge of A_1, A_2, A_3 satisfies N(P) y = N(C) x", t.anchor_rows_pass);
        std::string failures;
        for (const auto& e : t.edges) {
            if (!e.pass) failures += (failures.empty() ? "" : "; ") + e.parent + " -> " + e.child;
        }
        add(r, "at least 90% of edges pass (" + std::to_string(t.passed) + "/" + std::to_string(t.edges.size()) + ")",
            t.ok(), failures);
        if (!failures.empty()) r.notes.push_back("failing edges: " + failures);
        for (const auto& w : t.warnings) r.notes.push_back(w);
    });
}

std::vector<std::string> canonical_specs(const VerifyOptions& options) {
    std::vector<std::string> specs = options.specs.empty() ? default_verify_specs() : options.specs;
    for (auto& s : specs) s = format_system_spec(parse_system_spec(s));
    return specs;
}

std::shared_ptr<const RootSystem> guarded_system(const std::string& spec, bool force) {
    std::size_t n = 0;
    for (const auto& t : parse_system_spec(spec)) n += static_cast<std::size_t>(t.positive_root_count());
    if (2 * n > basis_guard && !force) {
        throw TooLarge(spec + " has " + std::to_string(2 * n) + " basis vectors (more than " +
                       std::to_string(basis_guard) + "); pass --force");
    }
    return std::make_shared<const RootSystem>(RootSystem::build(spec));
}

}  // namespace

std::vector<VerifyReport> run_verify(const std::string& target, const VerifyOptions& options) {
    const auto& targets = verify_targets();
    if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
        throw InvalidArgument("unknown verify target: " + target);
    }
    std::vector<VerifyReport> out;
    if (target == "formula4.1") return {formula_4_1(options)};
    if (target == "table1") return {table_1()};
    if (target == "table2") return {table_2()};
    if (target == "lemma4.2") return lemma_4_2(options);

    const std::vector<std::string> specs = canonical_specs(options);
    std::vector<std::shared_ptr<const RootSystem>> systems;
    for (const auto& s : specs) systems.push_back(guarded_system(s, options.force));

    const std::vector<std::string> per_spec =
        target == "all" ? spec_target_order : std::vector<std::string>{target};
    for (std::size_t i = 0; i < specs.size(); ++i) {
        Context ctx(systems[i]);
        for (const auto& t : per_spec) {
            out.push_back(timed(t, specs[i], [&](VerifyReport& r) { spec_targets().at(t)(ctx, r); }));
        }
    }
    if (target == "all") {
        for (auto& r : lemma_4_2(options)) out.push_back(std::move(r));
        out.push_back(formula_4_1(options));
        out.push_back(table_1());
        out.push_back(table_2());
    }
    return out;
}

std::string format_reports(const std::vector<VerifyReport>& reports, bool with_timing) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.ok() ? "[PASS] " : "[FAIL] ") << r.target;
        if (!r.spec.empty()) os << " " << r.spec;
        if (with_timing) os << " (" << r.elapsed.count() << " s)";
        os << "\n";
        for (const auto& c : r.clauses) {
            os << "  " << (c.pass ? "ok   " : "FAIL ") << c.description;
            if (!c.pass && !c.counterexample.empty()) os << "  [" << c.counterexample << "]";
            os << "\n";
        }
        for (const auto& n : r.notes) os << "  note " << n << "\n";
    }
    return os.str();
}

}  // namespace griess
