#include "griess/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "griess/griess.hpp"

namespace griess::cli {

namespace {

using nlohmann::json;

json roots_json(const RootSystem& rs) {
    json comps = json::array();
    for (std::size_t c = 0; c < rs.component_count(); ++c) {
        const auto& t = rs.components()[c];
        comps.push_back({{"type", t.name()}, {"l", t.rank}, {"N", t.positive_root_count()}, {"h", t.coxeter_number()}});
    }
    json roots = json::array();
    for (std::size_t i = 0; i < rs.positive_root_count(); ++i) {
        const Root& r = rs.root(i);
        json coords = json::array();
        for (const auto& x : r.coordinates) coords.push_back(to_string(x));
        roots.push_back({{"component", r.component}, {"coefficients", r.coefficients}, {"coordinates", coords}});
    }
    return {{"spec", rs.spec()}, {"l", rs.rank()}, {"N", rs.positive_root_count()}, {"components", comps},
            {"positive_roots", roots}};
}

void print_roots(const RootSystem& rs, std::ostream& out) {
    out << rs.spec() << ": l = " << rs.rank() << ", N = " << rs.positive_root_count() << "\n";
    for (std::size_t c = 0; c < rs.component_count(); ++c) {
        const auto& t = rs.components()[c];
        out << "  " << c << " " << t.name() << ": l = " << t.rank << ", N = " << t.positive_root_count()
            << ", h = " << t.coxeter_number() << "\n";
    }
}

json decomposition_json(const DecompositionReport& d) {
    json idem = json::array();
    for (const auto& e : d.idempotents) idem.push_back(to_json(e));
    json charges = json::array();
    for (const auto& c : d.charges) charges.push_back(to_string(c));
    json expected = json::array();
    for (const auto& c : d.expected_charges) expected.push_back(c ? json(to_string(*c)) : json(nullptr));
    const auto& ck = d.checks;
    json checks{{"sum_to_identity", ck.sum_to_identity},
                {"idempotent", ck.idempotent},
                {"orthogonal", ck.orthogonal},
                {"form_orthogonal", ck.form_orthogonal}};
    if (ck.charges_match) checks["charges_match"] = *ck.charges_match;
    if (ck.associative) checks["associative"] = *ck.associative;
    json out{{"chain", d.chain_description}, {"labels", d.labels}, {"idempotents", idem},
             {"charges", charges},           {"expected_charges", expected}, {"checks", checks},
             {"pass", d.ok()}};
    if (!ck.first_failure.empty()) out["first_failure"] = ck.first_failure;
    return out;
}

// "2,1,3" adds simple roots 2, 1, 3 one at a time (1-based); "" is the empty chain.
std::vector<std::vector<std::size_t>> parse_chain(const std::string& text) {
    std::vector<std::vector<std::size_t>> chain;
    std::vector<std::size_t> subset;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
            throw InvalidArgument("--chain expects comma-separated 1-based simple root indices");
        }
        const auto v = std::stoul(item);
        if (v == 0) throw InvalidArgument("--chain indices are 1-based");
        subset.push_back(v - 1);
        chain.push_back(subset);
    }
    return chain;
}

json entry_json(const NiemeierEntry& e) {
    json comps = json::array();
    for (const auto& [t, n] : e.components) comps.push_back({{"type", t.name()}, {"count", n}});
    json j{{"name", e.name}, {"components", comps}, {"k", e.component_count()}, {"mass", to_string(e.mass)}};
    if (auto h = e.coxeter_number()) {
        j["h"] = *h;
        j["lemma_4_2_dimension"] = 24 + e.component_count();
    }
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact root-system algebras, B+ and Niemeier counting checks", "griess"};
    app.require_subcommand(1);

    std::string spec;
    bool json_out = false;

    auto* roots = app.add_subcommand("roots", "Positive roots, ranks and Coxeter numbers");
    roots->add_option("spec", spec, "Root system, e.g. A2, D4, A1^24, A2*12+E6")->required();
    roots->add_flag("--json", json_out, "Print JSON including every positive root");

    std::string kind;
    auto* algebra = app.add_subcommand("algebra", "Build A(Phi), T(Phi) or B+ and dump it as JSON");
    algebra->add_option("kind", kind, "A, T or B")->required()->check(CLI::IsMember({"A", "T", "B"}));
    algebra->add_option("spec", spec, "Root system")->required();

    bool dump = false;
    auto* bplus = app.add_subcommand("bplus", "Build B+ and report its dimension");
    bplus->add_option("spec", spec, "Root system")->required();
    bplus->add_flag("--dump-json", dump, "Dump the algebra as JSON");

    std::optional<std::string> chain;
    bool no_assoc = false;
    auto* decompose = app.add_subcommand("decompose", "Chain decomposition of the identity of A(Phi)");
    decompose->add_option("spec", spec, "Root system")->required();
    decompose->add_option("--chain", chain, "Simple roots added one at a time, e.g. 1,2,4 (1-based)");
    decompose->add_flag("--skip-associativity", no_assoc, "Skip the triple-product test on the span");

    std::string target;
    std::optional<std::string> positional_spec;
    VerifyOptions vopt;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "Run an exact verification target");
    verify->add_option("target", target, "lemma2.1 prop2.2 lemma2.3 lemma2.4 eq2.5 lemma2.5 lemma2.6 thm2.7 "
                                         "thm3.1 cor3.2 lemma4.2 formula4.1 table1 table2 all")
        ->required()
        ->check(CLI::IsMember(verify_targets()));
    verify->add_option("spec_arg", positional_spec, "Root system (same as --spec)");
    verify->add_option("--spec", vopt.specs, "Root system; repeat for several")->take_all();
    verify->add_flag("--json", json_out, "JSON output");
    verify->add_flag("--force", vopt.force, "Allow more than 1600 basis vectors");
    verify->add_option("--max-dim", vopt.max_dim, "Largest dimension for formula4.1")->check(CLI::Range(2, 10));
    verify->add_flag("--timing", timing, "Report elapsed time per check");

    std::string name;
    auto* niemeier = app.add_subcommand("niemeier", "The 24 Niemeier types");
    niemeier->require_subcommand(1);
    auto* nlist = niemeier->add_subcommand("list", "List the catalog");
    nlist->add_flag("--json", json_out, "JSON output");
    auto* nsub = niemeier->add_subcommand("sub", "Build the associative subalgebra of B+ for one type");
    nsub->add_option("name", name, "Catalog name, e.g. A1^24")->required();
    nsub->add_flag("--json", json_out, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (roots->parsed()) {
            const RootSystem rs = RootSystem::build(spec);
            if (json_out) {
                out << roots_json(rs).dump(2) << "\n";
            } else {
                print_roots(rs, out);
            }
            return ok;
        }
        if (algebra->parsed()) {
            auto rs = std::make_shared<const RootSystem>(RootSystem::build(spec));
            const AlgebraPtr alg = kind == "A"   ? build_A(rs).algebra()
                                   : kind == "T" ? build_T(rs).algebra()
                                                 : build_bplus(rs).algebra();
            out << to_json(*alg).dump() << "\n";
            return ok;
        }
        if (bplus->parsed()) {
            const BPlusAlgebra bp = build_bplus(RootSystem::build(spec));
            if (dump) {
                out << to_json(*bp.algebra()).dump() << "\n";
            } else {
                const auto& rs = bp.system();
                out << "B+(" << rs.spec() << "): dim " << bp.dim() << " = l(l+1)/2 + N = " << bp.sym_dim() << " + "
                    << rs.positive_root_count() << ", form non-degenerate, "
                    << bp.algebra()->nonzero_products() << " nonzero basis products\n";
            }
            return ok;
        }
        if (decompose->parsed()) {
            const RootAlgebra ra = build_A(RootSystem::build(spec));
            const DecompositionReport d = chain ? generalized_chain_decompose(ra, parse_chain(*chain), !no_assoc)
                                                : componentwise_chain_decompose(ra, !no_assoc);
            json j = decomposition_json(d);
            j["spec"] = ra.system().spec();
            out << j.dump(2) << "\n";
            return d.ok() ? ok : verification_failed;
        }
        if (verify->parsed()) {
            if (positional_spec) vopt.specs.insert(vopt.specs.begin(), *positional_spec);
            const auto reports = run_verify(target, vopt);
            const bool pass = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.ok(); });
            if (json_out) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(r.to_json(timing));
                out << json{{"target", target}, {"pass", pass}, {"reports", arr}}.dump(2) << "\n";
            } else {
                out << format_reports(reports, timing);
                out << (pass ? "PASS" : "FAIL") << " " << target << "\n";
            }
            return pass ? ok : verification_failed;
        }
        if (nlist->parsed()) {
            if (json_out) {
                json arr = json::array();
                for (const auto& e : catalog()) arr.push_back(entry_json(e));
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& e : catalog()) {
                    out << e.name << "  k = " << e.component_count();
                    if (auto h = e.coxeter_number()) out << "  h = " << *h;
                    out << "  mass = " << to_string(e.mass) << "\n";
                }
            }
            return ok;
        }
        if (nsub->parsed()) {
            const FrameReport f = lemma_4_2_subalgebra(find_niemeier(name));
            if (json_out) {
                json charges = json::array();
                for (const auto& c : f.charges) charges.push_back(to_string(c));
                json j{{"name", f.name},          {"dimension", f.dimension},   {"expected_dimension", f.expected_dimension},
                       {"associative", f.associative}, {"charges", charges}, {"pass", f.ok()}};
                if (!f.failure.empty()) j["failure"] = f.failure;
                out << j.dump(2) << "\n";
            } else {
                out << f.name << ": associative subalgebra of B+ of dimension " << f.dimension << " (24 + k = "
                    << f.expected_dimension << ")" << (f.ok() ? "" : ", FAILED: " + f.failure) << "\n";
                out << "  charges:";
                for (const auto& c : f.charges) out << " " << to_string(c);
                out << "\n";
            }
            return f.ok() ? ok : verification_failed;
        }
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return verification_failed;
    }
}

}  // namespace griess::cli
