#include "griess/catalog.hpp"

#include <nlohmann/json.hpp>

#include "griess/embedded_data.hpp"

namespace griess {

std::vector<SimpleType> NiemeierEntry::expanded() const {
    std::vector<SimpleType> out;
    for (const auto& [type, count] : components) out.insert(out.end(), static_cast<std::size_t>(count), type);
    return out;
}

std::size_t NiemeierEntry::component_count() const {
    std::size_t k = 0;
    for (const auto& c : components) k += static_cast<std::size_t>(c.second);
    return k;
}

std::optional<int> NiemeierEntry::coxeter_number() const {
    if (components.empty()) return std::nullopt;
    return components.front().first.coxeter_number();
}

std::size_t NiemeierEntry::rank() const {
    std::size_t r = 0;
    for (const auto& [type, count] : components) r += static_cast<std::size_t>(type.rank * count);
    return r;
}

bool NiemeierEntry::type_a_only() const {
    for (const auto& c : components) {
        if (c.first.family != Family::A) return false;
    }
    return true;
}

namespace {

std::vector<NiemeierEntry> load() {
    const auto j = nlohmann::json::parse(data::niemeier_json);
    std::vector<NiemeierEntry> out;
    for (const auto& e : j.at("entries")) {
        NiemeierEntry entry;
        entry.name = e.at("name").get<std::string>();
        entry.mass = parse_rational(e.at("mass").get<std::string>());
        for (const auto& c : e.at("components")) {
            const auto types = parse_system_spec(c.at("type").get<std::string>());
            if (types.size() != 1) throw Error("catalog: bad component type in " + entry.name);
            entry.components.emplace_back(types.front(), c.at("count").get<int>());
        }
        if (!entry.is_leech()) {
            if (entry.rank() != 24) throw Error("catalog: " + entry.name + " does not have rank 24");
            for (const auto& c : entry.components) {
                if (c.first.coxeter_number() != *entry.coxeter_number()) {
                    throw Error("catalog: " + entry.name + " mixes Coxeter numbers");
                }
            }
        }
        if (entry.mass <= 0) throw Error("catalog: non-positive mass for " + entry.name);
        out.push_back(std::move(entry));
    }
    if (out.size() != 24) throw Error("catalog: expected 24 entries");
    return out;
}

}  // namespace

const std::vector<NiemeierEntry>& catalog() {
    static const std::vector<NiemeierEntry> entries = load();
    return entries;
}

const NiemeierEntry& find_niemeier(std::string_view name) {
    for (const auto& e : catalog()) {
        if (e.name == name) return e;
    }
    if (name != "Leech") {
        try {
            const std::string canonical = format_system_spec(parse_system_spec(name));
            for (const auto& e : catalog()) {
                if (!e.is_leech() && format_system_spec(e.expanded()) == canonical) return e;
            }
        } catch (const InvalidArgument&) {
        }
    }
    throw InvalidArgument("unknown Niemeier type: " + std::string(name));
}

FrameReport lemma_4_2_subalgebra(const NiemeierEntry& entry) {
    if (entry.is_leech()) throw InvalidArgument("the Leech lattice has no roots");
    FrameReport rep;
    rep.name = entry.name;
    rep.expected_dimension = 24 + entry.component_count();

    auto rs = std::make_shared<const RootSystem>(RootSystem::build(entry.expanded()));
    const RootAlgebra ra = build_A(rs);
    rep.decomposition = componentwise_chain_decompose(ra, false);
    if (!rep.decomposition.ok()) {
        rep.failure = "decomposition in A(Phi) failed: " + rep.decomposition.checks.first_failure;
        return rep;
    }

    const BPlusAlgebra bp = build_bplus(rs);
    const PhiMap phi = build_phi(ra, bp);
    std::vector<AlgebraElement> images;
    rep.images_nonzero = true;
    for (std::size_t i = 0; i < rep.decomposition.idempotents.size(); ++i) {
        images.push_back(phi.apply(rep.decomposition.idempotents[i]));
        if (images.back().is_zero()) {
            rep.images_nonzero = false;
            rep.failure = rep.decomposition.labels[i] + " maps to zero";
            return rep;
        }
        rep.charges.push_back(central_charge(images.back()));
    }
    const SpanReport span = check_associative_span(images);
    rep.dimension = span.dimension;
    rep.independent = span.independent;
    rep.closed = span.closed;
    rep.associative = span.associative;
    if (!span.independent) {
        rep.failure = "images are linearly dependent";
    } else if (!span.closed) {
        rep.failure = "span not closed: " + rep.decomposition.labels[span.escaping_product->first] + " * " +
                      rep.decomposition.labels[span.escaping_product->second];
    } else if (!span.associative) {
        rep.failure = "associativity fails on a spanning triple";
    }
    return rep;
}

}  // namespace griess
