#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "griess/bplus.hpp"
#include "griess/rational.hpp"
#include "griess/root_algebra.hpp"
#include "griess/root_system.hpp"

namespace griess {

struct NiemeierEntry {
    std::string name;                                      // "A1^24", "Leech"
    std::vector<std::pair<SimpleType, int>> components;    // type, multiplicity
    Rational mass;

    bool is_leech() const { return components.empty(); }
    /// Components with multiplicities expanded, in catalog order.
    std::vector<SimpleType> expanded() const;
    /// Number of simple components k.
    std::size_t component_count() const;
    /// Common Coxeter number; nullopt for the Leech lattice.
    std::optional<int> coxeter_number() const;
    std::size_t rank() const;
    bool type_a_only() const;
};

/// The 24 Niemeier types in catalog order, loaded from the embedded data.
/// Throws Error if an entry violates rank 24 or a common Coxeter number.
const std::vector<NiemeierEntry>& catalog();
/// Lookup by name ("A1^24", "Leech"); also accepts any spelling of the same
/// root system ("A1*24"). Throws InvalidArgument if unknown.
const NiemeierEntry& find_niemeier(std::string_view name);

/// The associative subalgebra of B^+ spanned by the images of the
/// per-component chain idempotents.
struct FrameReport {
    std::string name;
    std::size_t expected_dimension = 0;  // 24 + k
    std::size_t dimension = 0;
    bool images_nonzero = false;
    bool independent = false;
    bool closed = false;
    bool associative = false;
    DecompositionReport decomposition;   // inside A(Phi)
    std::vector<Rational> charges;       // 8 <phi(e), phi(e)> in B^+
    std::string failure;

    bool ok() const {
        return images_nonzero && independent && closed && associative && dimension == expected_dimension &&
               decomposition.ok();
    }
};

/// Throws InvalidArgument for the Leech lattice.
FrameReport lemma_4_2_subalgebra(const NiemeierEntry& entry);

}  // namespace griess
