#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "griess/error.hpp"

namespace griess {

struct Clause {
    std::string description;
    bool pass = false;
    std::string counterexample;
};

struct VerifyReport {
    std::string target;
    std::string spec;                 // empty for targets without a root system
    std::vector<Clause> clauses;
    std::vector<std::string> notes;   // charges, dimensions, skipped parts
    std::chrono::duration<double> elapsed{};

    bool ok() const;
    /// `with_timing` adds the elapsed seconds, which vary between runs.
    nlohmann::json to_json(bool with_timing = false) const;
};

struct VerifyOptions {
    std::vector<std::string> specs;  // empty: the default set
    std::size_t max_dim = 8;         // formula4.1
    bool force = false;              // allow more than 1600 basis vectors
};

/// Raised when a spec exceeds the size guard without `force`.
class TooLarge : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// lemma2.1 ... table2, all.
const std::vector<std::string>& verify_targets();
/// A1, A2, A3, D4, E6, A1^24, A2^12, A24.
const std::vector<std::string>& default_verify_specs();

/// Throws InvalidArgument for an unknown target or spec and TooLarge for an
/// oversized spec.
std::vector<VerifyReport> run_verify(const std::string& target, const VerifyOptions& options);

/// Human-readable rendering, one block per report.
std::string format_reports(const std::vector<VerifyReport>& reports, bool with_timing = false);

}  // namespace griess
