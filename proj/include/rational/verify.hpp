#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rational/element.hpp"
#include "rational/generate.hpp"

namespace rational {

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t samples = 200;    // cases per property suite
    std::size_t probe_depth = 12; // word probe depth
    int element_depth = 3;        // generated constructor tree depth
    std::size_t max_states = 32;  // generated element reduction threshold
    std::optional<std::uint64_t> prime; // restricts prime-indexed suites
};

// One deterministic check; on failure the witness holds the inputs (element
// expressions or machines in the interchange format) needed to replay it.
struct CaseResult {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;
    double seconds = 0.0;

    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

// hilbert, commutator, simplicity-step, small-support, oblivious-product,
// fp-canonical, involution, group-axioms, canonicity.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name ("all" is handled
// by run_all_suites).
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

} // namespace rational
