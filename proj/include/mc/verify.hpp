#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mc/exponent.hpp"
#include "mc/simplicial.hpp"

namespace mc {

/// Suite parameters. Unset values take the suite's defaults.
struct VerificationParams {
    std::optional<std::size_t> n;             ///< largest instance size
    std::optional<Degree> wmax;               ///< largest weight (or rho for ideal suites)
    std::optional<std::size_t> count;         ///< random instances
    std::optional<std::size_t> closure_count; ///< radical-formulas: closure-side instances
    std::optional<std::size_t> max_gens;      ///< ideal suites: generators per ideal
    std::uint64_t seed = 1;
    bool exhaustive = false;
    bool allow_large = false;                 ///< lift the n <= 8, weight <= 6 caps
    std::vector<Field> fields;                ///< empty: the suite default
    unsigned threads = 0;                     ///< 0: hardware concurrency
};

struct VerificationFailure {
    std::size_t index = 0;
    nlohmann::json instance; ///< replayable with replay_instance()
    std::string detail;
};

struct VerificationRun {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::vector<VerificationFailure> failures;
    std::vector<double> timing_ms;

    bool passed() const { return failures.empty(); }

    /// Report JSON; timing is optional so runs can be compared byte for byte.
    nlohmann::json to_json(bool with_timing = true) const;
};

/// main-inequality, complete-formulas, radical-formulas, acyclicity,
/// oracle-crosscheck, closure-idempotence, admissible-vertex.
const std::vector<std::string> &suite_names();

/// Throws DomainError on an unknown suite or out-of-range parameters.
VerificationRun run_suite(const std::string &suite, const VerificationParams &params);

/// Re-runs one instance record from a failure list (or a generated instance).
/// Returns the failure detail, or nothing if the instance passes.
std::optional<std::string> replay_instance(const std::string &suite, const nlohmann::json &instance);

/// Instance descriptions a suite would run, without running them.
std::vector<nlohmann::json> generate_instances(const std::string &suite, const VerificationParams &params);

/// The fixed worked examples (strict triangle pair, ten-vertex sink example,
/// two-vertex rule, ...), one instance per check.
VerificationRun run_golden();

/// Seed from MC_SEED when set, otherwise `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 1);

} // namespace mc
