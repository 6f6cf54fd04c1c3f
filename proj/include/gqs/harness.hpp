#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gqs/report.hpp"
#include "gqs/sequences.hpp"

namespace gqs {

enum class Target {
    GaussBound,
    Remainder,
    WelchSanity,
    C1Bound,
    C2Bound,
    A1Bound,
    A2Bound,
    ParisResidual,
    Littlewood,
    FibZeta,
};

const char* target_name(Target t);
Target target_from_name(const std::string& name);

struct SetSpec {
    SetKind kind = SetKind::C1;
    std::int64_t K = 0;
    std::int64_t m = 0;
    std::int64_t modulus = 0; // L or p

    nlohmann::json to_json() const;
    static SetSpec from_json(const nlohmann::json& j);
};

SequenceSet build_set(const SetSpec& spec);

// One sweep campaign. Identical (config, rng_seed) produce identical canonical
// reports for any worker count; `workers` is a hint, never echoed.
struct SweepConfig {
    Target target = Target::GaussBound;

    // GaussBound: exhaustive q range plus random extra samples below random_q_max
    std::int64_t q_lo = 2;
    std::int64_t q_hi = 200;
    int theta_grid = 16;
    std::int64_t random_samples = 2000;
    std::int64_t random_q_max = 5000;

    // Littlewood
    std::int64_t n_max = 1001;
    int littlewood_grid = 64;

    // FibZeta
    int fib_terms = 20;

    // Set-based targets
    std::vector<SetSpec> sets;

    double spot_check_fraction = 0.01;
    std::uint64_t rng_seed = 1;
    int workers = 1;
    std::int64_t modulus_cap = 20000;

    nlohmann::json to_json() const;
    static SweepConfig from_json(const nlohmann::json& j);
};

// Built-in parameters for each target (the verification campaign shipped with
// the tool); see README for the roster.
SweepConfig default_config(Target t);

VerificationReport run_sweep(const SweepConfig& config);

// Config file: a single config object or an array of them.
std::vector<SweepConfig> load_config_file(const std::string& path);

} // namespace gqs
