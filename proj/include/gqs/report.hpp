#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace gqs {

inline constexpr const char* kToolVersion = "gqs 0.1.0";
inline constexpr const char* kReportSchema = "gqs.report/1";

// Outcome of one verification sweep. `pass` is the strict inequality
// observed_max < bound_value, evaluated at the tightest-margin sample when
// the bound varies across the sweep.
struct VerificationReport {
    std::string target;
    nlohmann::json params = nlohmann::json::object();
    std::string bound_name;
    double bound_value = 0.0;
    double observed_max = 0.0;
    nlohmann::json witness = nlohmann::json::object();
    bool pass = false;
    nlohmann::json stats = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::string tool_version = kToolVersion;

    // Not part of the canonical serialization: varies run to run.
    double wall_time_ms = 0.0;

    nlohmann::json to_json(bool include_timing = false) const;
    static VerificationReport from_json(const nlohmann::json& j);
};

// Canonical serialization: sorted keys, two-space indent, reals printed with
// 17 significant digits so they round-trip bit-exactly.
std::string canonical_json(const nlohmann::json& j);

void emit_report(const VerificationReport& report, const std::string& path,
                 bool include_timing = false);
VerificationReport load_report(const std::string& path);

} // namespace gqs
