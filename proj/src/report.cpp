#include "gqs/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gqs {

namespace {

void emit_value(const nlohmann::json& j, std::string& out, int indent);

void emit_indent(std::string& out, int indent) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
}

void emit_double(double v, std::string& out) {
    if (!std::isfinite(v)) throw std::runtime_error("cannot serialize non-finite real");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void emit_value(const nlohmann::json& j, std::string& out, int indent) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: out += "null"; break;
        case nlohmann::json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case nlohmann::json::value_t::number_integer:
        case nlohmann::json::value_t::number_unsigned: out += j.dump(); break;
        case nlohmann::json::value_t::number_float: emit_double(j.get<double>(), out); break;
        case nlohmann::json::value_t::string: out += j.dump(); break;
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (auto it = j.begin(); it != j.end(); ++it) {
                emit_indent(out, indent + 1);
                emit_value(*it, out, indent + 1);
                if (std::next(it) != j.end()) out += ',';
                out += '\n';
            }
            emit_indent(out, indent);
            out += ']';
            break;
        }
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            for (auto it = j.begin(); it != j.end(); ++it) { // nlohmann objects iterate sorted
                emit_indent(out, indent + 1);
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                emit_value(it.value(), out, indent + 1);
                if (std::next(it) != j.end()) out += ',';
                out += '\n';
            }
            emit_indent(out, indent);
            out += '}';
            break;
        }
        default: throw std::runtime_error("unsupported json value type");
    }
}

} // namespace

std::string canonical_json(const nlohmann::json& j) {
    std::string out;
    emit_value(j, out, 0);
    out += '\n';
    return out;
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
    nlohmann::json j = {{"schema", kReportSchema},
                        {"target", target},
                        {"params", params},
                        {"bound_name", bound_name},
                        {"bound_value", bound_value},
                        {"observed_max", observed_max},
                        {"witness", witness},
                        {"pass", pass},
                        {"stats", stats},
                        {"seed", seed},
                        {"tool_version", tool_version}};
    if (include_timing) j["wall_time_ms"] = wall_time_ms;
    return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.target = j.at("target").get<std::string>();
    r.params = j.value("params", nlohmann::json::object());
    r.bound_name = j.value("bound_name", std::string());
    r.bound_value = j.at("bound_value").get<double>();
    r.observed_max = j.at("observed_max").get<double>();
    r.witness = j.value("witness", nlohmann::json::object());
    r.pass = j.at("pass").get<bool>();
    r.stats = j.value("stats", nlohmann::json::object());
    r.seed = j.value("seed", static_cast<std::uint64_t>(0));
    r.tool_version = j.value("tool_version", std::string(kToolVersion));
    r.wall_time_ms = j.value("wall_time_ms", 0.0);
    return r;
}

void emit_report(const VerificationReport& report, const std::string& path, bool include_timing) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << canonical_json(report.to_json(include_timing));
    if (!out) throw std::runtime_error("write failed: " + path);
}

VerificationReport load_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    nlohmann::json j;
    in >> j;
    return VerificationReport::from_json(j);
}

} // namespace gqs
