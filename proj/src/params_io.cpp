// params_io.cpp

#include "qbw/params_io.hpp"

#include <fstream>
#include <set>

#include "qbw/errors.hpp"

namespace qbw {

using nlohmann::json;

LogBase parse_log_base(const std::string& s) {
    if (s == "e" || s == "nat" || s == "nats") return LogBase::E;
    if (s == "2" || s == "bit" || s == "bits") return LogBase::Two;
    throw UsageError("thermo_log_base must be 'e' or '2', got '" + s + "'");
}

namespace {

double number(const json& v, const std::string& key) {
    if (!v.is_number()) throw UsageError("config key '" + key + "' must be a number");
    return v.get<double>();
}

std::string text(const json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    throw UsageError("config key '" + key + "' must be a string");
}

} // namespace

RunConfig config_from_json(const json& j) {
    if (!j.is_object()) throw UsageError("config root must be a JSON object");

    static const std::set<std::string> known = {
        "units", "omega0", "g", "F", "J", "delta_A", "delta_B", "reservoir",
        "reservoir.kind", "reservoir.n", "beta", "thermo_log_base"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw UsageError("unknown config key '" + key + "'");

    std::string units = "g";
    if (j.contains("units")) units = text(j["units"], "units");
    if (units != "g" && units != "omega0")
        throw UsageError("units must be 'g' or 'omega0', got '" + units + "'");

    RunConfig cfg;
    ChargingParams& p = cfg.params;
    if (j.contains("omega0")) p.omega0 = number(j["omega0"], "omega0");
    if (j.contains("g")) p.g = number(j["g"], "g");
    if (units == "omega0") p.g *= p.omega0;

    const double scale = units == "g" ? p.g : p.omega0;
    if (j.contains("F")) p.F = scale * number(j["F"], "F");
    if (j.contains("J")) p.J = scale * number(j["J"], "J");
    if (j.contains("delta_A")) p.delta_A = scale * number(j["delta_A"], "delta_A");
    if (j.contains("delta_B")) p.delta_B = scale * number(j["delta_B"], "delta_B");
    if (j.contains("beta")) p.beta = number(j["beta"], "beta") / p.omega0;

    ReservoirKind kind = ReservoirKind::Bosonic;
    double n = 0.0;
    if (j.contains("reservoir")) {
        const json& r = j["reservoir"];
        if (!r.is_object()) throw UsageError("config key 'reservoir' must be an object");
        for (const auto& [key, _] : r.items())
            if (key != "kind" && key != "n")
                throw UsageError("unknown config key 'reservoir." + key + "'");
        if (r.contains("kind")) kind = parse_reservoir_kind(text(r["kind"], "reservoir.kind"));
        if (r.contains("n")) n = number(r["n"], "reservoir.n");
    }
    if (j.contains("reservoir.kind"))
        kind = parse_reservoir_kind(text(j["reservoir.kind"], "reservoir.kind"));
    if (j.contains("reservoir.n")) n = number(j["reservoir.n"], "reservoir.n");
    p.reservoir = Reservoir::make(kind, n);

    if (j.contains("thermo_log_base"))
        cfg.thermo_log_base = parse_log_base(text(j["thermo_log_base"], "thermo_log_base"));

    validate(p);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

json config_to_json(const RunConfig& cfg) {
    const ChargingParams& p = cfg.params;
    return json{
        {"units", "g"},
        {"omega0", p.omega0},
        {"g", p.g},
        {"F", p.F / p.g},
        {"J", p.J / p.g},
        {"delta_A", p.delta_A / p.g},
        {"delta_B", p.delta_B / p.g},
        {"reservoir", {{"kind", to_string(p.reservoir.kind())}, {"n", p.reservoir.n()}}},
        {"beta", p.beta * p.omega0},
        {"thermo_log_base", cfg.thermo_log_base == LogBase::E ? "e" : "2"},
    };
}

} // namespace qbw
