// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "saginqos/association.hpp"
#include "saginqos/channel.hpp"
#include "saginqos/fbc.hpp"
#include "saginqos/geometry.hpp"
#include "saginqos/interference.hpp"
#include "saginqos/qos.hpp"

namespace saginqos {

class ScenarioError : public std::runtime_error {
public:
    explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

// Flat dotted-key scenario configuration. Unset keys fall back to the
// defaults below (the simulation-section operating point: 2.4 GHz ground
// tier, 28 GHz UAV tier, altitudes in [10, 500] m, both densities
// 15e-6 /m^2, phi_U = 10 dB, phi_S = 0 dB).
class Scenario {
public:
    Scenario() = default;

    static const std::map<std::string, std::string>& default_values() {
        static const std::map<std::string, std::string> defaults = {
            {"region.radius_m", "10000"},
            {"los.nu1", "9.61"},
            {"los.nu2", "0.16"},

            {"ground.density", "15e-6"},
            {"ground.tx_power_w", "1.0"},
            {"ground.antenna_gain", "1.0"},
            {"ground.carrier_hz", "2.4e9"},
            {"ground.pathloss_exponent", "3.5"},
            {"ground.nakagami_m", "1"},

            {"uav.density", "15e-6"},
            {"uav.altitude_min_m", "10"},
            {"uav.altitude_max_m", "500"},
            {"uav.altitude_fixed_m", "0"},
            {"uav.tx_power_w", "1.0"},
            {"uav.antenna_gain", "100.0"},
            {"uav.bias", "10.0"},
            {"uav.carrier_hz", "28e9"},
            {"uav.noise_power_w", "4e-11"},
            {"uav.pathloss_exponent_los", "2.5"},
            {"uav.pathloss_exponent_nlos", "3.5"},
            {"uav.excess_loss_los", "1.0"},
            {"uav.excess_loss_nlos", "0.1"},
            {"uav.nakagami_m", "1"},

            {"sat.distance_m", "600e3"},
            {"sat.tx_power_w", "20.0"},
            {"sat.antenna_gain", "1e4"},
            {"sat.bias", "1.0"},
            {"sat.carrier_hz", "2e9"},
            {"sat.noise_power_w", "1e-13"},
            {"sat.pathloss_exponent", "2.0"},
            {"sat.unit_noise", "false"},
            {"sat.fading.omega", "1.0"},
            {"sat.fading.b", "0.25"},
            {"sat.fading.gamma", "3"},

            {"channel.near_field_m", "100"},

            {"serving.uav_distance_m", "0"},  // 0 = mean nearest-neighbor distance
            {"serving.uav_altitude_m", "0"},  // 0 = fixed altitude or range midpoint

            {"fbc.blocklength", "200"},
            {"fbc.rate", "0.5"},
            {"fbc.target_error", "1e-3"},

            {"qos.exponent", "0.01"},
            {"qos.delay_bound", "100"},
            {"qos.nonempty_prob", "1.0"},
            {"qos.overflow_threshold", "0"},

            {"assoc.uav_los_gate", "false"},
            {"assoc.satellite_enabled", "true"},
            {"assoc.uav_enabled", "true"},

            {"mc.trials", "10000"},
            {"mc.seed", "20250810"},
            {"mc.oracle", "false"},

            {"run.tol", "1e-8"},

            {"sweep.parameter", ""},
            {"sweep.values", ""},
        };
        return defaults;
    }

    static Scenario defaults() { return Scenario(); }

    static Scenario from_string(const std::string& text) {
        Scenario sc;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const std::string trimmed = trim(line);
            if (trimmed.empty()) continue;
            const auto eq = trimmed.find('=');
            if (eq == std::string::npos) {
                throw ScenarioError("scenario parse error at line " + std::to_string(lineno) +
                                    ": expected key = value");
            }
            const std::string key = trim(trimmed.substr(0, eq));
            const std::string value = trim(trimmed.substr(eq + 1));
            if (key.empty()) {
                throw ScenarioError("scenario parse error at line " + std::to_string(lineno) +
                                    ": empty key");
            }
            sc.set(key, value);
        }
        sc.validate();
        return sc;
    }

    static Scenario from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ScenarioError("cannot open scenario file: " + path);
        std::ostringstream body;
        body << in.rdbuf();
        return from_string(body.str());
    }

    void set(const std::string& key, const std::string& value) {
        if (default_values().find(key) == default_values().end()) {
            throw ScenarioError("unknown scenario key: " + key);
        }
        overrides_[key] = value;
    }

    void set(const std::string& key, double value) { set(key, format_number(value)); }

    std::string get(const std::string& key) const {
        const auto it = overrides_.find(key);
        if (it != overrides_.end()) return it->second;
        const auto dit = default_values().find(key);
        if (dit == default_values().end()) throw ScenarioError("unknown scenario key: " + key);
        return dit->second;
    }

    double get_double(const std::string& key) const {
        const std::string v = get(key);
        try {
            std::size_t pos = 0;
            const double x = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return x;
        } catch (const std::exception&) {
            throw ScenarioError("scenario key " + key + " is not a number: '" + v + "'");
        }
    }

    int get_int(const std::string& key) const {
        const double x = get_double(key);
        const int i = static_cast<int>(x);
        if (static_cast<double>(i) != x) {
            throw ScenarioError("scenario key " + key + " is not an integer");
        }
        return i;
    }

    bool get_bool(const std::string& key) const {
        const std::string v = get(key);
        if (v == "true" || v == "1" || v == "on") return true;
        if (v == "false" || v == "0" || v == "off") return false;
        throw ScenarioError("scenario key " + key + " is not a boolean: '" + v + "'");
    }

    std::vector<double> get_list(const std::string& key) const {
        const std::string v = get(key);
        std::vector<double> out;
        std::istringstream in(v);
        std::string item;
        while (std::getline(in, item, ',')) {
            const std::string t = trim(item);
            if (t.empty()) continue;
            try {
                out.push_back(std::stod(t));
            } catch (const std::exception&) {
                throw ScenarioError("scenario key " + key + " has a bad list item: '" + t + "'");
            }
        }
        return out;
    }

    // FNV-1a over the canonical key=value listing (defaults included, so a
    // mutated default also changes the hash).
    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ULL;
        auto feed = [&h](const std::string& s) {
            for (unsigned char c : s) {
                h ^= c;
                h *= 1099511628211ULL;
            }
        };
        for (const auto& [k, v] : default_values()) {
            feed(k);
            feed("=");
            feed(get(k));
            feed("\n");
        }
        return h;
    }

    std::string hash_hex() const {
        std::ostringstream oss;
        oss << std::hex << hash();
        return oss.str();
    }

    // ---- typed views -----------------------------------------------------

    Region region() const { return Region{get_double("region.radius_m")}; }

    LosModelParams los() const { return {get_double("los.nu1"), get_double("los.nu2")}; }

    TierProcess ground_tier() const { return {get_double("ground.density"), 0.0, 0.0}; }

    TierProcess uav_tier() const {
        const double fixed = get_double("uav.altitude_fixed_m");
        if (fixed > 0.0) return {get_double("uav.density"), fixed, fixed};
        return {get_double("uav.density"), get_double("uav.altitude_min_m"),
                get_double("uav.altitude_max_m")};
    }

    // Ground budget carries the satellite bias: every GBS interferes with the
    // satellite downlink weighted by phi_S.
    LinkBudget ground_budget() const {
        LinkBudget b;
        b.tx_power_w = get_double("ground.tx_power_w");
        b.antenna_gain = get_double("ground.antenna_gain");
        b.bias = get_double("sat.bias");
        b.carrier_hz = get_double("ground.carrier_hz");
        b.noise_power_w = sat_noise_w();
        b.pathloss_exponent = get_double("ground.pathloss_exponent");
        b.near_field_m = get_double("channel.near_field_m");
        b.validate();
        return b;
    }

    LinkBudget uav_budget() const {
        LinkBudget b;
        b.tx_power_w = get_double("uav.tx_power_w");
        b.antenna_gain = get_double("uav.antenna_gain");
        b.bias = get_double("uav.bias");
        b.carrier_hz = get_double("uav.carrier_hz");
        b.noise_power_w = get_double("uav.noise_power_w");
        b.pathloss_exponent = get_double("uav.pathloss_exponent_los");
        b.pathloss_exponent_nlos = get_double("uav.pathloss_exponent_nlos");
        b.excess_loss_los = get_double("uav.excess_loss_los");
        b.excess_loss_nlos = get_double("uav.excess_loss_nlos");
        b.near_field_m = get_double("channel.near_field_m");
        b.validate();
        return b;
    }

    LinkBudget sat_budget() const {
        LinkBudget b;
        b.tx_power_w = get_double("sat.tx_power_w");
        b.antenna_gain = get_double("sat.antenna_gain");
        b.bias = get_double("sat.bias");
        b.carrier_hz = get_double("sat.carrier_hz");
        b.noise_power_w = sat_noise_w();
        b.pathloss_exponent = get_double("sat.pathloss_exponent");
        b.near_field_m = get_double("channel.near_field_m");
        b.validate();
        return b;
    }

    double sat_noise_w() const {
        return get_bool("sat.unit_noise") ? 1.0 : get_double("sat.noise_power_w");
    }

    ShadowedRicianParams sat_fading() const {
        return {get_double("sat.fading.omega"), get_double("sat.fading.b"),
                get_int("sat.fading.gamma")};
    }

    NakagamiParams ground_nakagami() const { return {get_int("ground.nakagami_m")}; }
    NakagamiParams uav_nakagami() const { return {get_int("uav.nakagami_m")}; }

    FbcSpec fbc() const {
        return {get_int("fbc.blocklength"), get_double("fbc.rate"),
                get_double("fbc.target_error")};
    }

    QosSpec qos() const {
        return {get_double("qos.exponent"), get_double("qos.delay_bound"),
                get_double("qos.nonempty_prob"), get_double("qos.overflow_threshold")};
    }

    GroundInterferenceModel ground_interference() const {
        return {ground_tier(), ground_budget(), ground_nakagami(), region()};
    }

    UavInterferenceModel uav_interference() const {
        return {uav_tier(), uav_budget(), los(), uav_nakagami(), region()};
    }

    // Deterministic signal coefficient P phi G PL of the satellite downlink.
    double satellite_signal_coeff() const {
        const auto b = sat_budget();
        return b.tx_power_w * b.bias * b.antenna_gain *
               pathloss_free_space(b, get_double("sat.distance_m"));
    }

    double serving_uav_altitude() const {
        const double z = get_double("serving.uav_altitude_m");
        if (z > 0.0) return z;
        const auto tier = uav_tier();
        return tier.fixed_altitude() ? tier.altitude_min_m
                                     : 0.5 * (tier.altitude_min_m + tier.altitude_max_m);
    }

    double serving_uav_distance() const {
        const double d = get_double("serving.uav_distance_m");
        const double z = serving_uav_altitude();
        if (d > 0.0) {
            if (d < z) throw ScenarioError("serving.uav_distance_m is below the serving altitude");
            return d;
        }
        const double density = get_double("uav.density");
        if (!(density > 0.0)) return z;
        const double horiz = mean_nearest_horizontal_distance(density);
        return std::sqrt(horiz * horiz + z * z);
    }

    double uav_signal_coeff() const {
        const auto b = uav_budget();
        return b.tx_power_w * b.bias * b.antenna_gain *
               pathloss_uav(b, serving_uav_distance(), serving_uav_altitude(), los());
    }

    AssociationConfig association() const {
        AssociationConfig cfg;
        cfg.satellite = {sat_budget(), get_double("sat.distance_m"),
                         get_bool("assoc.satellite_enabled")};
        cfg.uav = {uav_budget(), los(), uav_tier(), get_bool("assoc.uav_enabled")};
        cfg.uav_los_gate = get_bool("assoc.uav_los_gate");
        return cfg;
    }

    std::uint64_t seed() const { return static_cast<std::uint64_t>(get_double("mc.seed")); }
    std::size_t trials() const { return static_cast<std::size_t>(get_int("mc.trials")); }
    double tol() const { return get_double("run.tol"); }

    // Builds every typed view once so an invalid value reports the failing
    // key region up front.
    void validate() const {
        try {
            region().validate();
            los().validate();
            ground_tier().validate();
            uav_tier().validate();
            ground_budget();
            uav_budget();
            sat_budget();
            sat_fading().validate();
            ground_nakagami().validate();
            uav_nakagami().validate();
            fbc().validate();
            qos().validate();
            if (!(get_double("sat.distance_m") > 0.0)) {
                throw std::invalid_argument("sat.distance_m must be > 0");
            }
            if (get_int("mc.trials") < 1) throw std::invalid_argument("mc.trials must be >= 1");
            if (!(tol() > 0.0 && tol() < 1.0)) throw std::invalid_argument("run.tol outside (0,1)");
            if (!get("sweep.parameter").empty()) {
                if (default_values().find(get("sweep.parameter")) == default_values().end()) {
                    throw std::invalid_argument("sweep.parameter names an unknown key");
                }
                if (get_list("sweep.values").empty()) {
                    throw std::invalid_argument("sweep.values must be a nonempty list");
                }
            }
        } catch (const ScenarioError&) {
            throw;
        } catch (const std::exception& e) {
            throw ScenarioError(std::string("scenario invariant violation: ") + e.what());
        }
    }

private:
    static std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return "";
        const auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    static std::string format_number(double v) {
        std::ostringstream oss;
        oss.precision(17);
        oss << v;
        return oss.str();
    }

    std::map<std::string, std::string> overrides_;
};

}  // namespace saginqos
