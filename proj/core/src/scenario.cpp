#include "sngate/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sngate {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const char* block, std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) { known = true; break; }
        if (!known)
            throw ScenarioError(std::string("unknown key '") + item.key() + "' in block '" +
                                block + "'");
    }
}

double get_num(const json& obj, const char* block, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ScenarioError(std::string(block) + "." + key + ": expected a number");
    return v.get<double>();
}

int get_int(const json& obj, const char* block, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        throw ScenarioError(std::string(block) + "." + key + ": expected an integer");
    return v.get<int>();
}

void parse_into(Scenario& sc, const json& root) {
    require_keys(root, "scenario",
                 {"constants", "dispersion", "zeeman", "coupling", "pump", "layout", "fields",
                  "gate"});

    if (root.contains("constants")) {
        const auto& b = root.at("constants");
        require_keys(b, "constants", {"kb_hz_per_kelvin", "zeeman_hz_per_oe", "electron_g"});
        sc.constants.kb_hz_per_kelvin =
            get_num(b, "constants", "kb_hz_per_kelvin", sc.constants.kb_hz_per_kelvin);
        sc.constants.zeeman_hz_per_oe =
            get_num(b, "constants", "zeeman_hz_per_oe", sc.constants.zeeman_hz_per_oe);
        sc.constants.electron_g = get_num(b, "constants", "electron_g", sc.constants.electron_g);
    }
    if (root.contains("dispersion")) {
        const auto& b = root.at("dispersion");
        require_keys(b, "dispersion", {"offset_k", "exchange_k", "exchange_ratio"});
        sc.dispersion.offset_k = get_num(b, "dispersion", "offset_k", sc.dispersion.offset_k);
        sc.dispersion.exchange_k = get_num(b, "dispersion", "exchange_k", sc.dispersion.exchange_k);
        sc.dispersion.exchange_ratio =
            get_num(b, "dispersion", "exchange_ratio", sc.dispersion.exchange_ratio);
    }
    if (root.contains("zeeman")) {
        const auto& b = root.at("zeeman");
        require_keys(b, "zeeman", {"gap_k", "g"});
        sc.zeeman.gap_k = get_num(b, "zeeman", "gap_k", sc.zeeman.gap_k);
        sc.zeeman.g = get_num(b, "zeeman", "g", sc.zeeman.g);
    }
    if (root.contains("coupling")) {
        const auto& b = root.at("coupling");
        require_keys(b, "coupling",
                     {"gamma_n_mhz_per_koe", "hyperfine_koe_per_mub", "packet_sites",
                      "separation_sites"});
        sc.coupling.gamma_n_mhz_per_koe =
            get_num(b, "coupling", "gamma_n_mhz_per_koe", sc.coupling.gamma_n_mhz_per_koe);
        sc.coupling.hyperfine_koe_per_mub =
            get_num(b, "coupling", "hyperfine_koe_per_mub", sc.coupling.hyperfine_koe_per_mub);
        sc.coupling.packet_sites = get_int(b, "coupling", "packet_sites", sc.coupling.packet_sites);
        sc.coupling.separation_sites =
            get_int(b, "coupling", "separation_sites", sc.coupling.separation_sites);
    }
    if (root.contains("pump")) {
        const auto& b = root.at("pump");
        require_keys(b, "pump", {"excitation_rate_per_s", "lifetime_s", "schedule"});
        sc.pump.excitation_rate_per_s =
            get_num(b, "pump", "excitation_rate_per_s", sc.pump.excitation_rate_per_s);
        sc.pump.lifetime_s = get_num(b, "pump", "lifetime_s", sc.pump.lifetime_s);
        if (b.contains("schedule")) {
            const auto& segs = b.at("schedule");
            if (!segs.is_array())
                throw ScenarioError("pump.schedule: expected an array of segments");
            sc.schedule.segments.clear();
            for (const auto& seg : segs) {
                require_keys(seg, "pump.schedule[]", {"duration_s", "excitation_rate_per_s"});
                if (!seg.contains("duration_s") || !seg.contains("excitation_rate_per_s"))
                    throw ScenarioError("pump.schedule[]: segment needs duration_s and "
                                        "excitation_rate_per_s");
                sc.schedule.segments.push_back(
                    {get_num(seg, "pump.schedule[]", "duration_s", 0.0),
                     get_num(seg, "pump.schedule[]", "excitation_rate_per_s", 0.0)});
            }
        }
    }
    if (root.contains("layout")) {
        const auto& b = root.at("layout");
        require_keys(b, "layout",
                     {"lattice_spacing", "base_field_koe", "gradient_koe_per_length",
                      "qubit_positions", "extent"});
        sc.layout.lattice_spacing =
            get_num(b, "layout", "lattice_spacing", sc.layout.lattice_spacing);
        sc.layout.base_field_koe =
            get_num(b, "layout", "base_field_koe", sc.layout.base_field_koe);
        sc.layout.gradient_koe_per_length =
            get_num(b, "layout", "gradient_koe_per_length", sc.layout.gradient_koe_per_length);
        if (b.contains("qubit_positions")) {
            const auto& qp = b.at("qubit_positions");
            if (!qp.is_array())
                throw ScenarioError("layout.qubit_positions: expected an array of integers");
            sc.layout.qubit_positions.clear();
            for (const auto& v : qp) {
                if (!v.is_number_integer())
                    throw ScenarioError("layout.qubit_positions: expected an array of integers");
                sc.layout.qubit_positions.push_back(v.get<int>());
            }
        }
        if (b.contains("extent")) {
            const auto& ex = b.at("extent");
            if (!ex.is_array() || ex.size() != 2 || !ex[0].is_number_integer() ||
                !ex[1].is_number_integer())
                throw ScenarioError("layout.extent: expected [min_index, max_index]");
            sc.layout.extent_min = ex[0].get<int>();
            sc.layout.extent_max = ex[1].get<int>();
        }
    }
    if (root.contains("fields")) {
        const auto& b = root.at("fields");
        require_keys(b, "fields", {"packet_shift_koe", "conditional_shift_koe"});
        LocalFields f{};
        f.packet_shift_koe = get_num(b, "fields", "packet_shift_koe", 0.0);
        f.conditional_shift_koe = get_num(b, "fields", "conditional_shift_koe", 0.0);
        sc.fields = f;
    }
    if (root.contains("gate")) {
        const auto& b = root.at("gate");
        require_keys(b, "gate",
                     {"coupling_override_hz", "control_detuning_hz", "target_detuning_hz",
                      "pulse_mode", "rabi_hz"});
        if (b.contains("coupling_override_hz"))
            sc.gate.coupling_override_hz = get_num(b, "gate", "coupling_override_hz", 0.0);
        sc.gate.control_detuning_hz =
            get_num(b, "gate", "control_detuning_hz", sc.gate.control_detuning_hz);
        sc.gate.target_detuning_hz =
            get_num(b, "gate", "target_detuning_hz", sc.gate.target_detuning_hz);
        if (b.contains("pulse_mode")) {
            const auto mode = b.at("pulse_mode");
            if (!mode.is_string() ||
                (mode.get<std::string>() != "ideal" && mode.get<std::string>() != "finite"))
                throw ScenarioError("gate.pulse_mode: expected \"ideal\" or \"finite\"");
            sc.gate.ideal_pulses = mode.get<std::string>() == "ideal";
        }
        sc.gate.rabi_hz = get_num(b, "gate", "rabi_hz", sc.gate.rabi_hz);
    }
}

} // namespace

double Scenario::steady_population() const { return steady_state_population(pump); }

double Scenario::steady_coupling_hz() const {
    return range_function_k0(dispersion, steady_population(), coupling, constants);
}

double Scenario::gate_coupling_hz() const {
    return gate.coupling_override_hz ? *gate.coupling_override_hz : steady_coupling_hz();
}

LocalFields Scenario::effective_fields() const {
    if (fields) return *fields;
    // Doublet splitting 2*gamma_n*h_SN matches |W|; h_tr from the packet
    // heuristic. Both are placeholders for measured values.
    const double w_mhz = std::abs(steady_coupling_hz()) / 1.0e6;
    return LocalFields{
        .packet_shift_koe = estimate_packet_shift_koe(coupling, steady_population()),
        .conditional_shift_koe = w_mhz / (2.0 * coupling.gamma_n_mhz_per_koe),
    };
}

void Scenario::validate() const {
    try {
        constants.validate();
        dispersion.validate();
        zeeman.validate();
        coupling.validate();
        pump.validate();
        schedule.validate();
        layout.validate();
        if (fields) fields->validate();
        if (gate.coupling_override_hz && !std::isfinite(*gate.coupling_override_hz))
            throw std::domain_error("gate.coupling_override_hz: must be finite");
        if (!std::isfinite(gate.control_detuning_hz) || !std::isfinite(gate.target_detuning_hz))
            throw std::domain_error("gate detunings must be finite");
        if (!(std::isfinite(gate.rabi_hz) && gate.rabi_hz > 0.0))
            throw std::domain_error("gate.rabi_hz: must be finite and > 0");
    } catch (const std::domain_error& e) {
        throw ScenarioError(e.what());
    }
}

Scenario Scenario::reference() {
    Scenario sc;
    sc.constants = PhysicalConstants{};
    sc.dispersion = DispersionModel{.offset_k = 0.0, .exchange_k = 50.0, .exchange_ratio = 0.2};
    sc.zeeman = ZeemanModel{.gap_k = 50.0, .g = 2.0};
    sc.coupling = CouplingParams{.gamma_n_mhz_per_koe = 4.3,
                                 .hyperfine_koe_per_mub = 100.0,
                                 .packet_sites = 20,
                                 .separation_sites = 10};
    // Steady state 0.2 = n0/N of 0.01 for the 20-site packet.
    sc.pump = PumpParams{.excitation_rate_per_s = 200.0, .lifetime_s = 1.0e-3};
    sc.schedule.segments = {DriveSegment{5.0e-3, 200.0}, DriveSegment{5.0e-3, 0.0}};
    sc.layout = ChainLayout{.lattice_spacing = 1.0,
                            .base_field_koe = 100.0,
                            .gradient_koe_per_length = 0.01,
                            .qubit_positions = {0, 10},
                            .extent_min = 0,
                            .extent_max = 100};
    sc.gate = GateSettings{};
    return sc;
}

Scenario Scenario::from_json_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ScenarioError("config root must be a JSON object");
    Scenario sc = reference();
    try {
        parse_into(sc, root);
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("config error: ") + e.what());
    }
    sc.validate();
    return sc;
}

Scenario Scenario::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

} // namespace sngate
