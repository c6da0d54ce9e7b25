#include "qnr/scenario_io.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "qnr/errors.hpp"
#include "qnr/noise_temperature.hpp"
#include "qnr/quantities.hpp"
#include "qnr/sweep.hpp"

namespace qnr {

namespace {

const char* const kKnownKeys[] = {
    "f0_hz",     "b_hz",        "t_dwell_s", "g_db",     "g_lin",
    "sigma_m2",  "loss_db",     "loss_lin",  "snr_min_db", "snr_min_lin",
    "t_s_k",     "t_a_k",       "l_rf_db",   "nf_db",    "t_0_k",
    "ns_eta",    "p_t_w",
};

bool known_key(std::string_view key) {
    for (const char* k : kKnownKeys) {
        if (key == k) return true;
    }
    return false;
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_value(const std::string& key, const std::string& text, std::size_t line_no) {
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw config_error("scenario line " + std::to_string(line_no) + ": value of '" +
                           key + "' is not a number: '" + text + "'");
    }
    return v;
}

class KeySet {
public:
    void insert(std::string key, double value, std::size_t line_no) {
        if (!known_key(key)) {
            throw config_error("scenario line " + std::to_string(line_no) +
                               ": unknown key '" + key + "'");
        }
        if (values_.count(key)) {
            throw config_error("scenario line " + std::to_string(line_no) +
                               ": duplicate key '" + key + "'");
        }
        values_[std::move(key)] = value;
    }
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    double get(const std::string& key) const { return values_.at(key); }
    double require(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) {
            throw config_error("scenario: missing required key '" + key + "'");
        }
        return it->second;
    }

private:
    std::map<std::string, double> values_;
};

// Exactly one of a dB-suffixed and a linear form.
double one_of(const KeySet& keys, const std::string& db_key, const std::string& lin_key) {
    const bool has_db = keys.has(db_key);
    const bool has_lin = keys.has(lin_key);
    if (has_db && has_lin) {
        throw config_error("scenario: '" + db_key + "' and '" + lin_key +
                           "' are mutually exclusive");
    }
    if (!has_db && !has_lin) {
        throw config_error("scenario: need '" + db_key + "' or '" + lin_key + "'");
    }
    return has_db ? db_to_linear(keys.get(db_key)) : keys.get(lin_key);
}

} // namespace

LoadedScenario parse_scenario(std::string_view text) {
    KeySet keys;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        std::string_view body = raw.substr(0, raw.find('#'));
        std::string line = trim(body);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("scenario line " + std::to_string(line_no) +
                               ": expected 'key = value', got '" + line + "'");
        }
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        const double parsed = parse_value(key, value, line_no);
        keys.insert(std::move(key), parsed, line_no);
    }

    LoadedScenario loaded;
    Scenario& s = loaded.scenario;
    s.f0_hz = keys.require("f0_hz");
    s.bandwidth_hz = keys.require("b_hz");
    s.dwell_s = keys.require("t_dwell_s");
    s.rcs_m2 = keys.require("sigma_m2");
    s.gain = one_of(keys, "g_db", "g_lin");
    s.snr_min = one_of(keys, "snr_min_db", "snr_min_lin");

    if (keys.has("loss_db") && keys.has("loss_lin")) {
        throw config_error("scenario: 'loss_db' and 'loss_lin' are mutually exclusive");
    }
    if (keys.has("loss_db")) {
        const double loss_db = keys.get("loss_db");
        if (loss_db > 0.0) {
            throw config_error("scenario: loss_db must be <= 0 dB (a loss), got " +
                               format_double(loss_db, 6));
        }
        s.loss = db_to_linear(loss_db);
    } else if (keys.has("loss_lin")) {
        s.loss = keys.get("loss_lin");
    }

    const bool has_triple = keys.has("t_a_k") || keys.has("l_rf_db") || keys.has("nf_db");
    if (keys.has("t_s_k")) {
        s.system_temp_k = keys.get("t_s_k");
        if (has_triple) {
            loaded.warnings.push_back(
                "both t_s_k and a noise budget triple given; t_s_k wins");
        }
    } else if (has_triple) {
        const double t_a = keys.require("t_a_k");
        const double l_rf_db = keys.require("l_rf_db");
        const double nf_db = keys.require("nf_db");
        const double t_0 = keys.has("t_0_k") ? keys.get("t_0_k") : 290.0;
        s.system_temp_k = budget(t_a, l_rf_db, nf_db, t_0).t_s_k;
    } else {
        throw config_error("scenario: need 't_s_k' or the triple (t_a_k, l_rf_db, nf_db)");
    }

    if (keys.has("ns_eta")) s.ns_eta = keys.get("ns_eta");
    if (keys.has("p_t_w")) s.tx_power_w = keys.get("p_t_w");

    auto validation = s.validate();
    loaded.warnings.insert(loaded.warnings.end(), validation.begin(), validation.end());
    return loaded;
}

LoadedScenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open scenario file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scenario(buffer.str());
    } catch (const config_error& e) {
        throw config_error(path.string() + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw config_error(path.string() + ": " + e.what());
    }
}

std::string canonical_scenario_text(const Scenario& s) {
    std::ostringstream out;
    out << "f0_hz = " << format_double(s.f0_hz) << "\n";
    out << "b_hz = " << format_double(s.bandwidth_hz) << "\n";
    out << "t_dwell_s = " << format_double(s.dwell_s) << "\n";
    out << "g_lin = " << format_double(s.gain) << "\n";
    out << "sigma_m2 = " << format_double(s.rcs_m2) << "\n";
    out << "t_s_k = " << format_double(s.system_temp_k) << "\n";
    out << "loss_lin = " << format_double(s.loss) << "\n";
    out << "snr_min_lin = " << format_double(s.snr_min) << "\n";
    out << "ns_eta = " << format_double(s.ns_eta) << "\n";
    if (s.tx_power_w) out << "p_t_w = " << format_double(*s.tx_power_w) << "\n";
    return out.str();
}

std::string scenario_hash(const Scenario& s) {
    const std::string text = canonical_scenario_text(s);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

struct FieldAccess {
    const char* name;
    double (*get)(const Scenario&);
    void (*set)(Scenario&, double);
};

const FieldAccess kFields[] = {
    {"f0_hz", [](const Scenario& s) { return s.f0_hz; },
     [](Scenario& s, double v) { s.f0_hz = v; }},
    {"b_hz", [](const Scenario& s) { return s.bandwidth_hz; },
     [](Scenario& s, double v) { s.bandwidth_hz = v; }},
    {"t_dwell_s", [](const Scenario& s) { return s.dwell_s; },
     [](Scenario& s, double v) { s.dwell_s = v; }},
    {"g_lin", [](const Scenario& s) { return s.gain; },
     [](Scenario& s, double v) { s.gain = v; }},
    {"sigma_m2", [](const Scenario& s) { return s.rcs_m2; },
     [](Scenario& s, double v) { s.rcs_m2 = v; }},
    {"t_s_k", [](const Scenario& s) { return s.system_temp_k; },
     [](Scenario& s, double v) { s.system_temp_k = v; }},
    {"loss_lin", [](const Scenario& s) { return s.loss; },
     [](Scenario& s, double v) { s.loss = v; }},
    {"snr_min_lin", [](const Scenario& s) { return s.snr_min; },
     [](Scenario& s, double v) { s.snr_min = v; }},
    {"ns_eta", [](const Scenario& s) { return s.ns_eta; },
     [](Scenario& s, double v) { s.ns_eta = v; }},
    {"p_t_w",
     [](const Scenario& s) {
         if (!s.tx_power_w) throw config_error("scenario has no p_t_w set");
         return *s.tx_power_w;
     },
     [](Scenario& s, double v) { s.tx_power_w = v; }},
};

} // namespace

double get_scenario_field(const Scenario& s, std::string_view name) {
    for (const auto& f : kFields) {
        if (name == f.name) return f.get(s);
    }
    throw config_error("not a numeric scenario field: '" + std::string(name) + "'");
}

void set_scenario_field(Scenario& s, std::string_view name, double value) {
    for (const auto& f : kFields) {
        if (name == f.name) {
            f.set(s, value);
            return;
        }
    }
    throw config_error("not a numeric scenario field: '" + std::string(name) + "'");
}

std::vector<std::string> sweepable_scenario_fields() {
    std::vector<std::string> names;
    for (const auto& f : kFields) names.emplace_back(f.name);
    return names;
}

} // namespace qnr
