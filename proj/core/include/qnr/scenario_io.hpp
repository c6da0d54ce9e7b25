#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qnr/link_budget.hpp"

namespace qnr {

// Scenario files are flat "key = value" text with explicit unit suffixes
// (_hz, _db, _k, _w, _m2, _s). '#' starts a comment. Quantities that the
// tool wants in linear units may be given either way (g_db or g_lin,
// loss_db or loss_lin, snr_min_db or snr_min_lin); the system noise
// temperature comes either directly (t_s_k) or as a budget triple
// (t_a_k, l_rf_db, nf_db, optional t_0_k). Unknown keys are rejected.
struct LoadedScenario {
    Scenario scenario;
    std::vector<std::string> warnings;
};

LoadedScenario parse_scenario(std::string_view text);
LoadedScenario load_scenario(const std::filesystem::path& path);

// Canonical single-line-per-key rendering used for hashing and metadata.
std::string canonical_scenario_text(const Scenario& s);

// FNV-1a 64 over the canonical text, hex encoded; platform-independent.
std::string scenario_hash(const Scenario& s);

// Numeric scenario field access by key name, for sweeps. Throws config_error
// for names that are not sweepable scenario fields.
double get_scenario_field(const Scenario& s, std::string_view name);
void set_scenario_field(Scenario& s, std::string_view name, double value);
std::vector<std::string> sweepable_scenario_fields();

} // namespace qnr
