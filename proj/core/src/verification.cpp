#include "qnr/verification.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "qnr/link_budget.hpp"
#include "qnr/noise_temperature.hpp"
#include "qnr/quantities.hpp"

namespace qnr {

bool VerificationReport::all_passed() const {
    for (const auto& check : checks) {
        if (check.status == CheckStatus::fail) return false;
    }
    return true;
}

namespace {

Check make_check(std::string name, double reference, double computed, double tolerance,
                 bool flagged, std::string note = {}) {
    Check c;
    c.name = std::move(name);
    c.reference_value = reference;
    c.computed_value = computed;
    c.relative_error = std::abs(computed - reference) / std::abs(reference);
    c.tolerance = tolerance;
    c.note = std::move(note);
    if (flagged) {
        c.status = CheckStatus::flagged;
    } else {
        c.status = c.relative_error <= tolerance ? CheckStatus::pass : CheckStatus::fail;
    }
    return c;
}

// X-band reference configuration: 9.37 GHz carrier, 1 GHz bandwidth,
// gain 1000, 1 m^2 target, N_s * eta_Q = 1.
Scenario xband_scenario(double system_temp_k) {
    Scenario s;
    s.f0_hz = 9.37e9;
    s.bandwidth_hz = 1e9;
    s.dwell_s = 1.0;
    s.gain = 1000.0;
    s.rcs_m2 = 1.0;
    s.system_temp_k = system_temp_k;
    s.loss = 1.0;
    s.snr_min = 1.0;
    s.ns_eta = 1.0;
    return s;
}

} // namespace

VerificationReport run_verification(OccupancyModel model) {
    VerificationReport report;
    auto& checks = report.checks;

    checks.push_back(make_check(
        "occupancy.n_b_9.37ghz_400k", 889.0,
        mean_occupancy(9.37e9, 400.0, model), 1.0 / 889.0, false));

    checks.push_back(make_check(
        "attenuation.a_r_1km", 5.16e-13,
        free_space_attenuation(1000.0, 0.032, 1.0, 1000.0), 0.005, false));

    const Scenario s400 = xband_scenario(400.0);
    const double dwell_400_h = qr_required_dwell_s(s400, 1000.0, 1.0, model) / 3600.0;
    checks.push_back(make_check("dwell.479h_400k_1km", 479.0, dwell_400_h, 0.01, false));

    const double dwell_10m_ms = qr_required_dwell_s(s400, 10.0, 1.0, model) * 1e3;
    checks.push_back(make_check("dwell.17ms_400k_10m", 17.0, dwell_10m_ms, 0.10, false));

    checks.push_back(make_check(
        "photons.n_t_100mw_10ghz_1s", 1.51e22,
        photons_transmitted(0.1, 1e10, 1.0), 0.005, false));

    checks.push_back(make_check(
        "bandwidth.equality_100mw_10ghz", 1.51e22,
        equality_bandwidth_hz(0.1, 1e10), 0.005, false));

    const NoiseTemperatureBudget nf2 = budget(30.0, 0.5, 2.0);
    checks.push_back(make_check("noise_temp.t_rf_0.5db", 35.0, nf2.t_rf_k, 0.02, false));
    checks.push_back(make_check("noise_temp.t_lna_nf2db", 190.0, nf2.t_lna_k, 0.01, false));
    checks.push_back(make_check("noise_temp.t_s_255k", 255.0, nf2.t_s_k, 0.005, false));

    // Documented inconsistencies in the reference values: reported, never
    // failing.
    const Scenario s290 = xband_scenario(290.0);
    checks.push_back(make_check(
        "dwell.367h_290k_1km", 367.0,
        qr_required_dwell_s(s290, 1000.0, 1.0, model) / 3600.0, 0.01, true,
        "reference rescaling disagrees with its own formula (which gives ~347 h)"));

    const Scenario s255 = xband_scenario(255.0);
    checks.push_back(make_check(
        "dwell.323h_255k_1km", 323.0,
        qr_required_dwell_s(s255, 1000.0, 1.0, model) / 3600.0, 0.01, true,
        "reference rescaling disagrees with its own formula (which gives ~305 h)"));

    const NoiseTemperatureBudget nf1 = budget(30.0, 0.5, 1.0);
    checks.push_back(make_check(
        "noise_temp.t_lna_nf1db", 190.0, nf1.t_lna_k, 0.01, true,
        "the quoted 190 K corresponds to NF ~2.0 dB, not the stated 1 dB"));

    checks.push_back(make_check(
        "occupancy.n_b_visible_3000k", 3e-4,
        mean_occupancy(5.4e14, 3000.0, OccupancyModel::bose_einstein), 0.01, true,
        "reference is an order-of-magnitude statement; exact evaluation gives 1.77e-4"));

    return report;
}

void print_report(const VerificationReport& report, std::ostream& out) {
    out << std::left << std::setw(34) << "check" << std::right << std::setw(14)
        << "reference" << std::setw(14) << "computed" << std::setw(11) << "rel_err"
        << std::setw(10) << "tol"
        << "  status\n";
    int passed = 0, failed = 0, flagged = 0;
    for (const auto& c : report.checks) {
        const char* status = "PASS";
        if (c.status == CheckStatus::fail) {
            status = "FAIL";
            ++failed;
        } else if (c.status == CheckStatus::flagged) {
            status = "FLAGGED";
            ++flagged;
        } else {
            ++passed;
        }
        out << std::left << std::setw(34) << c.name << std::right << std::setw(14)
            << std::setprecision(5) << std::scientific << c.reference_value
            << std::setw(14) << c.computed_value << std::setw(11)
            << std::setprecision(1) << c.relative_error << std::setw(10) << c.tolerance
            << "  " << status << "\n";
        if (!c.note.empty()) out << "    note: " << c.note << "\n";
    }
    out.unsetf(std::ios::scientific);
    out << passed << " passed, " << failed << " failed, " << flagged << " flagged\n";
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    auto jchecks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["reference_value"] = c.reference_value;
        jc["computed_value"] = c.computed_value;
        jc["relative_error"] = c.relative_error;
        jc["tolerance"] = c.tolerance;
        jc["status"] = c.status == CheckStatus::pass
                           ? "pass"
                           : (c.status == CheckStatus::fail ? "fail" : "flagged");
        if (!c.note.empty()) jc["note"] = c.note;
        jchecks.push_back(std::move(jc));
    }
    j["checks"] = std::move(jchecks);
    j["all_passed"] = report.all_passed();
    return j.dump(2) + "\n";
}

} // namespace qnr
