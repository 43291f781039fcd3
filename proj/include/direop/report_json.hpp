#pragma once

#include <string>

#include <json.hpp>

#include "direop/verify.hpp"

namespace direop {

using ordered_json = nlohmann::ordered_json;

inline std::string family_name(Family f) {
    switch (f) {
        case Family::radial_oscillator: return "oscillator";
        case Family::trig_scarf: return "scarf";
        case Family::hyp_poschl_teller: return "pt";
    }
    return "?";
}

inline Family family_from_name(const std::string& s) {
    if (s == "oscillator" || s == "osc") return Family::radial_oscillator;
    if (s == "scarf") return Family::trig_scarf;
    if (s == "pt" || s == "poschl-teller") return Family::hyp_poschl_teller;
    throw std::invalid_argument("unknown family '" + s + "' (oscillator|scarf|pt)");
}

inline ordered_json spec_to_json(const PotentialSpec& spec) {
    ordered_json j;
    j["family"] = family_name(spec.family);
    j["m"] = spec.m;
    j["parametric"] = spec.parametric;
    if (spec.family == Family::radial_oscillator) {
        j["omega"] = spec.osc.omega;
        j["ell"] = spec.osc.ell;
    } else {
        j["A"] = spec.shape.A;
        j["B"] = spec.shape.B;
    }
    return j;
}

inline ordered_json settings_to_json(const VerifySettings& s) {
    ordered_json j;
    j["grid_count"] = s.grid_count;
    j["tail_tol"] = s.tail_tol;
    j["seed"] = s.seed;
    j["richardson"] = s.use_richardson;
    j["energy_perturbation"] = s.energy_perturbation;
    return j;
}

inline ordered_json report_to_json(const VerificationReport& rep) {
    ordered_json j;
    j["spec"] = spec_to_json(rep.spec);
    ordered_json levels = ordered_json::array();
    for (const LevelRecord& rec : rep.levels) {
        ordered_json r;
        r["n"] = rec.n;
        r["energy_analytic"] = rec.energy;
        r["energy_conventional"] = rec.energy_conventional;
        r["numeric"] = rec.numeric;
        r["abs_err"] = rec.abs_err;
        if (rec.norm_closed_form)
            r["norm_closed_form"] = *rec.norm_closed_form;
        else
            r["norm_closed_form"] = nullptr;
        if (!rec.norm_reason.empty()) r["norm_absent_reason"] = rec.norm_reason;
        r["norm_numeric"] = rec.norm_numeric;
        levels.push_back(std::move(r));
    }
    j["levels"] = std::move(levels);
    j["offset_c"] = rep.offset_c;
    j["spacing_max_dev"] = rep.spacing_max_dev;
    j["level_max_abs_err"] = rep.level_max_abs_err;
    j["gram_max_dev"] = rep.gram_max_dev;
    j["intertwine_max"] = rep.intertwine_max;
    j["zero_mode_max"] = rep.zero_mode_max;
    j["dirac_residual_max"] = rep.dirac_residual_max;
    ordered_json susy;
    susy["broken"] = rep.susy.broken;
    switch (rep.susy.zero_mode_side) {
        case ZeroModeSide::h1: susy["zero_mode_side"] = "H1"; break;
        case ZeroModeSide::h2: susy["zero_mode_side"] = "H2"; break;
        case ZeroModeSide::none: susy["zero_mode_side"] = "none"; break;
    }
    j["susy"] = std::move(susy);
    ordered_json mism = ordered_json::array();
    for (const NormMismatch& m : rep.norm_mismatches) {
        ordered_json r;
        r["n"] = m.n;
        r["closed_form"] = m.closed_form;
        r["numeric"] = m.numeric;
        mism.push_back(std::move(r));
    }
    j["norm_mismatches"] = std::move(mism);
    j["settings"] = settings_to_json(rep.settings);
    return j;
}

} // namespace direop
