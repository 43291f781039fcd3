#pragma once

#include <array>
#include <string>

#include "direop/potentials.hpp"

namespace direop {

/// The five published parameter sets, each with a potential panel (a) and a
/// ground-state panel (b), all at m = 0, 1, 2.
struct FigurePreset {
    const char* id;
    bool wavefunction;  // false: potential panel, true: ground-state panel
    PotentialSpec base; // m is varied per series
};

inline const std::array<FigurePreset, 10>& figure_presets() {
    static const std::array<FigurePreset, 10> presets = {{
        {"1a", false, PotentialSpec::radial_oscillator(2.0, 1.0)},
        {"1b", true, PotentialSpec::radial_oscillator(2.0, 1.0)},
        {"2a", false, PotentialSpec::trig_scarf(3.0, 1.0)},
        {"2b", true, PotentialSpec::trig_scarf(3.0, 1.0)},
        {"3a", false, PotentialSpec::hyp_poschl_teller(1.0, 3.0)},
        {"3b", true, PotentialSpec::hyp_poschl_teller(1.0, 3.0)},
        {"4a", false, PotentialSpec::trig_scarf(1.5, 2.5, 0, true)},
        {"4b", true, PotentialSpec::trig_scarf(1.5, 2.5, 0, true)},
        {"5a", false, PotentialSpec::hyp_poschl_teller(2.5, 1.5, 0, true)},
        {"5b", true, PotentialSpec::hyp_poschl_teller(2.5, 1.5, 0, true)},
    }};
    return presets;
}

inline const FigurePreset* find_figure(const std::string& id) {
    for (const FigurePreset& p : figure_presets())
        if (id == p.id) return &p;
    return nullptr;
}

} // namespace direop
