#include "tc/presets.hpp"

#include <array>

namespace tc {

namespace {

constexpr std::array<Preset, 7> kPresets{{
    {"fig5", 6, 0.0, std::nullopt, -2.5, 2.5, 0.01,
     "ground energy and excitation number vs coupling, N=6, resonance"},
    {"fig6", 6, 0.2, std::nullopt, 0.0, 2.5, 0.01,
     "matter and field observables vs coupling, N=6, Delta=0.2"},
    {"fig7", 6, 0.2, std::nullopt, 0.0, 2.5, 0.01,
     "matter-distribution fidelity vs coupling, N=6, Delta=0.2"},
    {"fig8", 6, 0.2, -1.5, std::nullopt, std::nullopt, std::nullopt,
     "occupation distributions, N=6, Delta=0.2, gamma=-1.5 (override gamma for the other panels)"},
    {"fig9", 100, 0.0, -2.0, std::nullopt, std::nullopt, std::nullopt,
     "occupation distributions, N=100, resonance, gamma=-2 (override gamma for the other panels)"},
    {"fig10", 6, 0.2, -1.5, std::nullopt, std::nullopt, std::nullopt,
     "trial-state excitation-number distribution, N=6, Delta=0.2, gamma=-1.5"},
    {"fig12", 20, 0.2, 5.0, std::nullopt, std::nullopt, std::nullopt,
     "restricted and renormalized photon distributions, j=10 (N=20), Delta=0.2, gamma=5"},
}};

}  // namespace

std::span<const Preset> all_presets() { return kPresets; }

const Preset* find_preset(std::string_view name) {
    for (const Preset& p : kPresets)
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace tc
