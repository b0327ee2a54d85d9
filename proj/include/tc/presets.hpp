#ifndef TC_PRESETS_HPP
#define TC_PRESETS_HPP

#include <optional>
#include <span>
#include <string_view>

namespace tc {

/// Named parameter set. Figure-style presets pin the parameter combinations
/// used by the regression and acceptance suites; explicit flags override
/// individual fields.
struct Preset {
    std::string_view name;
    int n_atoms;
    double delta;
    std::optional<double> gamma;       // single-point presets
    std::optional<double> range_lo;    // sweep presets
    std::optional<double> range_hi;
    std::optional<double> range_step;
    std::string_view note;
};

std::span<const Preset> all_presets();
const Preset* find_preset(std::string_view name);

}  // namespace tc

#endif
