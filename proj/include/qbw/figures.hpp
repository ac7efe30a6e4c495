// figures.hpp - fixed parameter sets for the figure datasets

#pragma once

#include <string>
#include <vector>

#include "qbw/sweep.hpp"

namespace qbw {

struct FigurePreset {
    std::string id;
    std::string description;
    SweepSpec spec;
    bool derivatives = false; // append d<col>/d<axis> columns and a kink column
};

const std::vector<FigurePreset>& figure_presets();

// Throws UsageError listing the valid ids.
const FigurePreset& figure_preset(const std::string& id);

SweepTable figure_dataset(const std::string& id, const SweepOptions& opts = {});

} // namespace qbw
