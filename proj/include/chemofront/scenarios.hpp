#pragma once

#include <array>
#include <vector>

#include "chemofront/field.hpp"
#include "chemofront/params.hpp"

namespace chemofront {

/// Colony centers used by the analysis stage; they come from the scenario
/// definition, not from detection.
std::vector<std::array<double, 2>> colony_centers(ScenarioKind s);

/// Centered Gaussian colony of v, localized u colony at a corner, c = 0.
StateSnapshot initial_condition_T1(int grid_n);

/// Same fields as T1; the scenario differs only in its Dv default.
StateSnapshot initial_condition_T2(int grid_n);

/// Two v colonies on the horizontal midline, uniform u just above threshold,
/// c = 0.
StateSnapshot initial_condition_T3(int grid_n);

StateSnapshot build_initial_condition(ScenarioKind s, int grid_n);

}  // namespace chemofront
