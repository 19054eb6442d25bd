#pragma once

#include <string>

#include "illiqdep/dependence.hpp"

namespace illiqdep {

/// Dependence plot: one vertical bar per lag and dashed horizontal lines at
/// +-1.96 / scale. Output depends only on the profile and title.
[[nodiscard]] std::string render_dependence_svg(const DependenceProfile& profile,
                                                const std::string& title);

}  // namespace illiqdep
