#pragma once

#include <cstddef>
#include <cstdint>

namespace naads {

/// Default cap on points produced by any hull enumeration.
inline constexpr std::size_t kDefaultMaxPoints = 4096;

/// Default bound on |n| for flow evaluation.
inline constexpr std::int64_t kDefaultHorizon = 100000;

/// Applies the process-wide NAADS_BUDGET_POINTS cap (when set and valid)
/// to a requested point budget.
std::size_t effective_point_budget(std::size_t requested);

}  // namespace naads
