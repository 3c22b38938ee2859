#include "naads/budget.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace naads {

std::size_t effective_point_budget(std::size_t requested) {
  const char* env = std::getenv("NAADS_BUDGET_POINTS");
  if (env == nullptr || *env == '\0') return requested;
  try {
    std::size_t used = 0;
    const unsigned long long cap = std::stoull(env, &used);
    if (used != std::string(env).size() || cap == 0) return requested;
    return std::min<std::size_t>(requested, static_cast<std::size_t>(cap));
  } catch (const std::exception&) {
    return requested;
  }
}

}  // namespace naads
