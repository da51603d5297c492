#pragma once

#include <cstdint>
#include <string>

namespace toric {

// Enumeration limit for the named budget. TORIC_BUDGET overrides defaults, either
// globally ("5000000") or per name ("toric_points=1e8,min_distance=1e9").
std::uint64_t budget_limit(const std::string& name, std::uint64_t fallback);

// Throws BudgetError when needed exceeds the limit.
void check_budget(const std::string& name, long double needed, std::uint64_t fallback);

}  // namespace toric
