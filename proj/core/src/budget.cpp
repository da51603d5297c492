#include "toric/budget.hpp"

#include <cstdlib>
#include <sstream>

#include "toric/arith.hpp"

namespace toric {

namespace {

std::uint64_t parse_count(const std::string& s) {
  try {
    std::size_t used = 0;
    long double v = std::stold(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw DomainError("TORIC_BUDGET: cannot parse '" + s + "'");
  }
}

}  // namespace

std::uint64_t budget_limit(const std::string& name, std::uint64_t fallback) {
  const char* env = std::getenv("TORIC_BUDGET");
  if (!env || !*env) return fallback;
  std::string setting(env);
  if (setting.find('=') == std::string::npos) return parse_count(setting);
  std::istringstream is(setting);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto eq = item.find('=');
    if (eq != std::string::npos && item.substr(0, eq) == name) return parse_count(item.substr(eq + 1));
  }
  return fallback;
}

void check_budget(const std::string& name, long double needed, std::uint64_t fallback) {
  std::uint64_t limit = budget_limit(name, fallback);
  if (needed > static_cast<long double>(limit)) throw BudgetError(name, needed, static_cast<long double>(limit));
}

}  // namespace toric
