#include "domcol/guards.hpp"

#include <charconv>
#include <cstdlib>

#include "domcol/errors.hpp"

namespace domcol {

void Guards::apply_overrides(std::string_view spec) {
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;

    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("guard override without '=': " + std::string(item));
    }
    std::string_view key = item.substr(0, eq);
    std::string_view val = item.substr(eq + 1);
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), parsed);
    if (ec != std::errc{} || ptr != val.data() + val.size() || parsed < 0) {
      throw UsageError("bad guard value for " + std::string(key));
    }

    if (key == "oracle") {
      oracle_max_n = parsed;
    } else if (key == "list_oracle") {
      list_oracle_max_n = parsed;
    } else if (key == "hitting_set") {
      hitting_set_max_universe = parsed;
    } else if (key == "exact_domcol") {
      exact_domcol_max_n = parsed;
    } else if (key == "exact_cdcol") {
      exact_cdcol_max_n = parsed;
    } else if (key == "sieve") {
      sieve_max_vars = parsed;
    } else {
      throw UsageError("unknown guard key: " + std::string(key));
    }
  }
}

const Guards& Guards::active() {
  static const Guards guards = [] {
    Guards g;
    if (const char* env = std::getenv("DOMCOL_GUARDS")) g.apply_overrides(env);
    return g;
  }();
  return guards;
}

void check_guard(const char* what, long value, long limit) {
  if (value > limit) {
    throw GuardExceeded(std::string(what) + " = " + std::to_string(value) +
                        " exceeds guard " + std::to_string(limit));
  }
}

}  // namespace domcol
