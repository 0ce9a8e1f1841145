#pragma once

#include <string>
#include <string_view>

namespace domcol {

namespace guard_defaults {
inline constexpr int kOracleMaxVertices = 16;
inline constexpr int kListOracleMaxVertices = 10;
inline constexpr int kHittingSetMaxUniverse = 20;
inline constexpr int kExactDomcolMaxVertices = 10;
inline constexpr int kExactCdcolMaxVertices = 16;
inline constexpr int kSieveMaxVariables = 24;
}  // namespace guard_defaults

/// Size limits for the exponential routines. Exceeding one raises GuardExceeded.
///
/// Defaults can be overridden through the DOMCOL_GUARDS environment variable,
/// a comma separated list of key=value pairs, e.g.
/// `DOMCOL_GUARDS="oracle=12,exact_domcol=11"`. Recognised keys: oracle,
/// list_oracle, hitting_set, exact_domcol, exact_cdcol, sieve.
struct Guards {
  int oracle_max_n = guard_defaults::kOracleMaxVertices;
  int list_oracle_max_n = guard_defaults::kListOracleMaxVertices;
  int hitting_set_max_universe = guard_defaults::kHittingSetMaxUniverse;
  int exact_domcol_max_n = guard_defaults::kExactDomcolMaxVertices;
  int exact_cdcol_max_n = guard_defaults::kExactCdcolMaxVertices;
  int sieve_max_vars = guard_defaults::kSieveMaxVariables;

  /// Applies overrides from a DOMCOL_GUARDS style string. Throws UsageError on
  /// unknown keys or non-numeric values.
  void apply_overrides(std::string_view spec);

  /// Defaults plus DOMCOL_GUARDS, read once per process.
  static const Guards& active();
};

/// Throws GuardExceeded with a message naming `what` when value > limit.
void check_guard(const char* what, long value, long limit);

}  // namespace domcol
