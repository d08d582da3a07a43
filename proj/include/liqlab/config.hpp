#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "liqlab/market.hpp"
#include "liqlab/rounding.hpp"
#include "liqlab/strategy.hpp"
#include "liqlab/sz_curve.hpp"

namespace liqlab {

/// Everything a scenario run needs, parsed from the sectioned key = value
/// config format:
///
///   [market]
///   risk_free_rate = 0.04        # required
///   market_return  = 0.18        # required
///   tax_rate       = 0.19        # required
///   long_debt_spread  = 0.09     # optional, default 0.09
///   short_debt_spread = 0.12     # optional, default 0.12
///
///   [weights]
///   equity     = 0.4             # all three required, must sum to 1
///   long_debt  = 0.2
///   short_debt = 0.4
///
///   [rounding]                   # optional section, defaults to full precision
///   statement_lines_to_integers = true
///   beta_to_2dp = true
///
///   [sz]
///   variant = SZ1                # or: anchors = 0.3:0.2, 0.45:0.1, 0.6:0.01
///
///   [profile]                    # repeatable, at least one
///   name = restrictive
///   cash_revenues = 2000         # required
///   ca_to_cr = 0.3               # required
///   fixed_assets = 1400          # required
///   ebit_share = 0.5             # required
///   unleveraged_beta = 0.77      # required
///   payables_to_ca = 0.5         # optional, default 0.5
///   hamada_debt_equity_ratio = 0.6666666666666666  # optional, default 0.4/0.6
///
/// '#' starts a comment; blank lines are ignored.
struct ScenarioConfig {
    MarketConditions market;
    CapitalWeights weights;
    RoundingPolicy rounding;
    SZCurve curve = SZCurve::builtin("SZ1");
    std::vector<StrategyProfile> profiles;
};

/// Parses config text. Throws ValidationError (naming section.key) on
/// unknown keys, missing required values or failed invariants.
ScenarioConfig parse_scenario_config(std::string_view text);

/// Reads and parses a config file. Throws LoadError if unreadable.
ScenarioConfig load_scenario_config(const std::filesystem::path& path);

/// Parses an anchor list of the form "0.3:0.2, 0.45:0.1, 0.6:0.01"
/// (comma- or space-separated pairs). Shared by config files and the CLI.
std::vector<SZCurve::Anchor> parse_anchor_list(std::string_view text);

}  // namespace liqlab
