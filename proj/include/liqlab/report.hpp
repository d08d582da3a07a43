#pragma once

#include <string>
#include <vector>

#include "liqlab/dataset.hpp"
#include "liqlab/stats.hpp"
#include "liqlab/strategy.hpp"

namespace liqlab {

enum class OutputFormat { text, csv };

/// Fixed-point formatting with half-up rounding; the single number-to-text
/// path every renderer uses, so output is deterministic byte for byte.
std::string format_fixed(double value, int digits);

/// Renders the strategy comparison: one column per profile, one row per
/// statement line and chain value, plus the best-result / cheapest-capital
/// footer. Percents and currency print at 2 decimals, betas at 6. The
/// renderer only formats StrategyOutcome fields; it recomputes nothing.
std::string render_scenario(const ComparisonResult& result,
                            const std::vector<StrategyProfile>& profiles,
                            OutputFormat format);

enum class GroupBy { none, sector, year };

/// Summary rows for every requested metric inside one group.
struct StatsGroup {
    std::string label;  // "all", a sector label, or a year
    std::vector<std::pair<std::string, SummaryRow>> metrics;
};

struct StatsReport {
    std::vector<StatsGroup> groups;  // ordered by label
    double trim_fraction = 0.05;
    double winsor_fraction = 0.05;
    IndicatorPolicy policy;
};

/// The metrics reported when the caller names none: the six ratio and
/// conversion-period columns of the empirical tables.
const std::vector<std::string>& default_stats_metrics();

/// Groups the dataset, extracts each metric column per group and summarizes
/// it. Group labels are sorted; a record belonging to several sectors
/// contributes to each of them.
StatsReport compute_stats(const Dataset& ds, GroupBy group_by,
                          const std::vector<std::string>& metrics,
                          double trim_fraction, double winsor_fraction,
                          const IndicatorPolicy& policy = {});

/// Renders summary tables (rows: Size, Average, Standard deviation, Median,
/// Truncated mean, Winsorized mean, Skewness, Maximum, Minimum). Absent
/// statistics print as "–" in text and as empty cells in CSV.
std::string render_stats(const StatsReport& report, OutputFormat format);

}  // namespace liqlab
