#pragma once

#include <optional>
#include <string>
#include <vector>

namespace liqlab {

/// One organization-year of financial-statement fields. Any financial field
/// may be absent; absent is not zero.
struct OrgRecord {
    std::string org_id;
    int year = 0;
    std::vector<std::string> sectors;  // sorted, unique; may be empty

    std::optional<double> cash_revenues;
    std::optional<double> total_assets;
    std::optional<double> fixed_assets;
    std::optional<double> current_assets;
    std::optional<double> inventories;
    std::optional<double> accounts_receivable;
    std::optional<double> cash_equivalents;
    std::optional<double> fund_capital;
    std::optional<double> long_term_debt;
    std::optional<double> short_term_debt;
    std::optional<double> accounts_payable;
    std::optional<double> net_result;

    bool in_sector(const std::string& label) const;
};

/// Why an indicator could not be computed.
enum class Absence {
    missing_input,
    zero_denominator,
    // Only emitted by the strict return-on-equity policy.
    non_positive_denominator,
};

/// An indicator value or the reason it is absent.
struct IndicatorValue {
    std::optional<double> value;
    std::optional<Absence> absent_reason;

    bool present() const noexcept { return value.has_value(); }
};

/// What counts as current liabilities in the ratio denominators.
enum class CurrentLiabilities {
    short_debt_plus_payables,  // default
    short_debt_only,
};

struct IndicatorPolicy {
    double day_count = 365.0;
    CurrentLiabilities cl_definition = CurrentLiabilities::short_debt_plus_payables;
    /// When set, return on equity is absent for non-positive fund capital
    /// instead of being computed with a negative denominator.
    bool strict_roe = false;
};

/// Liquidity, cycle and profitability indicators for one record. Every
/// field is present or carries its absence reason; there is no error path.
struct IndicatorSet {
    IndicatorValue current_ratio;       // CA / CL
    IndicatorValue quick_ratio;         // (CA - INV) / CL
    IndicatorValue cash_ratio;          // cash equivalents / CL
    IndicatorValue receivables_period;  // day_count * AR / CR, days
    IndicatorValue payables_period;     // day_count * AP / CR, days
    IndicatorValue inventory_period;    // day_count * INV / CR, days
    IndicatorValue operating_cycle;     // inventory + receivables periods
    IndicatorValue cash_cycle;          // operating cycle - payables period
    IndicatorValue roa;                 // net result / total assets
    IndicatorValue roe;                 // net result / fund capital
};

IndicatorSet compute_indicators(const OrgRecord& record,
                                const IndicatorPolicy& policy = {});

/// Self-check of the two cycle identities. Not applicable when any of the
/// three conversion periods (or a cycle) is absent.
struct CycleCheck {
    bool applicable = false;
    bool operating_ok = false;   // operating == inventory + receivables
    bool cash_ok = false;        // cash == operating - payables
    double operating_residual = 0.0;
    double cash_residual = 0.0;

    bool holds() const noexcept { return applicable && operating_ok && cash_ok; }
};

CycleCheck cycle_identities(const IndicatorSet& set, double tolerance = 1e-9);

}  // namespace liqlab
