#include "liqlab/indicators.hpp"

#include <algorithm>
#include <cmath>

namespace liqlab {

bool OrgRecord::in_sector(const std::string& label) const {
    return std::find(sectors.begin(), sectors.end(), label) != sectors.end();
}

namespace {

IndicatorValue absent(Absence why) { return {std::nullopt, why}; }
IndicatorValue present(double v) { return {v, std::nullopt}; }

/// numerator / denominator with the absence rules: missing input first,
/// then zero denominator.
IndicatorValue ratio(const std::optional<double>& numerator,
                     const std::optional<double>& denominator,
                     double scale = 1.0) {
    if (!numerator || !denominator) return absent(Absence::missing_input);
    if (*denominator == 0.0) return absent(Absence::zero_denominator);
    return present(scale * *numerator / *denominator);
}

std::optional<double> current_liabilities(const OrgRecord& r,
                                          CurrentLiabilities definition) {
    if (definition == CurrentLiabilities::short_debt_only)
        return r.short_term_debt;
    if (!r.short_term_debt || !r.accounts_payable) return std::nullopt;
    return *r.short_term_debt + *r.accounts_payable;
}

IndicatorValue combine(const IndicatorValue& a, const IndicatorValue& b,
                       double sign_b) {
    if (!a.present() || !b.present()) return absent(Absence::missing_input);
    return present(*a.value + sign_b * *b.value);
}

}  // namespace

IndicatorSet compute_indicators(const OrgRecord& r,
                                const IndicatorPolicy& policy) {
    IndicatorSet set;
    const std::optional<double> cl = current_liabilities(r, policy.cl_definition);

    set.current_ratio = ratio(r.current_assets, cl);
    if (r.current_assets && r.inventories)
        set.quick_ratio = ratio(*r.current_assets - *r.inventories, cl);
    else
        set.quick_ratio = absent(Absence::missing_input);
    set.cash_ratio = ratio(r.cash_equivalents, cl);

    set.receivables_period =
        ratio(r.accounts_receivable, r.cash_revenues, policy.day_count);
    set.payables_period =
        ratio(r.accounts_payable, r.cash_revenues, policy.day_count);
    set.inventory_period =
        ratio(r.inventories, r.cash_revenues, policy.day_count);

    set.operating_cycle =
        combine(set.inventory_period, set.receivables_period, +1.0);
    set.cash_cycle = combine(set.operating_cycle, set.payables_period, -1.0);

    set.roa = ratio(r.net_result, r.total_assets);
    if (policy.strict_roe && r.fund_capital && *r.fund_capital <= 0.0)
        set.roe = absent(Absence::non_positive_denominator);
    else
        set.roe = ratio(r.net_result, r.fund_capital);
    return set;
}

CycleCheck cycle_identities(const IndicatorSet& set, double tolerance) {
    CycleCheck check;
    if (!set.inventory_period.present() || !set.receivables_period.present() ||
        !set.payables_period.present() || !set.operating_cycle.present() ||
        !set.cash_cycle.present())
        return check;

    check.applicable = true;
    check.operating_residual =
        *set.operating_cycle.value -
        (*set.inventory_period.value + *set.receivables_period.value);
    check.cash_residual =
        *set.cash_cycle.value -
        (*set.operating_cycle.value - *set.payables_period.value);
    check.operating_ok = std::abs(check.operating_residual) <= tolerance;
    check.cash_ok = std::abs(check.cash_residual) <= tolerance;
    return check;
}

}  // namespace liqlab
