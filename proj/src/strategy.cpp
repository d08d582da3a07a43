#include "liqlab/strategy.hpp"

#include <cmath>

#include "liqlab/errors.hpp"

namespace liqlab {

namespace {

void require_finite(double v, const char* field) {
    if (!std::isfinite(v)) throw ValidationError(field, "must be finite");
}

}  // namespace

void StrategyProfile::validate() const {
    require_finite(cash_revenues, "profile.cash_revenues");
    require_finite(ca_to_cr, "profile.ca_to_cr");
    require_finite(fixed_assets, "profile.fixed_assets");
    require_finite(ebit_share, "profile.ebit_share");
    require_finite(payables_to_ca, "profile.payables_to_ca");
    require_finite(unleveraged_beta, "profile.unleveraged_beta");
    require_finite(hamada_debt_equity_ratio, "profile.hamada_debt_equity_ratio");
    // Zero revenues are allowed as the degenerate all-fixed case.
    if (cash_revenues < 0.0)
        throw ValidationError("profile.cash_revenues", "must be nonnegative");
    if (ca_to_cr <= 0.0)
        throw ValidationError("profile.ca_to_cr", "must be positive");
    if (ebit_share < 0.0 || ebit_share > 1.0)
        throw ValidationError("profile.ebit_share", "must lie in [0, 1]");
    if (payables_to_ca < 0.0)
        throw ValidationError("profile.payables_to_ca", "must be nonnegative");
    if (fixed_assets < 0.0)
        throw ValidationError("profile.fixed_assets", "must be nonnegative");
    if (unleveraged_beta < 0.0)
        throw ValidationError("profile.unleveraged_beta", "must be nonnegative");
    if (hamada_debt_equity_ratio < 0.0)
        throw ValidationError("profile.hamada_debt_equity_ratio",
                              "must be nonnegative");
}

DerivedStatement build_statement(const StrategyProfile& profile,
                                 const CapitalWeights& weights,
                                 const RoundingPolicy& policy) {
    profile.validate();
    weights.validate();

    const auto line = [&](double v) {
        return policy.statement_lines_to_integers ? round_half_up(v) : v;
    };

    // Each line is derived from the already-rounded lines before it, so the
    // integer mode reproduces printed-table arithmetic.
    DerivedStatement st;
    st.cash_revenues = profile.cash_revenues;
    st.fixed_assets = profile.fixed_assets;
    st.current_assets = line(profile.ca_to_cr * st.cash_revenues);
    st.total_assets = line(st.fixed_assets + st.current_assets);
    st.accounts_payable = line(profile.payables_to_ca * st.current_assets);
    st.capital_invested = line(st.total_assets - st.accounts_payable);
    st.equity = line(weights.equity_share * st.capital_invested);
    st.long_term_debt = line(weights.long_debt_share * st.capital_invested);
    st.short_term_debt = line(weights.short_debt_share * st.capital_invested);
    st.ebit = line(profile.ebit_share * st.cash_revenues);
    st.fcf_initial = -st.capital_invested;
    st.fcf_recurring = st.ebit;
    return st;
}

double leveraged_beta(double unleveraged_beta, double tax_rate,
                      double debt_equity_ratio) {
    return unleveraged_beta * (1.0 + (1.0 - tax_rate) * debt_equity_ratio);
}

double corrected_beta(double leveraged_beta, double sz_premium,
                      const RoundingPolicy& policy) {
    const double beta =
        policy.beta_to_2dp ? round_half_up(leveraged_beta, 2) : leveraged_beta;
    return beta * (1.0 + sz_premium);
}

double cost_of_equity(double beta, const MarketConditions& market) {
    market.validate();
    return beta * market.market_premium() + market.risk_free_rate;
}

namespace {

DebtRate debt_rate(double cost_of_equity, double sz_premium, double spread) {
    DebtRate r;
    r.value = cost_of_equity - spread * (1.0 + sz_premium);
    r.degenerate = r.value < 0.0;
    return r;
}

}  // namespace

DebtRate long_debt_rate(double cost_of_equity, double sz_premium,
                        const MarketConditions& market) {
    return debt_rate(cost_of_equity, sz_premium, market.long_debt_spread);
}

DebtRate short_debt_rate(double cost_of_equity, double sz_premium,
                         const MarketConditions& market) {
    return debt_rate(cost_of_equity, sz_premium, market.short_debt_spread);
}

double cost_of_capital(const DerivedStatement& statement, double k_e,
                       double k_dl, double k_ds, double tax_rate) {
    const double total =
        statement.equity + statement.long_term_debt + statement.short_term_debt;
    if (total <= 0.0)
        throw DomainError("cost of capital undefined: no financing capital");
    const double after_tax = 1.0 - tax_rate;
    return (statement.equity * k_e +
            statement.long_term_debt * k_dl * after_tax +
            statement.short_term_debt * k_ds * after_tax) /
           total;
}

double economic_result(double fcf_initial, double fcf_recurring, double cc) {
    if (cc <= 0.0)
        throw DomainError(
            "economic result undefined: perpetuity needs a positive rate");
    return fcf_initial + fcf_recurring / cc;
}

StrategyOutcome evaluate_strategy(const StrategyProfile& profile,
                                  const MarketConditions& market,
                                  const CapitalWeights& weights,
                                  const SZCurve& curve,
                                  const RoundingPolicy& policy) {
    market.validate();

    StrategyOutcome out;
    out.name = profile.name;
    out.statement = build_statement(profile, weights, policy);
    out.sz_premium = curve.at(profile.ca_to_cr);

    const double raw_beta = leveraged_beta(
        profile.unleveraged_beta, market.tax_rate, profile.hamada_debt_equity_ratio);
    out.leveraged_beta =
        policy.beta_to_2dp ? round_half_up(raw_beta, 2) : raw_beta;
    out.corrected_beta = corrected_beta(raw_beta, out.sz_premium, policy);

    out.cost_of_equity = cost_of_equity(out.corrected_beta, market);
    const DebtRate kdl = long_debt_rate(out.cost_of_equity, out.sz_premium, market);
    const DebtRate kds = short_debt_rate(out.cost_of_equity, out.sz_premium, market);
    out.long_debt_rate = kdl.value;
    out.short_debt_rate = kds.value;
    out.long_rate_degenerate = kdl.degenerate;
    out.short_rate_degenerate = kds.degenerate;

    out.cost_of_capital = cost_of_capital(out.statement, out.cost_of_equity,
                                          kdl.value, kds.value, market.tax_rate);
    out.economic_result = economic_result(
        out.statement.fcf_initial, out.statement.fcf_recurring, out.cost_of_capital);
    return out;
}

ComparisonResult compare_strategies(std::span<const StrategyProfile> profiles,
                                    const MarketConditions& market,
                                    const CapitalWeights& weights,
                                    const SZCurve& curve,
                                    const RoundingPolicy& policy) {
    if (profiles.empty())
        throw ValidationError("profiles", "need at least one strategy profile");

    ComparisonResult result;
    result.outcomes.reserve(profiles.size());
    for (const StrategyProfile& p : profiles)
        result.outcomes.push_back(
            evaluate_strategy(p, market, weights, curve, policy));

    for (std::size_t i = 1; i < result.outcomes.size(); ++i) {
        if (result.outcomes[i].economic_result >
            result.outcomes[result.best_economic_result].economic_result)
            result.best_economic_result = i;
        if (result.outcomes[i].cost_of_capital <
            result.outcomes[result.lowest_cost_of_capital].cost_of_capital)
            result.lowest_cost_of_capital = i;
    }
    return result;
}

}  // namespace liqlab
