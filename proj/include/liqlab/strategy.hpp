#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "liqlab/market.hpp"
#include "liqlab/rounding.hpp"
#include "liqlab/sz_curve.hpp"

namespace liqlab {

/// Drivers of one liquidity-investment strategy. Currency amounts share an
/// arbitrary unit; rates and shares are fractions.
struct StrategyProfile {
    std::string name;               // restrictive | moderate | flexible | custom label
    double cash_revenues = 0.0;     // CR
    double ca_to_cr = 0.0;          // target current assets as a fraction of CR
    double fixed_assets = 0.0;      // FA
    double ebit_share = 0.0;        // EBIT as a fraction of CR
    double payables_to_ca = 0.5;    // accounts payable as a fraction of CA
    double unleveraged_beta = 0.0;  // asset beta of the sector
    /// Debt-to-equity ratio plugged into the beta releveraging step.
    /// Deliberately independent of the capital weights: the two are exposed
    /// as separate inputs because they need not be mutually consistent.
    double hamada_debt_equity_ratio = 0.4 / 0.6;

    void validate() const;
};

/// Balance-sheet and flow lines implied by a profile.
struct DerivedStatement {
    double cash_revenues = 0.0;
    double fixed_assets = 0.0;
    double current_assets = 0.0;   // CA = ca_to_cr * CR
    double total_assets = 0.0;     // TA = FA + CA
    double accounts_payable = 0.0; // AP = payables_to_ca * CA
    double capital_invested = 0.0; // TA - AP
    double equity = 0.0;           // weights applied to invested capital
    double long_term_debt = 0.0;
    double short_term_debt = 0.0;
    double ebit = 0.0;             // ebit_share * CR
    double fcf_initial = 0.0;      // -capital_invested
    double fcf_recurring = 0.0;    // == ebit (tax-exempt operations)
};

/// A debt cost rate plus a degeneracy flag. The rate formula can produce a
/// negative value for implausible spread/premium combinations; the value is
/// passed through unclamped and flagged.
struct DebtRate {
    double value = 0.0;
    bool degenerate = false;
};

/// Full evaluation of one strategy: every intermediate of the
/// beta -> rates -> cost-of-capital -> economic-result chain.
struct StrategyOutcome {
    std::string name;
    DerivedStatement statement;
    double sz_premium = 0.0;
    double leveraged_beta = 0.0;   // after the rounding policy, before SZ
    double corrected_beta = 0.0;   // leveraged_beta * (1 + SZ)
    double cost_of_equity = 0.0;
    double long_debt_rate = 0.0;
    double short_debt_rate = 0.0;
    bool long_rate_degenerate = false;
    bool short_rate_degenerate = false;
    double cost_of_capital = 0.0;
    double economic_result = 0.0;
};

/// Derives the implied financial statement for a profile.
///
/// With statement rounding enabled each line is rounded half-up to an
/// integer as it is derived, and subsequent lines build on the rounded
/// values; this reproduces printed-table arithmetic exactly.
DerivedStatement build_statement(const StrategyProfile& profile,
                                 const CapitalWeights& weights,
                                 const RoundingPolicy& policy = {});

/// Releverages an asset beta: beta_u * (1 + (1 - T) * D/E).
double leveraged_beta(double unleveraged_beta, double tax_rate,
                      double debt_equity_ratio);

/// Applies the SZ premium: beta_l * (1 + SZ). When the policy rounds the
/// leveraged beta to two decimals, rounding precedes the multiplication.
double corrected_beta(double leveraged_beta, double sz_premium,
                      const RoundingPolicy& policy = {});

/// CAPM cost of equity: beta * (k_m - k_RF) + k_RF.
double cost_of_equity(double beta, const MarketConditions& market);

/// Long-term debt rate: k_e - long_debt_spread * (1 + SZ).
/// A negative result is flagged degenerate, not clamped.
DebtRate long_debt_rate(double cost_of_equity, double sz_premium,
                        const MarketConditions& market);

/// Short-term debt rate: k_e - short_debt_spread * (1 + SZ).
DebtRate short_debt_rate(double cost_of_equity, double sz_premium,
                         const MarketConditions& market);

/// Weighted average cost of capital over the statement's financing lines,
/// debt legs after tax. Weights come from the (possibly rounded) statement.
/// Throws DomainError when the statement carries no financing capital.
double cost_of_capital(const DerivedStatement& statement, double k_e,
                       double k_dl, double k_ds, double tax_rate);

/// Initial flow plus the perpetuity of the recurring flow at rate cc.
/// Throws DomainError for cc <= 0.
double economic_result(double fcf_initial, double fcf_recurring, double cc);

/// Runs the whole chain for one profile. The SZ premium is looked up on the
/// curve at the profile's CA/CR.
StrategyOutcome evaluate_strategy(const StrategyProfile& profile,
                                  const MarketConditions& market,
                                  const CapitalWeights& weights,
                                  const SZCurve& curve,
                                  const RoundingPolicy& policy = {});

/// Batch evaluation preserving input order, with the best-result and
/// cheapest-capital strategies identified (first index wins ties).
struct ComparisonResult {
    std::vector<StrategyOutcome> outcomes;
    std::size_t best_economic_result = 0;   // argmax economic_result
    std::size_t lowest_cost_of_capital = 0; // argmin cost_of_capital

    const std::string& best_economic_result_label() const {
        return outcomes[best_economic_result].name;
    }
    const std::string& lowest_cost_of_capital_label() const {
        return outcomes[lowest_cost_of_capital].name;
    }
};

ComparisonResult compare_strategies(std::span<const StrategyProfile> profiles,
                                    const MarketConditions& market,
                                    const CapitalWeights& weights,
                                    const SZCurve& curve,
                                    const RoundingPolicy& policy = {});

}  // namespace liqlab
