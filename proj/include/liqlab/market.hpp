#pragma once

namespace liqlab {

/// Capital-market environment shared by every strategy under comparison.
/// All rates are annual fractions (0.04 == 4 %).
struct MarketConditions {
    double risk_free_rate = 0.0;
    double market_return = 0.0;
    /// Effective tax rate in [0, 1).
    double tax_rate = 0.0;
    /// Margin between the cost of equity and the long-term debt rate,
    /// before the SZ scaling.
    double long_debt_spread = 0.09;
    /// Same margin for short-term debt.
    double short_debt_spread = 0.12;

    double market_premium() const { return market_return - risk_free_rate; }

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

/// Target capital structure: shares of equity, long-term and short-term
/// debt in invested capital. Shares are nonnegative and sum to 1.
struct CapitalWeights {
    double equity_share = 0.0;
    double long_debt_share = 0.0;
    double short_debt_share = 0.0;

    void validate() const;
};

}  // namespace liqlab
