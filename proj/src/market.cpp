#include "liqlab/market.hpp"

#include <cmath>

#include "liqlab/errors.hpp"

namespace liqlab {

namespace {

void require_finite(double v, const char* field) {
    if (!std::isfinite(v)) throw ValidationError(field, "must be finite");
}

}  // namespace

void MarketConditions::validate() const {
    require_finite(risk_free_rate, "market.risk_free_rate");
    require_finite(market_return, "market.market_return");
    require_finite(tax_rate, "market.tax_rate");
    require_finite(long_debt_spread, "market.long_debt_spread");
    require_finite(short_debt_spread, "market.short_debt_spread");
    if (market_return <= risk_free_rate)
        throw ValidationError("market.market_return",
                              "must exceed the risk-free rate");
    if (long_debt_spread <= 0.0)
        throw ValidationError("market.long_debt_spread", "must be positive");
    if (short_debt_spread <= 0.0)
        throw ValidationError("market.short_debt_spread", "must be positive");
    if (tax_rate < 0.0 || tax_rate >= 1.0)
        throw ValidationError("market.tax_rate", "must lie in [0, 1)");
}

void CapitalWeights::validate() const {
    require_finite(equity_share, "weights.equity");
    require_finite(long_debt_share, "weights.long_debt");
    require_finite(short_debt_share, "weights.short_debt");
    if (equity_share < 0.0)
        throw ValidationError("weights.equity", "must be nonnegative");
    if (long_debt_share < 0.0)
        throw ValidationError("weights.long_debt", "must be nonnegative");
    if (short_debt_share < 0.0)
        throw ValidationError("weights.short_debt", "must be nonnegative");
    const double sum = equity_share + long_debt_share + short_debt_share;
    if (std::abs(sum - 1.0) > 1e-12)
        throw ValidationError("weights", "shares must sum to 1");
}

}  // namespace liqlab
