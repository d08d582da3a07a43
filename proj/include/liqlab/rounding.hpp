#pragma once

#include <cmath>

namespace liqlab {

/// Controls the printed-intermediate arithmetic used by the worked
/// comparison tables. Default is full precision: no rounding anywhere.
///
/// When `statement_lines_to_integers` is set, every derived balance-sheet
/// line is rounded half-up to a whole currency unit as it is derived, and
/// later lines are computed from the already-rounded ones.
/// When `beta_to_2dp` is set, the leveraged beta is rounded to two decimal
/// places before the SZ correction is applied.
struct RoundingPolicy {
    bool statement_lines_to_integers = false;
    bool beta_to_2dp = false;
};

/// Round half away from zero to an integer value.
inline double round_half_up(double x) { return std::round(x); }

/// Round half away from zero at `digits` decimal places.
inline double round_half_up(double x, int digits) {
    const double scale = std::pow(10.0, digits);
    return std::round(x * scale) / scale;
}

}  // namespace liqlab
