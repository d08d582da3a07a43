#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace liqlab {

/// An immutable sample of finite reals, held in sorted order.
///
/// Sorting at construction gives every downstream statistic a canonical
/// summation order, so results do not depend on how callers collected the
/// values.
class Sample {
public:
    Sample() = default;

    /// Sorts and stores the values. Throws ValidationError if any value is
    /// not finite.
    explicit Sample(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// Values in ascending order.
    const std::vector<double>& sorted() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

/// Boxplot summary: minimum, lower quartile, median, upper quartile, maximum.
struct FiveNumber {
    double minimum = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double maximum = 0.0;
};

/// One column of a descriptive-statistics table. A statistic the sample is
/// too small to support is absent, which is distinct from zero.
struct SummaryRow {
    std::size_t size = 0;
    std::optional<double> average;
    std::optional<double> sd;
    std::optional<double> median;
    std::optional<double> truncated_mean;
    std::optional<double> winsorized_mean;
    std::optional<double> skewness;
    std::optional<double> maximum;
    std::optional<double> minimum;
    // The fractions the robust means were computed with; carried so every
    // rendering states them.
    double trim_fraction = 0.0;
    double winsor_fraction = 0.0;
};

/// Arithmetic mean. Requires size >= 1.
double mean(const Sample& s);

/// Sample standard deviation (n - 1 denominator). Requires size >= 2.
double sample_sd(const Sample& s);

/// Quantile by linear interpolation at rank h = (n - 1) * p between
/// adjacent order statistics. Requires size >= 1 and p in [0, 1].
double quantile(const Sample& s, double p);

/// Mean after dropping floor(trim_fraction * n) values from each end of the
/// sorted sample. trim_fraction in [0, 0.5). Requires size >= 1.
double trimmed_mean(const Sample& s, double trim_fraction);

/// Mean after replacing the k = floor(winsor_fraction * n) smallest values
/// with the (k+1)-th smallest and the k largest with the (k+1)-th largest.
/// winsor_fraction in [0, 0.5). Requires size >= 1.
double winsorized_mean(const Sample& s, double winsor_fraction);

/// Moment-ratio skewness g1 = m3 / m2^(3/2), central moments with
/// denominator n. Requires size >= 3 and positive variance.
double skewness(const Sample& s);

/// Min, quartiles and max via the quantile operation. Requires size >= 1.
FiveNumber five_number(const Sample& s);

/// All SummaryRow statistics at once. Fields whose preconditions the sample
/// cannot meet are left absent; an empty sample yields size 0 and nothing
/// else.
SummaryRow summarize(const Sample& s, double trim_fraction = 0.05,
                     double winsor_fraction = 0.05);

}  // namespace liqlab
