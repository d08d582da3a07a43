#include "liqlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "liqlab/errors.hpp"

namespace liqlab {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_)
        if (!std::isfinite(v))
            throw ValidationError("sample", "values must be finite");
    std::sort(values_.begin(), values_.end());
}

namespace {

void require_size(const Sample& s, std::size_t n, const char* what) {
    if (s.size() < n)
        throw InsufficientDataError(std::string(what) + " needs at least " +
                                    std::to_string(n) + " values, got " +
                                    std::to_string(s.size()));
}

double mean_of_range(const std::vector<double>& v, std::size_t first,
                     std::size_t last) {
    double sum = 0.0;
    for (std::size_t i = first; i < last; ++i) sum += v[i];
    return sum / static_cast<double>(last - first);
}

}  // namespace

double mean(const Sample& s) {
    require_size(s, 1, "mean");
    return mean_of_range(s.sorted(), 0, s.size());
}

double sample_sd(const Sample& s) {
    require_size(s, 2, "standard deviation");
    const double m = mean(s);
    double ss = 0.0;
    for (double v : s.sorted()) {
        const double d = v - m;
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(s.size() - 1));
}

double quantile(const Sample& s, double p) {
    require_size(s, 1, "quantile");
    if (p < 0.0 || p > 1.0)
        throw ValidationError("p", "quantile level must lie in [0, 1]");
    const auto& v = s.sorted();
    const double h = static_cast<double>(s.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= s.size()) return v.back();
    const double w = h - static_cast<double>(lo);
    return v[lo] + w * (v[lo + 1] - v[lo]);
}

double trimmed_mean(const Sample& s, double trim_fraction) {
    require_size(s, 1, "trimmed mean");
    if (trim_fraction < 0.0 || trim_fraction >= 0.5)
        throw ValidationError("trim_fraction", "must lie in [0, 0.5)");
    const auto k = static_cast<std::size_t>(
        std::floor(trim_fraction * static_cast<double>(s.size())));
    // k < n/2, so at least one value survives.
    return mean_of_range(s.sorted(), k, s.size() - k);
}

double winsorized_mean(const Sample& s, double winsor_fraction) {
    require_size(s, 1, "winsorized mean");
    if (winsor_fraction < 0.0 || winsor_fraction >= 0.5)
        throw ValidationError("winsor_fraction", "must lie in [0, 0.5)");
    const auto& v = s.sorted();
    const auto n = s.size();
    const auto k = static_cast<std::size_t>(
        std::floor(winsor_fraction * static_cast<double>(n)));
    double sum = static_cast<double>(k) * v[k];  // k smallest -> (k+1)-th smallest
    for (std::size_t i = k; i < n - k; ++i) sum += v[i];
    sum += static_cast<double>(k) * v[n - 1 - k];  // k largest, symmetric
    return sum / static_cast<double>(n);
}

double skewness(const Sample& s) {
    require_size(s, 3, "skewness");
    const double m = mean(s);
    double m2 = 0.0;
    double m3 = 0.0;
    for (double v : s.sorted()) {
        const double d = v - m;
        m2 += d * d;
        m3 += d * d * d;
    }
    const auto n = static_cast<double>(s.size());
    m2 /= n;
    m3 /= n;
    if (m2 <= 0.0)
        throw DomainError("skewness undefined: sample has zero variance");
    return m3 / std::pow(m2, 1.5);
}

FiveNumber five_number(const Sample& s) {
    require_size(s, 1, "five-number summary");
    FiveNumber f;
    f.minimum = s.sorted().front();
    f.q1 = quantile(s, 0.25);
    f.median = quantile(s, 0.5);
    f.q3 = quantile(s, 0.75);
    f.maximum = s.sorted().back();
    return f;
}

SummaryRow summarize(const Sample& s, double trim_fraction,
                     double winsor_fraction) {
    SummaryRow row;
    row.size = s.size();
    row.trim_fraction = trim_fraction;
    row.winsor_fraction = winsor_fraction;
    if (s.empty()) return row;

    row.average = mean(s);
    row.median = quantile(s, 0.5);
    row.truncated_mean = trimmed_mean(s, trim_fraction);
    row.winsorized_mean = winsorized_mean(s, winsor_fraction);
    row.minimum = s.sorted().front();
    row.maximum = s.sorted().back();
    if (s.size() >= 2) row.sd = sample_sd(s);
    if (s.size() >= 3) {
        // Absent rather than an error for flat samples, mirroring how the
        // summary tables leave unsupported cells blank.
        const double sd = row.sd.value_or(0.0);
        if (sd > 0.0) row.skewness = skewness(s);
    }
    return row;
}

}  // namespace liqlab
