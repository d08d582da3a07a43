#include "liqlab/sz_curve.hpp"

#include <cmath>
#include <utility>

#include "liqlab/errors.hpp"

namespace liqlab {

namespace {

void validate_anchors(const std::vector<SZCurve::Anchor>& anchors) {
    if (anchors.size() < 2)
        throw ValidationError("sz.anchors", "need at least 2 anchors");
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const auto& a = anchors[i];
        if (!std::isfinite(a.ca_cr) || !std::isfinite(a.sz))
            throw ValidationError("sz.anchors", "anchor values must be finite");
        if (a.sz < 0.0)
            throw ValidationError("sz.anchors", "premiums must be nonnegative");
        if (i > 0) {
            if (anchors[i - 1].ca_cr >= a.ca_cr)
                throw ValidationError("sz.anchors",
                                      "CA/CR must be strictly increasing");
            if (anchors[i - 1].sz <= a.sz)
                throw ValidationError(
                    "sz.anchors", "premiums must be strictly decreasing");
        }
    }
}

}  // namespace

SZCurve::SZCurve(std::string name, std::vector<Anchor> anchors)
    : name_(std::move(name)), anchors_(std::move(anchors)) {}

SZCurve SZCurve::builtin(std::string_view name) {
    if (name == "SZ1")
        return SZCurve("SZ1", {{0.3, 0.2}, {0.45, 0.1}, {0.6, 0.01}});
    if (name == "SZ3")
        return SZCurve("SZ3", {{0.3, 2.0}, {0.45, 0.1}, {0.6, 0.001}});
    if (name == "SZ2")
        throw UnsupportedVariantError(
            "SZ2: no anchor values are published for this variant; "
            "supply a custom anchor list instead");
    throw UnsupportedVariantError("unknown SZ curve variant \"" +
                                  std::string(name) +
                                  "\" (supported: SZ1, SZ3)");
}

SZCurve SZCurve::custom(std::vector<Anchor> anchors) {
    validate_anchors(anchors);
    return SZCurve("custom", std::move(anchors));
}

double SZCurve::at(double ca_cr) const {
    if (ca_cr <= anchors_.front().ca_cr) return anchors_.front().sz;
    if (ca_cr >= anchors_.back().ca_cr) return anchors_.back().sz;
    for (std::size_t i = 1; i < anchors_.size(); ++i) {
        const Anchor& lo = anchors_[i - 1];
        const Anchor& hi = anchors_[i];
        if (ca_cr <= hi.ca_cr) {
            // Anchor abscissas return the anchor premium exactly; the
            // interpolated form would perturb it by an ulp.
            if (ca_cr == hi.ca_cr) return hi.sz;
            const double t = (ca_cr - lo.ca_cr) / (hi.ca_cr - lo.ca_cr);
            return lo.sz + t * (hi.sz - lo.sz);
        }
    }
    return anchors_.back().sz;  // unreachable for valid curves
}

}  // namespace liqlab
