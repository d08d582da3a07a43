#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace liqlab {

/// Strategy-dependent risk-premium correction as a function of the
/// current-assets-to-cash-revenues ratio (CA/CR).
///
/// The curve is an ordered set of anchors with strictly increasing CA/CR
/// and strictly decreasing premium; between anchors it interpolates
/// linearly, outside them it clamps to the end anchors. Immutable after
/// construction.
class SZCurve {
public:
    struct Anchor {
        double ca_cr;  // abscissa: CA/CR ratio
        double sz;     // premium at that ratio, >= 0
    };

    /// Builds one of the named builtin variants.
    /// Supported: "SZ1", "SZ3". "SZ2" has no published anchor values and
    /// raises UnsupportedVariantError, as does any unknown name.
    static SZCurve builtin(std::string_view name);

    /// Builds a curve from user-supplied anchors. Throws ValidationError
    /// if the anchor set is malformed.
    static SZCurve custom(std::vector<Anchor> anchors);

    /// Premium at the given CA/CR. Inputs outside the anchored range are
    /// clamped to the nearest end anchor.
    double at(double ca_cr) const;

    const std::string& name() const noexcept { return name_; }
    const std::vector<Anchor>& anchors() const noexcept { return anchors_; }

private:
    SZCurve(std::string name, std::vector<Anchor> anchors);

    std::string name_;
    std::vector<Anchor> anchors_;
};

}  // namespace liqlab
