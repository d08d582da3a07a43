#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liqlab/stats.hpp"
#include "liqlab/sz_curve.hpp"

namespace liqlab {

/// Canvas geometry shared by both plot kinds. Fixed, so identical inputs
/// yield byte-identical SVG.
struct PlotFrame {
    double width = 640.0;
    double height = 400.0;
    double margin_left = 60.0;
    double margin_right = 20.0;
    double margin_top = 20.0;
    double margin_bottom = 40.0;
};

PlotFrame plot_frame();

/// Linear map of a data value onto the vertical pixel axis: `lo` lands on
/// the plot bottom, `hi` on the top. Degenerate ranges map to mid-height.
double value_to_y(double value, double lo, double hi, const PlotFrame& frame);

/// Horizontal counterpart for the SZ curve's CA/CR axis.
double value_to_x(double value, double lo, double hi, const PlotFrame& frame);

/// Draws the premium curve over a labeled CA/CR axis: one line element per
/// anchor-to-anchor segment (class "sz-segment") and one circle marker per
/// anchor (class "sz-anchor").
std::string render_sz_plot(const SZCurve& curve);

/// Draws one box-and-whiskers per named summary on a shared value axis.
/// Whiskers span the full minimum..maximum (no fence rule). Element
/// classes: "box", "median", "whisker", "cap".
std::string render_box_plot(
    const std::vector<std::pair<std::string, FiveNumber>>& boxes);

}  // namespace liqlab
