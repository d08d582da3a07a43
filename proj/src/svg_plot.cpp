#include "liqlab/svg_plot.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "liqlab/errors.hpp"
#include "liqlab/report.hpp"

namespace liqlab {

PlotFrame plot_frame() { return PlotFrame{}; }

double value_to_y(double value, double lo, double hi, const PlotFrame& frame) {
    const double top = frame.margin_top;
    const double bottom = frame.height - frame.margin_bottom;
    if (hi <= lo) return (top + bottom) / 2.0;
    return bottom - (value - lo) / (hi - lo) * (bottom - top);
}

double value_to_x(double value, double lo, double hi, const PlotFrame& frame) {
    const double left = frame.margin_left;
    const double right = frame.width - frame.margin_right;
    if (hi <= lo) return (left + right) / 2.0;
    return left + (value - lo) / (hi - lo) * (right - left);
}

namespace {

std::string coord(double value) { return format_fixed(value, 2); }

std::string xml_escape(const std::string& text) {
    std::string escaped;
    for (const char c : text) {
        switch (c) {
            case '&': escaped += "&amp;"; break;
            case '<': escaped += "&lt;"; break;
            case '>': escaped += "&gt;"; break;
            case '"': escaped += "&quot;"; break;
            default: escaped += c;
        }
    }
    return escaped;
}

std::string svg_open(const PlotFrame& frame) {
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n",
        coord(frame.width), coord(frame.height));
}

std::string line(double x1, double y1, double x2, double y2,
                 const std::string& cls, const std::string& stroke) {
    return fmt::format(
        "  <line class=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" "
        "stroke=\"{}\"/>\n",
        cls, coord(x1), coord(y1), coord(x2), coord(y2), stroke);
}

std::string text(double x, double y, const std::string& anchor,
                 const std::string& content) {
    return fmt::format(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"{}\" font-size=\"12\" "
        "font-family=\"sans-serif\">{}</text>\n",
        coord(x), coord(y), anchor, xml_escape(content));
}

/// Both plots share the same L-shaped axis pair along the frame edges.
std::string axes(const PlotFrame& frame) {
    const double left = frame.margin_left;
    const double right = frame.width - frame.margin_right;
    const double top = frame.margin_top;
    const double bottom = frame.height - frame.margin_bottom;
    std::string out;
    out += line(left, top, left, bottom, "axis", "black");
    out += line(left, bottom, right, bottom, "axis", "black");
    return out;
}

}  // namespace

std::string render_sz_plot(const SZCurve& curve) {
    const PlotFrame frame = plot_frame();
    const auto& anchors = curve.anchors();

    const double x_lo = anchors.front().ca_cr;
    const double x_hi = anchors.back().ca_cr;
    double y_lo = anchors.back().sz;
    double y_hi = anchors.front().sz;
    if (y_lo > 0.0) y_lo = 0.0;  // show the premium against a zero baseline

    std::string out = svg_open(frame);
    out += axes(frame);

    for (std::size_t i = 0; i + 1 < anchors.size(); ++i)
        out += line(value_to_x(anchors[i].ca_cr, x_lo, x_hi, frame),
                    value_to_y(anchors[i].sz, y_lo, y_hi, frame),
                    value_to_x(anchors[i + 1].ca_cr, x_lo, x_hi, frame),
                    value_to_y(anchors[i + 1].sz, y_lo, y_hi, frame),
                    "sz-segment", "steelblue");
    for (const auto& anchor : anchors) {
        const double x = value_to_x(anchor.ca_cr, x_lo, x_hi, frame);
        const double y = value_to_y(anchor.sz, y_lo, y_hi, frame);
        out += fmt::format(
            "  <circle class=\"sz-anchor\" cx=\"{}\" cy=\"{}\" r=\"4\" "
            "fill=\"steelblue\"/>\n",
            coord(x), coord(y));
        out += text(x, frame.height - frame.margin_bottom + 16.0, "middle",
                    fmt::format("{}", anchor.ca_cr));
        out += text(x - 8.0, y - 8.0, "end", fmt::format("{}", anchor.sz));
    }

    out += text((frame.margin_left + frame.width - frame.margin_right) / 2.0,
                frame.height - 8.0, "middle", "CA / CR");
    out += text(16.0, frame.margin_top + 4.0, "start", "SZ");
    out += text(16.0, frame.margin_top + 20.0, "start",
                fmt::format("curve: {}", curve.name()));
    out += "</svg>\n";
    return out;
}

std::string render_box_plot(
    const std::vector<std::pair<std::string, FiveNumber>>& boxes) {
    if (boxes.empty())
        throw ValidationError("plot", "no box summaries to draw");

    const PlotFrame frame = plot_frame();
    double lo = boxes.front().second.minimum;
    double hi = boxes.front().second.maximum;
    for (const auto& [label, five] : boxes) {
        lo = std::min(lo, five.minimum);
        hi = std::max(hi, five.maximum);
    }

    const double left = frame.margin_left;
    const double right = frame.width - frame.margin_right;
    const double slot = (right - left) / static_cast<double>(boxes.size());
    const double box_half = std::min(slot * 0.3, 40.0);
    const double cap_half = box_half * 0.6;

    std::string out = svg_open(frame);
    out += axes(frame);
    out += text(16.0, frame.margin_top + 4.0, "start", fmt::format("{}", hi));
    out += text(16.0, frame.height - frame.margin_bottom, "start",
                fmt::format("{}", lo));

    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto& [label, five] = boxes[i];
        const double cx = left + slot * (static_cast<double>(i) + 0.5);
        const double y_min = value_to_y(five.minimum, lo, hi, frame);
        const double y_q1 = value_to_y(five.q1, lo, hi, frame);
        const double y_med = value_to_y(five.median, lo, hi, frame);
        const double y_q3 = value_to_y(five.q3, lo, hi, frame);
        const double y_max = value_to_y(five.maximum, lo, hi, frame);

        out += line(cx, y_min, cx, y_q1, "whisker", "black");
        out += line(cx, y_q3, cx, y_max, "whisker", "black");
        out += line(cx - cap_half, y_min, cx + cap_half, y_min, "cap", "black");
        out += line(cx - cap_half, y_max, cx + cap_half, y_max, "cap", "black");
        out += fmt::format(
            "  <rect class=\"box\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" "
            "fill=\"lightsteelblue\" stroke=\"black\"/>\n",
            coord(cx - box_half), coord(y_q3), coord(box_half * 2.0),
            coord(y_q1 - y_q3));
        out += line(cx - box_half, y_med, cx + box_half, y_med, "median", "black");
        out += text(cx, frame.height - frame.margin_bottom + 16.0, "middle", label);
    }

    out += "</svg>\n";
    return out;
}

}  // namespace liqlab
