#include <fmt/format.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "liqlab/config.hpp"
#include "liqlab/dataset.hpp"
#include "liqlab/errors.hpp"
#include "liqlab/report.hpp"
#include "liqlab/strategy.hpp"
#include "liqlab/svg_plot.hpp"

namespace {

using namespace liqlab;

OutputFormat parse_format(const std::string& name) {
    return name == "csv" ? OutputFormat::csv : OutputFormat::text;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    for (const char c : text) {
        if (c == ',') {
            if (!item.empty()) items.push_back(item);
            item.clear();
        } else if (c != ' ') {
            item += c;
        }
    }
    if (!item.empty()) items.push_back(item);
    return items;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw LoadError(fmt::format("cannot open \"{}\" for writing", path.string()));
    out << content;
    out.flush();
    if (!out)
        throw LoadError(fmt::format("failed writing \"{}\"", path.string()));
}

void run_scenario(const std::string& config_path, const std::string& format) {
    const ScenarioConfig config = load_scenario_config(config_path);
    const ComparisonResult result =
        compare_strategies(config.profiles, config.market, config.weights,
                           config.curve, config.rounding);
    fmt::print("{}", render_scenario(result, config.profiles, parse_format(format)));
}

void run_stats(const std::string& input_path, const std::string& group_by,
               const std::string& metrics_arg, double trim, double winsor,
               const std::string& format) {
    const Dataset ds = load_csv(input_path);
    GroupBy grouping = GroupBy::none;
    if (group_by == "sector") grouping = GroupBy::sector;
    if (group_by == "year") grouping = GroupBy::year;
    const StatsReport report =
        compute_stats(ds, grouping, split_list(metrics_arg), trim, winsor);
    fmt::print("{}", render_stats(report, parse_format(format)));
}

void run_plot_sz(const std::string& variant, const std::string& anchors,
                 const std::string& out_path) {
    if (variant.empty() == anchors.empty())
        throw ValidationError("plot", "give exactly one of --variant and --anchors");
    const SZCurve curve = variant.empty()
                              ? SZCurve::custom(parse_anchor_list(anchors))
                              : SZCurve::builtin(variant);
    write_file(out_path, render_sz_plot(curve));
}

void run_plot_box(const std::string& input_path, const std::string& metrics_arg,
                  const std::string& out_path) {
    const Dataset ds = load_csv(input_path);
    std::vector<std::pair<std::string, FiveNumber>> boxes;
    for (const auto& metric : split_list(metrics_arg)) {
        const Sample values = column(ds, metric);
        if (values.empty())
            throw ValidationError(metric, "no present values to draw");
        boxes.emplace_back(metric, five_number(values));
    }
    if (boxes.empty()) throw ValidationError("plot", "no metric given");
    write_file(out_path, render_box_plot(boxes));
}

int run(int argc, char** argv) {
    CLI::App app{"Liquidity strategy evaluation and dataset statistics"};
    app.require_subcommand(1);

    auto* scenario =
        app.add_subcommand("scenario", "Compare strategy profiles from a config file");
    std::string config_path;
    std::string scenario_format = "text";
    scenario->add_option("--config", config_path, "scenario config file")->required();
    scenario->add_option("--format", scenario_format, "output format")
        ->check(CLI::IsMember({"text", "csv"}));
    scenario->callback([&] { run_scenario(config_path, scenario_format); });

    auto* stats =
        app.add_subcommand("stats", "Summarize indicator columns of a dataset");
    std::string stats_input;
    std::string group_by = "none";
    std::string metrics_arg;
    double trim = 0.05;
    double winsor = 0.05;
    std::string stats_format = "text";
    stats->add_option("--input", stats_input, "dataset CSV file")->required();
    stats->add_option("--group-by", group_by, "grouping column")
        ->check(CLI::IsMember({"sector", "year", "none"}));
    stats->add_option("--metrics", metrics_arg,
                      "comma-separated metric names (default: the six "
                      "ratio and conversion-period columns)");
    stats->add_option("--trim", trim, "trimmed-mean fraction per tail");
    stats->add_option("--winsor", winsor, "winsorized-mean fraction per tail");
    stats->add_option("--format", stats_format, "output format")
        ->check(CLI::IsMember({"text", "csv"}));
    stats->callback([&] {
        run_stats(stats_input, group_by, metrics_arg, trim, winsor, stats_format);
    });

    auto* plot = app.add_subcommand("plot", "Render an SVG chart");
    plot->require_subcommand(1);

    auto* plot_sz = plot->add_subcommand("sz", "Premium curve over CA/CR");
    std::string variant;
    std::string anchors;
    std::string sz_out;
    plot_sz->add_option("--variant", variant, "builtin curve name");
    plot_sz->add_option("--anchors", anchors, "custom anchor list ca_cr:sz,...");
    plot_sz->add_option("-o,--output", sz_out, "output SVG path")->required();
    plot_sz->callback([&] { run_plot_sz(variant, anchors, sz_out); });

    auto* plot_box = plot->add_subcommand("box", "Box-and-whiskers per metric");
    std::string box_input;
    std::string box_metric;
    std::string box_out;
    plot_box->add_option("--input", box_input, "dataset CSV file")->required();
    plot_box
        ->add_option("--metric", box_metric, "metric name, or a comma-separated list")
        ->required();
    plot_box->add_option("-o,--output", box_out, "output SVG path")->required();
    plot_box->callback([&] { run_plot_box(box_input, box_metric, box_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const LoadError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const Error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
}
