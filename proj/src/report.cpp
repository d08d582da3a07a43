#include "liqlab/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "liqlab/errors.hpp"
#include "liqlab/rounding.hpp"

namespace liqlab {

std::string format_fixed(double value, int digits) {
    // Built from the half-up-rounded scaled integer, so the rounding rule
    // decides the last digit rather than the formatter's tie-breaking.
    const double scale = std::pow(10.0, digits);
    const double scaled = round_half_up(value * scale);
    if (std::abs(scaled) < 9.0e18) {
        const auto units = static_cast<long long>(scaled);
        const bool negative = units < 0;
        auto magnitude = static_cast<unsigned long long>(units);
        if (negative) magnitude = 0ull - magnitude;
        std::string text = fmt::format("{}", magnitude);
        if (digits > 0) {
            const auto places = static_cast<std::size_t>(digits);
            if (text.size() <= places)
                text.insert(0, places + 1 - text.size(), '0');
            text.insert(text.size() - places, 1, '.');
        }
        if (negative && magnitude != 0) text.insert(0, 1, '-');
        return text;
    }
    return fmt::format("{:.{}f}", scaled / scale, digits);
}

namespace {

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string escaped = "\"";
    for (const char c : cell) {
        if (c == '"') escaped += '"';
        escaped += c;
    }
    escaped += '"';
    return escaped;
}

/// One row of the scenario table: labels plus a per-column cell producer.
struct ScenarioRow {
    std::string label;    // text rendering
    std::string key;      // csv rendering
    std::function<std::string(std::size_t)> cell;
};

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<ScenarioRow>& rows,
                         std::size_t columns, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::csv) {
        out += "metric";
        for (const auto& header : headers) out += "," + csv_escape(header);
        out += '\n';
        for (const auto& row : rows) {
            out += row.key;
            for (std::size_t i = 0; i < columns; ++i)
                out += "," + csv_escape(row.cell(i));
            out += '\n';
        }
        return out;
    }

    std::size_t label_width = 0;
    for (const auto& row : rows) label_width = std::max(label_width, row.label.size());
    std::vector<std::size_t> widths(columns);
    for (std::size_t i = 0; i < columns; ++i) {
        widths[i] = headers[i].size();
        for (const auto& row : rows)
            widths[i] = std::max(widths[i], row.cell(i).size());
    }

    out += fmt::format("{:<{}}", "", label_width);
    for (std::size_t i = 0; i < columns; ++i)
        out += fmt::format("  {:>{}}", headers[i], widths[i]);
    out += '\n';
    for (const auto& row : rows) {
        out += fmt::format("{:<{}}", row.label, label_width);
        for (std::size_t i = 0; i < columns; ++i)
            out += fmt::format("  {:>{}}", row.cell(i), widths[i]);
        out += '\n';
    }
    return out;
}

}  // namespace

std::string render_scenario(const ComparisonResult& result,
                            const std::vector<StrategyProfile>& profiles,
                            OutputFormat format) {
    const auto& outcomes = result.outcomes;
    const std::size_t n = outcomes.size();
    if (n == 0) throw ValidationError("scenario", "nothing to render");
    if (profiles.size() != n)
        throw ValidationError("scenario", "profile list does not match outcomes");

    std::vector<std::string> headers;
    headers.reserve(n);
    for (const auto& outcome : outcomes) headers.push_back(outcome.name);

    bool any_degenerate = false;
    for (const auto& outcome : outcomes)
        any_degenerate |= outcome.long_rate_degenerate || outcome.short_rate_degenerate;

    const auto currency = [&](double DerivedStatement::*field) {
        return [&outcomes, field](std::size_t i) {
            return format_fixed(outcomes[i].statement.*field, 2);
        };
    };
    const auto percent = [&](double StrategyOutcome::*field) {
        return [&outcomes, field](std::size_t i) {
            return format_fixed(outcomes[i].*field * 100.0, 2);
        };
    };
    const auto beta = [&](double StrategyOutcome::*field) {
        return [&outcomes, field](std::size_t i) {
            return format_fixed(outcomes[i].*field, 6);
        };
    };
    // Degenerate (negative) debt rates keep their value and get a marker in
    // the text table; CSV carries the flags as their own rows instead.
    const bool mark_in_text = format == OutputFormat::text;
    const auto rate = [&, mark_in_text](double StrategyOutcome::*field,
                                        bool StrategyOutcome::*flag) {
        return [&outcomes, field, flag, mark_in_text](std::size_t i) {
            std::string cell = format_fixed(outcomes[i].*field * 100.0, 2);
            if (mark_in_text && outcomes[i].*flag) cell += '*';
            return cell;
        };
    };
    const auto flag = [&](bool StrategyOutcome::*field) {
        return [&outcomes, field](std::size_t i) {
            return std::string(outcomes[i].*field ? "true" : "false");
        };
    };

    std::vector<ScenarioRow> rows = {
        {"Cash revenues", "cash_revenues", currency(&DerivedStatement::cash_revenues)},
        {"Fixed assets", "fixed_assets", currency(&DerivedStatement::fixed_assets)},
        {"Current assets", "current_assets", currency(&DerivedStatement::current_assets)},
        {"Total assets", "total_assets", currency(&DerivedStatement::total_assets)},
        {"Accounts payable", "accounts_payable",
         currency(&DerivedStatement::accounts_payable)},
        {"Capital invested", "capital_invested",
         currency(&DerivedStatement::capital_invested)},
        {"Equity", "equity", currency(&DerivedStatement::equity)},
        {"Long-term debt", "long_term_debt", currency(&DerivedStatement::long_term_debt)},
        {"Short-term debt", "short_term_debt",
         currency(&DerivedStatement::short_term_debt)},
        {"EBIT share of revenues (%)", "ebit_share_pct",
         [&profiles](std::size_t i) {
             return format_fixed(profiles[i].ebit_share * 100.0, 2);
         }},
        {"EBIT", "ebit", currency(&DerivedStatement::ebit)},
        {"Recurring free cash flow", "fcf_recurring",
         currency(&DerivedStatement::fcf_recurring)},
        {"Initial free cash flow", "fcf_initial", currency(&DerivedStatement::fcf_initial)},
        {"SZ premium", "sz_premium", beta(&StrategyOutcome::sz_premium)},
        {"Leveraged beta", "leveraged_beta", beta(&StrategyOutcome::leveraged_beta)},
        {"Corrected beta", "corrected_beta", beta(&StrategyOutcome::corrected_beta)},
        {"Cost of equity (%)", "cost_of_equity_pct", percent(&StrategyOutcome::cost_of_equity)},
        {"Long-term debt rate (%)", "long_debt_rate_pct",
         rate(&StrategyOutcome::long_debt_rate, &StrategyOutcome::long_rate_degenerate)},
        {"Short-term debt rate (%)", "short_debt_rate_pct",
         rate(&StrategyOutcome::short_debt_rate, &StrategyOutcome::short_rate_degenerate)},
        {"Cost of capital (%)", "cost_of_capital_pct",
         percent(&StrategyOutcome::cost_of_capital)},
        {"Economic result", "economic_result",
         [&outcomes](std::size_t i) {
             return format_fixed(outcomes[i].economic_result, 2);
         }},
    };

    if (format == OutputFormat::csv) {
        rows.push_back({"", "long_debt_rate_degenerate",
                        flag(&StrategyOutcome::long_rate_degenerate)});
        rows.push_back({"", "short_debt_rate_degenerate",
                        flag(&StrategyOutcome::short_rate_degenerate)});
        rows.push_back({"", "is_best_economic_result", [&result](std::size_t i) {
                            return std::string(i == result.best_economic_result
                                                   ? "true"
                                                   : "false");
                        }});
        rows.push_back({"", "is_lowest_cost_of_capital", [&result](std::size_t i) {
                            return std::string(i == result.lowest_cost_of_capital
                                                   ? "true"
                                                   : "false");
                        }});
        return render_table(headers, rows, n, format);
    }

    std::string out = render_table(headers, rows, n, format);
    out += '\n';
    out += fmt::format("Best economic result: {}\n", result.best_economic_result_label());
    out += fmt::format("Lowest cost of capital: {}\n",
                       result.lowest_cost_of_capital_label());
    if (any_degenerate)
        out += "* negative debt rate, reported unclamped\n";
    return out;
}

const std::vector<std::string>& default_stats_metrics() {
    static const std::vector<std::string> metrics = {
        "receivables_period", "payables_period", "inventory_period",
        "current_ratio",      "quick_ratio",     "cash_ratio",
    };
    return metrics;
}

StatsReport compute_stats(const Dataset& ds, GroupBy group_by,
                          const std::vector<std::string>& metrics,
                          double trim_fraction, double winsor_fraction,
                          const IndicatorPolicy& policy) {
    const auto& wanted = metrics.empty() ? default_stats_metrics() : metrics;
    const auto& known = column_names();
    for (const auto& metric : wanted)
        if (std::find(known.begin(), known.end(), metric) == known.end())
            throw ValidationError("metrics", fmt::format("unknown metric \"{}\"", metric));

    StatsReport report;
    report.trim_fraction = trim_fraction;
    report.winsor_fraction = winsor_fraction;
    report.policy = policy;

    const auto add_group = [&](std::string label, const Dataset& group) {
        StatsGroup stats_group;
        stats_group.label = std::move(label);
        for (const auto& metric : wanted)
            stats_group.metrics.emplace_back(
                metric, summarize(column(group, metric, policy), trim_fraction,
                                  winsor_fraction));
        report.groups.push_back(std::move(stats_group));
    };

    switch (group_by) {
        case GroupBy::none:
            add_group("all", ds);
            break;
        case GroupBy::sector: {
            std::set<std::string> labels;
            for (const auto& record : ds.records)
                labels.insert(record.sectors.begin(), record.sectors.end());
            for (const auto& label : labels)
                add_group(label, filter(ds, label, std::nullopt));
            break;
        }
        case GroupBy::year: {
            std::set<int> years;
            for (const auto& record : ds.records) years.insert(record.year);
            for (const int year : years)
                add_group(fmt::format("{}", year), filter(ds, std::nullopt, year));
            break;
        }
    }
    return report;
}

namespace {

constexpr std::string_view kAbsentCell = "–";

std::string stat_cell(const std::optional<double>& value, OutputFormat format) {
    if (!value) return format == OutputFormat::text ? std::string(kAbsentCell) : "";
    return format == OutputFormat::text ? format_fixed(*value, 4)
                                        : fmt::format("{}", *value);
}

std::string cl_definition_name(CurrentLiabilities definition) {
    return definition == CurrentLiabilities::short_debt_plus_payables
               ? "short-term debt + accounts payable"
               : "short-term debt only";
}

}  // namespace

std::string render_stats(const StatsReport& report, OutputFormat format) {
    using Getter = std::optional<double> SummaryRow::*;
    static const std::vector<std::pair<std::string, Getter>> kStatRows = {
        {"Average", &SummaryRow::average},
        {"Standard deviation", &SummaryRow::sd},
        {"Median", &SummaryRow::median},
        {"Truncated mean", &SummaryRow::truncated_mean},
        {"Winsorized mean", &SummaryRow::winsorized_mean},
        {"Skewness", &SummaryRow::skewness},
        {"Maximum", &SummaryRow::maximum},
        {"Minimum", &SummaryRow::minimum},
    };

    std::string out;
    if (format == OutputFormat::csv) {
        out += "group,metric,size,average,sd,median,truncated_mean,winsorized_mean,"
               "skewness,maximum,minimum,trim_fraction,winsor_fraction\n";
        for (const auto& group : report.groups) {
            for (const auto& [metric, row] : group.metrics) {
                out += csv_escape(group.label) + "," + metric + "," +
                       fmt::format("{}", row.size);
                for (const auto& [name, getter] : kStatRows)
                    out += "," + stat_cell(row.*getter, format);
                out += fmt::format(",{},{}\n", row.trim_fraction, row.winsor_fraction);
            }
        }
        return out;
    }

    out += fmt::format(
        "trim fraction: {}   winsor fraction: {}   day count: {}   "
        "current liabilities: {}\n",
        report.trim_fraction, report.winsor_fraction, report.policy.day_count,
        cl_definition_name(report.policy.cl_definition));
    for (const auto& group : report.groups) {
        out += fmt::format("\ngroup: {}\n", group.label);

        std::vector<ScenarioRow> rows;
        rows.push_back({"Size", "size", [&group](std::size_t i) {
                            return fmt::format("{}", group.metrics[i].second.size);
                        }});
        for (const auto& [name, getter] : kStatRows)
            rows.push_back({name, name, [&group, getter, format](std::size_t i) {
                                return stat_cell(group.metrics[i].second.*getter,
                                                 format);
                            }});
        std::vector<std::string> headers;
        headers.reserve(group.metrics.size());
        for (const auto& [metric, row] : group.metrics) headers.push_back(metric);
        out += render_table(headers, rows, group.metrics.size(), OutputFormat::text);
    }
    return out;
}

}  // namespace liqlab
